#include "modcube/mode.hpp"

#include <algorithm>
#include <cctype>

#include "modcube/error.hpp"

namespace modcube {

CategoryMode::CategoryMode(ModeKind k, unsigned n) : kind(k), arity(n) {
  if (n == 0) throw Error(ErrorKind::ArityViolation, "arity must be at least 1");
  if (symmetric() && n < 2)
    throw Error(ErrorKind::ArityViolation,
                "symmetric modes need arity >= 2 (no transpositions below)");
}

bool CategoryMode::symmetric() const noexcept {
  return kind == ModeKind::SDCmd || kind == ModeKind::SDMnd ||
         kind == ModeKind::SEnt;
}

OpKind CategoryMode::op_for(Atom a) const noexcept {
  switch (kind) {
    case ModeKind::DCmd:
    case ModeKind::SDCmd:
      return OpKind::Box;
    case ModeKind::DMnd:
    case ModeKind::SDMnd:
      return OpKind::Diamond;
    case ModeKind::Ent:
    case ModeKind::SEnt:
      return a % 2 == 0 ? OpKind::Box : OpKind::Diamond;
  }
  return OpKind::Box;
}

void CategoryMode::check_atom(Atom a) const {
  if (a >= arity)
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(a) + " out of range for arity " +
                    std::to_string(arity));
}

void CategoryMode::check_index(const ModIndex& idx) const {
  for (Atom a : idx) check_atom(a);
}

std::string to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::DCmd: return "dcmd";
    case ModeKind::SDCmd: return "sdcmd";
    case ModeKind::DMnd: return "dmnd";
    case ModeKind::SDMnd: return "sdmnd";
    case ModeKind::Ent: return "ent";
    case ModeKind::SEnt: return "sent";
  }
  return "?";
}

std::optional<ModeKind> parse_mode_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ModeKind k : {ModeKind::DCmd, ModeKind::SDCmd, ModeKind::DMnd,
                     ModeKind::SDMnd, ModeKind::Ent, ModeKind::SEnt})
    if (lower == to_string(k)) return k;
  return std::nullopt;
}

ModalPrefix letters(const CategoryMode& mode, const ModIndex& idx) {
  ModalPrefix out;
  out.reserve(idx.size());
  for (Atom a : idx) out.push_back(mode.letter(a));
  return out;
}

}  // namespace modcube
