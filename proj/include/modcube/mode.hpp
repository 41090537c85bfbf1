#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modcube/modlang.hpp"

namespace modcube {

/// The six multiple categories: comonads only, monads only, or mixed by
/// axis parity; each with or without the symmetric-group action.
enum class ModeKind { DCmd, SDCmd, DMnd, SDMnd, Ent, SEnt };

struct CategoryMode {
  ModeKind kind;
  unsigned arity;

  /// Throws ArityViolation when arity is 0, or < 2 for symmetric kinds.
  CategoryMode(ModeKind kind, unsigned arity);

  bool symmetric() const noexcept;

  /// Operator carried by an axis: box for comonads, dia for monads.
  /// In Ent/SEnt even axes are comonads and odd axes are monads.
  OpKind op_for(Atom a) const noexcept;
  Letter letter(Atom a) const noexcept { return {op_for(a), a}; }

  /// Throws IndexOutOfRange unless a < arity.
  void check_atom(Atom a) const;
  void check_index(const ModIndex& idx) const;

  friend bool operator==(const CategoryMode&, const CategoryMode&) = default;
};

std::string to_string(ModeKind kind);
std::optional<ModeKind> parse_mode_kind(std::string_view text);

/// Box-or-diamond word for an index under a mode.
ModalPrefix letters(const CategoryMode& mode, const ModIndex& idx);

}  // namespace modcube
