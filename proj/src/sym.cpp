#include "modcube/sym.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <optional>
#include <tuple>

#include "modcube/error.hpp"

namespace modcube {

Atom apply(Transposition s, Atom a) noexcept {
  if (a == s.k) return a - 1;
  if (a + 1 == s.k) return a + 1;
  return a;
}

void check_transposition(Transposition s, const CategoryMode& mode) {
  if (!mode.symmetric())
    throw Error(ErrorKind::NonSymmetricMode,
                to_string(mode.kind) + " has no transpositions");
  if (s.k < 1 || s.k >= mode.arity)
    throw Error(ErrorKind::TranspositionOutOfRange,
                "s" + std::to_string(s.k) + " needs 1 <= k <= " +
                    std::to_string(mode.arity - 1));
}

namespace {

ModIndex map_index(Transposition s, const ModIndex& x) {
  std::vector<Atom> out;
  out.reserve(x.size());
  for (Atom a : x) out.push_back(apply(s, a));
  return ModIndex(std::move(out));
}

}  // namespace

LawCell act_on_law(Transposition s, const LawCell& d) {
  check_transposition(s, d.mode);
  return make_law(d.mode, map_index(s, d.moving), map_index(s, d.fixed));
}

bool changes_kind(Transposition s, const LawCell& d) {
  return act_on_law(s, d).kind != d.kind;
}

Cube act_on_cube(Transposition s, const Cube& c) {
  check_transposition(s, c.mode());
  return std::visit(
      [&](const auto& x) -> Cube {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cube::Node>) {
          return c;
        } else if constexpr (std::is_same_v<T, Cube::Edge>) {
          return Cube::edge(c.mode(), apply(s, x.axis), map_index(s, x.chain));
        } else if constexpr (std::is_same_v<T, Cube::Square>) {
          return Cube::square(act_on_law(s, x.law), apply(s, x.moving_axis),
                              apply(s, x.fixed_axis));
        } else if constexpr (std::is_same_v<T, Cube::Composite>) {
          return compose(act_on_cube(s, *x.a), act_on_cube(s, *x.b), apply(s, x.dir));
        } else {
          return degeneracy(act_on_cube(s, *x.base), apply(s, x.axis));
        }
      },
      c.content());
}

LawCell act_word(const PermutationWord& w, const LawCell& d) {
  LawCell out = d;
  for (Transposition s : w) out = act_on_law(s, out);
  return out;
}

Cube act_word(const PermutationWord& w, const Cube& c) {
  Cube out = c;
  for (Transposition s : w) out = act_on_cube(s, out);
  return out;
}

PermutationWord parse_word(std::string_view text) {
  PermutationWord w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) return w;
  for (;;) {
    skip();
    if (i >= text.size() || text[i] != 's')
      throw ParseError(i, "expected a generator like s1");
    ++i;
    const std::size_t start = i;
    unsigned k = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      k = k * 10 + static_cast<unsigned>(text[i++] - '0');
    if (i == start) throw ParseError(i, "expected a generator index");
    w.push_back({k});
    skip();
    if (i == text.size()) return w;
    if (text[i] != ',') throw ParseError(i, "expected ','");
    ++i;
  }
}

std::string render(const PermutationWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += 's' + std::to_string(w[i].k);
  }
  return out;
}

std::vector<LawCell> orbit(const LawCell& d) {
  check_transposition({1}, d.mode);
  auto less = [](const LawCell& a, const LawCell& b) {
    return std::tie(a.moving, a.fixed) < std::tie(b.moving, b.fixed);
  };
  std::vector<LawCell> seen{d};
  std::deque<LawCell> queue{d};
  while (!queue.empty()) {
    const LawCell cur = queue.front();
    queue.pop_front();
    for (unsigned k = 1; k < d.mode.arity; ++k) {
      std::optional<LawCell> mapped;
      try {
        mapped = act_on_law({k}, cur);
      } catch (const Error&) {
        continue;
      }
      const LawCell& next = *mapped;
      if (std::find(seen.begin(), seen.end(), next) == seen.end()) {
        seen.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(seen.begin(), seen.end(), less);
  return seen;
}

}  // namespace modcube
