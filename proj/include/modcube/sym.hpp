#pragma once

// The symmetric-group action on law cells and cubes in SDCmd, SDMnd and SEnt.

#include <string>
#include <string_view>
#include <vector>

#include "modcube/cube.hpp"
#include "modcube/dlaw.hpp"

namespace modcube {

/// s_k swaps axes k and k-1; 1 <= k <= arity-1.
struct Transposition {
  unsigned k;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

using PermutationWord = std::vector<Transposition>;

Atom apply(Transposition s, Atom a) noexcept;

/// Throws NonSymmetricMode or TranspositionOutOfRange.
void check_transposition(Transposition s, const CategoryMode& mode);

/// Atom-wise swap on both sides, kind re-inferred. In SEnt a side whose
/// atoms end up with mixed parity throws ShapeMismatch.
LawCell act_on_law(Transposition s, const LawCell& d);
/// True when the action changes the law's kind (SEnt only).
bool changes_kind(Transposition s, const LawCell& d);

Cube act_on_cube(Transposition s, const Cube& c);

/// Applies the generators left to right.
LawCell act_word(const PermutationWord& w, const LawCell& d);
Cube act_word(const PermutationWord& w, const Cube& c);

/// `s1,s2,s1`; the empty string is the empty word. Throws ParseError.
PermutationWord parse_word(std::string_view text);
std::string render(const PermutationWord& w);

/// All cells reachable from d by the action.
std::vector<LawCell> orbit(const LawCell& d);

}  // namespace modcube
