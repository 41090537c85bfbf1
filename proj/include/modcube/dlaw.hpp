#pragma once

// Law cells d_{IJ}: M_I M_J -> M_J M_I, their parity classification, and
// directed / horizontal / vertical composition.

#include <optional>
#include <string>
#include <string_view>

#include "modcube/mode.hpp"
#include "modcube/term.hpp"

namespace modcube {

enum class LawKind { BoxBox, DiaDia, DiaBox, BoxDia };

std::string to_string(LawKind k);
std::optional<LawKind> parse_law_kind(std::string_view text);

/// Kind of the single law d_{ij} in `mode`. In non-symmetric modes i >= j is
/// required (OrderingViolation otherwise).
LawKind classify(Atom i, Atom j, const CategoryMode& mode);

/// Kind from the operator types of the two sides.
LawKind kind_of(OpKind moving, OpKind fixed);

struct LawCell {
  ModIndex moving;  // I, the chain that moves across
  ModIndex fixed;   // J
  LawKind kind;
  CategoryMode mode;

  friend bool operator==(const LawCell&, const LawCell&) = default;
};

/// Validates range, the non-symmetric ordering (every atom of I >= every
/// atom of J) and per-side uniformity; infers the kind.
LawCell make_law(const CategoryMode& mode, ModIndex moving, ModIndex fixed);

/// Label with both sides sorted; used only for deduplication keys.
LawCell indexing_normal_form(const LawCell& d);

/// `d[I;J]`, composite sides parenthesized.
std::string render(const LawCell& d);
/// Parses `d[I;J]` (or `d_{I;J}`) with sides `eps`, an atom, or `( index )`.
LawCell parse_law(std::string_view text, const CategoryMode& mode);

/// Directed composition d1 +_dir d2. If dir occurs in d1's moving side the
/// moving sides concatenate (I2;I1) and the fixed sides must agree;
/// otherwise if dir occurs in d1's fixed side the fixed sides concatenate
/// (J2;J1) and the moving sides must agree.
LawCell compose_dir(const LawCell& d1, const LawCell& d2, Atom dir);

/// A law label together with an explicit 2-cell realizing it.
struct LawComposite {
  LawCell label;
  TwoCellTerm term;
};

/// The generator grid realizing a single (possibly composite-indexed) cell.
TwoCellTerm law_term(const LawCell& d);
LawComposite as_composite(const LawCell& d);

/// (a | b) = J_b a . b J_a : I J_b J_a -> J_b J_a I. Needs equal moving sides.
LawComposite compose_h(const LawComposite& a, const LawComposite& b);
/// (a / b) = b I_a . I_b a : I_b I_a J -> J I_b I_a. Needs equal fixed sides.
LawComposite compose_v(const LawComposite& a, const LawComposite& b);

enum class SpecialKind { IdentitySquare, LeftUnit, RightUnit };

/// Special iso-cells. LeftUnit(X) is d_{X;eps}, RightUnit(X) is d_{eps;X},
/// both realized by the identity 2-cell; IdentitySquare(i) is 1 on N_i N_i.
LawComposite special_cell(SpecialKind kind, const CategoryMode& mode,
                          const ModIndex& index);

/// Reads a law as an axiom: M_I M_J A -> M_J M_I A.
AxiomSentence as_axiom(const LawCell& d);

}  // namespace modcube
