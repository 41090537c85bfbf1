#pragma once

// Indexing language for modalities: atoms, `;`-sequences with unit `eps`,
// and single-atom modal formulas over the propositional letter A.

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modcube {

/// An axis of the ambient cube, doubling as a modality label.
using Atom = unsigned;

/// A normalized index: a flat word of atoms, empty for eps.
class ModIndex {
 public:
  ModIndex() = default;
  explicit ModIndex(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  ModIndex(std::initializer_list<Atom> atoms) : atoms_(atoms) {}

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  Atom operator[](std::size_t i) const { return atoms_[i]; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  /// Sequential composition `this ; rhs`.
  ModIndex then(const ModIndex& rhs) const;

  /// Largest atom, or nullopt for eps.
  std::optional<Atom> max_atom() const;

  friend auto operator<=>(const ModIndex&, const ModIndex&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Raw index syntax tree, before eps elimination and flattening.
struct IndexTree {
  struct Eps {};
  struct Leaf {
    Atom atom;
  };
  struct Seq {
    std::vector<IndexTree> parts;
  };
  std::variant<Eps, Leaf, Seq> node;

  static IndexTree eps() { return {Eps{}}; }
  static IndexTree leaf(Atom a) { return {Leaf{a}}; }
  static IndexTree seq(std::vector<IndexTree> parts) {
    return {Seq{std::move(parts)}};
  }
};

ModIndex normalize_index(const IndexTree& tree);

enum class OpKind { Box, Diamond };

/// One expanded operator: box_i or dia_i with a single atom.
struct Letter {
  OpKind kind;
  Atom atom;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Canonical operator word, outermost operator first. Empty = bare A.
using ModalPrefix = std::vector<Letter>;

/// Operator with a possibly composite index, as written in source text.
struct RawOp {
  OpKind kind;
  ModIndex index;
};

/// box_{i;j} becomes box_i box_j; box_eps and dia_eps vanish.
ModalPrefix expand_prefix(const std::vector<RawOp>& ops);

/// A formula is a modal prefix applied to A.
struct Formula {
  ModalPrefix prefix;
  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;
};

struct AxiomSentence {
  Formula lhs;
  Formula rhs;
  friend bool operator==(const AxiomSentence&, const AxiomSentence&) = default;
  friend auto operator<=>(const AxiomSentence&, const AxiomSentence&) = default;
};

/// Parsing. `arity`, when given, bounds every atom (atom < arity).
ModIndex parse_index(std::string_view text, std::optional<unsigned> arity = {});
Formula parse_formula(std::string_view text, std::optional<unsigned> arity = {});
AxiomSentence parse_axiom(std::string_view text,
                          std::optional<unsigned> arity = {});

/// Parsed input of the `normalize` command: whichever of the three fits.
using AnyTerm = std::variant<ModIndex, Formula, AxiomSentence>;
AnyTerm parse_any(std::string_view text, std::optional<unsigned> arity = {});

std::string render(const ModIndex& idx);
std::string render(const Letter& l);
std::string render(const Formula& f);
std::string render(const AxiomSentence& ax);
std::string render(const AnyTerm& t);

/// Index as it appears inside a law label: `2`, `(0;0)` or `eps`.
std::string render_side(const ModIndex& idx);

}  // namespace modcube
