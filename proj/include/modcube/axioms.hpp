#pragma once

// Incestual axioms: Geach forms, bounded generation from the (co)monad and
// law generators of a mode, family classification, and comparison with the
// published axiom boxes.

#include <optional>
#include <string>
#include <vector>

#include "modcube/mode.hpp"
#include "modcube/sym.hpp"
#include "modcube/term.hpp"

namespace modcube {

/// dia_a box_b A -> box_c dia_d A.
struct GeachAxiom {
  ModIndex a, b, c, d;
  friend auto operator<=>(const GeachAxiom&, const GeachAxiom&) = default;
};

AxiomSentence geach_to_sentence(const GeachAxiom& g);
/// Defined when the lhs is dia* box* and the rhs is box* dia*.
std::optional<GeachAxiom> sentence_to_geach(const AxiomSentence& s);
/// `G^{a,b,c,d}` with sides rendered like law sides.
std::string render(const GeachAxiom& g);

enum class AxiomFamily {
  Reflexivity,
  Transitivity,
  RestrictedPersistency,
  GeneralPersistency,
  Composition,
  Seriality,
  McKinsey,
  K,
  Unnamed
};

std::string to_string(AxiomFamily f);

/// Family by sentence shape. Without a mode a swap of like operators is
/// Restricted when the moving atom is larger; with a mode the symmetric
/// kinds give General and the others Restricted.
AxiomFamily classify(const AxiomSentence& s,
                     const std::optional<CategoryMode>& mode = std::nullopt);

/// Where a law generator came from: a non-symmetric seed moved by a word.
struct LawOrigin {
  Generator law;
  Generator seed;
  PermutationWord word;
};

/// A 2-cell from the lhs chain to the rhs chain, plus law provenance.
struct Witness {
  TwoCellTerm term;
  std::vector<LawOrigin> origins;
};

struct DerivedAxiom {
  AxiomSentence sentence;
  std::optional<GeachAxiom> geach;
  AxiomFamily family;
  Witness witness;
};

/// Generators available in a mode: counit/comult on box axes, unit/mult on
/// dia axes, laws on distinct pairs (moving > fixed unless symmetric).
std::vector<Generator> mode_generators(const CategoryMode& mode);

/// Every non-tautological sentence realized by at most `depth` generator
/// layers through chains of length <= depth + 1. Sorted by rendering, one
/// entry per sentence, each with its first breadth-first witness.
std::vector<DerivedAxiom> generate(const CategoryMode& mode, unsigned depth);

/// Re-checks a witness in `mode`: every layer is a mode generator, every law
/// origin reproduces its law, and the term runs from lhs to rhs.
bool replay(const DerivedAxiom& ax, const CategoryMode& mode);

/// One item of a published box. Templates use the variables i and j.
struct BoxEntry {
  std::string label;
  AxiomFamily family;
  std::optional<std::vector<std::string>> geach;  // slots a, b, c, d
  std::string printed;                            // as printed, ASCII
  enum class Order { None, IGreater, JGreater } order = Order::None;
};

struct Box {
  ModeKind mode;
  /// True when the box labels read dia_d A -> dia_a A (a and d exchanged).
  bool swapped_reading = false;
  std::vector<BoxEntry> entries;
};

/// The six published boxes.
const std::vector<Box>& published_boxes();
const Box& published_box(ModeKind mode);

/// Instantiations of an entry at `arity`: the printed sentence when it is
/// well formed, else the standard reading of its Geach label.
std::vector<AxiomSentence> instantiate(const Box& box, const BoxEntry& e,
                                       unsigned arity);

struct EntryReport {
  std::string label;
  AxiomFamily family;
  bool flagged = false;
  std::string reason;
  std::vector<std::string> expected;
  std::vector<std::string> missing;
};

struct DiscrepancyReport {
  ModeKind mode;
  unsigned arity;
  std::vector<EntryReport> entries;
  std::size_t matched = 0;
  std::size_t flagged = 0;
  std::vector<std::string> paper_only;
  std::vector<std::string> engine_only;
};

DiscrepancyReport diff_against_paper(const CategoryMode& mode, unsigned depth = 2);

}  // namespace modcube
