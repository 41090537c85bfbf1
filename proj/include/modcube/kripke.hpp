#pragma once

// Finite multimodal Kripke frames: the semantic oracle for generated axioms.
// Worlds are bit positions, so a frame has at most kMaxWorlds worlds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcube/axioms.hpp"
#include "modcube/modlang.hpp"

namespace modcube {

using WorldSet = std::uint32_t;
constexpr unsigned kMaxWorlds = 16;

struct Frame {
  unsigned worlds = 1;
  /// succ[i][w]: R_i-successors of w.
  std::vector<std::vector<WorldSet>> succ;

  /// Throws UnknownWorld when worlds is 0 or above kMaxWorlds.
  Frame(unsigned worlds, unsigned relations);
  unsigned relations() const noexcept { return static_cast<unsigned>(succ.size()); }
  void add(Atom i, unsigned from, unsigned to);
  bool related(Atom i, unsigned from, unsigned to) const;
  WorldSet all() const noexcept { return worlds >= 32 ? ~0u : (1u << worlds) - 1; }

  /// Relation bits in (relation, from, to) order, lowest bit first.
  static Frame decode(std::uint64_t code, unsigned worlds, unsigned relations);

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Extension of A.
using Valuation = WorldSet;

/// Worlds where f holds. Throws IndexOutOfRange for a missing relation.
WorldSet extension(const Formula& f, const Frame& fr, Valuation v);
/// Throws UnknownWorld or IndexOutOfRange.
bool eval(const Formula& f, const Frame& fr, Valuation v, unsigned w);
/// Brute force over all valuations.
bool valid_on(const AxiomSentence& ax, const Frame& fr);

/// Successor sets of the composite relation; eps is the identity.
std::vector<WorldSet> relation(const Frame& fr, const ModIndex& idx);
/// wR_a u and wR_c v imply some x with uR_b x and vR_d x.
bool geach_condition(const Frame& fr, const GeachAxiom& g);

struct Countermodel {
  Frame frame;
  Valuation valuation;
  unsigned world;
};

/// Relations needed to interpret a sentence (at least one).
unsigned relations_needed(const AxiomSentence& ax);

/// Frames with more than this many relation bits are not enumerated.
constexpr unsigned kMaxFrameBits = 30;

namespace serial {
/// Smallest frame (by world count, then code) falsifying ax. Throws
/// ShapeMismatch when a frame size within the bound exceeds kMaxFrameBits.
std::optional<Countermodel> countermodel_search(const AxiomSentence& ax,
                                                unsigned max_worlds);
/// Frames with at most max_worlds worlds where the Geach condition holds but
/// the sentence is not valid.
std::uint64_t soundness_violations(const GeachAxiom& g, unsigned max_worlds,
                                   unsigned relations);
}  // namespace serial

namespace parallel {
std::optional<Countermodel> countermodel_search(const AxiomSentence& ax,
                                                unsigned max_worlds);
std::uint64_t soundness_violations(const GeachAxiom& g, unsigned max_worlds,
                                   unsigned relations);
}  // namespace parallel

/// Parallel by default; both namespaces give identical results.
inline std::optional<Countermodel> countermodel_search(const AxiomSentence& ax,
                                                       unsigned max_worlds) {
  return parallel::countermodel_search(ax, max_worlds);
}

/// Soundness on `samples` random frames with `worlds` worlds.
std::uint64_t sampled_soundness_violations(const GeachAxiom& g, unsigned worlds,
                                           unsigned relations, std::uint64_t samples,
                                           std::uint64_t seed);

/// {"worlds": n, "relations": {"0": [[u, v], ...], ...}}
std::string frame_to_json(const Frame& fr);
/// Throws Io on malformed input, UnknownWorld on out-of-range worlds.
Frame frame_from_json(const std::string& text);

}  // namespace modcube
