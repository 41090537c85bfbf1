#pragma once

// Formal 2-cells: vertical sequences of whiskered generator layers between
// operator chains. These are the objects the pasting checker rewrites.

#include <compare>
#include <string>
#include <vector>

#include "modcube/modlang.hpp"

namespace modcube {

/// Operator composition, outermost first; empty is the identity 1-cell.
using OneCellChain = std::vector<Letter>;

enum class GenKind { Counit, Comult, Unit, Mult, Law };

/// A generating 2-cell. For laws, `a` is the moving operator and `b` the
/// fixed one: a b -> b a. The other kinds only use `a`.
struct Generator {
  GenKind kind;
  Letter a;
  Letter b{OpKind::Box, 0};

  static Generator counit(Atom x) { return {GenKind::Counit, {OpKind::Box, x}}; }
  static Generator comult(Atom x) { return {GenKind::Comult, {OpKind::Box, x}}; }
  static Generator unit(Atom x) { return {GenKind::Unit, {OpKind::Diamond, x}}; }
  static Generator mult(Atom x) { return {GenKind::Mult, {OpKind::Diamond, x}}; }
  static Generator law(Letter moving, Letter fixed) {
    return {GenKind::Law, moving, fixed};
  }

  OneCellChain source() const;
  OneCellChain target() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A generator acting at offset `pos` of the current chain.
struct Layer {
  std::size_t pos;
  Generator gen;
  friend auto operator<=>(const Layer&, const Layer&) = default;
};

class TwoCellTerm {
 public:
  TwoCellTerm() = default;
  /// Throws ChainMismatch if a layer does not fit the chain it acts on.
  TwoCellTerm(OneCellChain source, std::vector<Layer> layers);

  static TwoCellTerm identity(OneCellChain chain) {
    return TwoCellTerm(std::move(chain), {});
  }
  static TwoCellTerm generator(const Generator& g) {
    return TwoCellTerm(g.source(), {Layer{0, g}});
  }

  const OneCellChain& source() const noexcept { return source_; }
  const OneCellChain& target() const noexcept { return target_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  std::size_t size() const noexcept { return layers_.size(); }

  /// Chain before layer k (k == size() gives the target).
  OneCellChain chain_at(std::size_t k) const;

  /// L t R.
  TwoCellTerm whisker(const OneCellChain& left, const OneCellChain& right) const;
  /// Vertical composite: this first, then `next`. Throws ChainMismatch.
  TwoCellTerm then(const TwoCellTerm& next) const;

  friend bool operator==(const TwoCellTerm& a, const TwoCellTerm& b) {
    return a.source_ == b.source_ && a.layers_ == b.layers_;
  }
  friend auto operator<=>(const TwoCellTerm& a, const TwoCellTerm& b) {
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    return a.layers_ <=> b.layers_;
  }

 private:
  OneCellChain source_;
  std::vector<Layer> layers_;
  OneCellChain target_;
};

/// Applies `layer` to `chain`, or returns false when it does not fit.
bool apply_layer(OneCellChain& chain, const Layer& layer);

/// The grid composite moving every operator of `moving` past every operator
/// of `fixed` with single generator laws: moving;fixed -> fixed;moving.
TwoCellTerm canonical_law(const OneCellChain& moving, const OneCellChain& fixed);

std::string render(const Generator& g);
std::string render(const OneCellChain& c);
/// Layers in application order, e.g. `d[1;0] box_0 >> box_0 d[1;0]`.
std::string render(const TwoCellTerm& t);
/// Compact stable key used for hashing and deduplication.
std::string key(const TwoCellTerm& t);

}  // namespace modcube
