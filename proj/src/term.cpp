#include "modcube/term.hpp"

#include <algorithm>

#include "modcube/error.hpp"

namespace modcube {

OneCellChain Generator::source() const {
  switch (kind) {
    case GenKind::Counit:
    case GenKind::Comult:
      return {a};
    case GenKind::Unit:
      return {};
    case GenKind::Mult:
      return {a, a};
    case GenKind::Law:
      return {a, b};
  }
  return {};
}

OneCellChain Generator::target() const {
  switch (kind) {
    case GenKind::Counit:
      return {};
    case GenKind::Comult:
      return {a, a};
    case GenKind::Unit:
    case GenKind::Mult:
      return {a};
    case GenKind::Law:
      return {b, a};
  }
  return {};
}

bool apply_layer(OneCellChain& chain, const Layer& layer) {
  const OneCellChain src = layer.gen.source();
  if (layer.pos > chain.size() || chain.size() - layer.pos < src.size())
    return false;
  if (!std::equal(src.begin(), src.end(), chain.begin() + layer.pos))
    return false;
  const OneCellChain tgt = layer.gen.target();
  chain.erase(chain.begin() + layer.pos, chain.begin() + layer.pos + src.size());
  chain.insert(chain.begin() + layer.pos, tgt.begin(), tgt.end());
  return true;
}

TwoCellTerm::TwoCellTerm(OneCellChain source, std::vector<Layer> layers)
    : source_(std::move(source)), layers_(std::move(layers)) {
  target_ = source_;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    if (!apply_layer(target_, layers_[k]))
      throw Error(ErrorKind::ChainMismatch,
                  "layer " + std::to_string(k) + " (" + render(layers_[k].gen) +
                      " at " + std::to_string(layers_[k].pos) +
                      ") does not fit chain " + render(target_));
  }
}

OneCellChain TwoCellTerm::chain_at(std::size_t k) const {
  OneCellChain chain = source_;
  for (std::size_t i = 0; i < k && i < layers_.size(); ++i)
    apply_layer(chain, layers_[i]);
  return chain;
}

TwoCellTerm TwoCellTerm::whisker(const OneCellChain& left,
                                 const OneCellChain& right) const {
  OneCellChain src = left;
  src.insert(src.end(), source_.begin(), source_.end());
  src.insert(src.end(), right.begin(), right.end());
  std::vector<Layer> layers = layers_;
  for (auto& l : layers) l.pos += left.size();
  return TwoCellTerm(std::move(src), std::move(layers));
}

TwoCellTerm TwoCellTerm::then(const TwoCellTerm& next) const {
  if (next.source_ != target_)
    throw Error(ErrorKind::ChainMismatch, "cannot compose: target " +
                                              render(target_) + " vs source " +
                                              render(next.source_));
  std::vector<Layer> layers = layers_;
  layers.insert(layers.end(), next.layers_.begin(), next.layers_.end());
  return TwoCellTerm(source_, std::move(layers));
}

TwoCellTerm canonical_law(const OneCellChain& moving, const OneCellChain& fixed) {
  OneCellChain src = moving;
  src.insert(src.end(), fixed.begin(), fixed.end());
  std::vector<Layer> layers;
  // Innermost moving operator crosses first.
  for (std::size_t p = moving.size(); p-- > 0;)
    for (std::size_t q = 0; q < fixed.size(); ++q)
      layers.push_back({p + q, Generator::law(moving[p], fixed[q])});
  return TwoCellTerm(std::move(src), std::move(layers));
}

std::string render(const Generator& g) {
  const std::string x = std::to_string(g.a.atom);
  switch (g.kind) {
    case GenKind::Counit: return "counit_" + x;
    case GenKind::Comult: return "comult_" + x;
    case GenKind::Unit: return "unit_" + x;
    case GenKind::Mult: return "mult_" + x;
    case GenKind::Law:
      return "d[" + x + ";" + std::to_string(g.b.atom) + "]";
  }
  return "?";
}

std::string render(const OneCellChain& c) {
  if (c.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += render(c[i]);
  }
  return out;
}

std::string render(const TwoCellTerm& t) {
  if (t.layers().empty()) return "id(" + render(t.source()) + ")";
  std::string out;
  OneCellChain chain = t.source();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Layer& l = t.layers()[k];
    if (k) out += " >> ";
    std::string piece;
    for (std::size_t i = 0; i < l.pos; ++i) piece += render(chain[i]) + " ";
    piece += render(l.gen);
    const std::size_t after = l.pos + l.gen.source().size();
    for (std::size_t i = after; i < chain.size(); ++i)
      piece += " " + render(chain[i]);
    out += piece;
    apply_layer(chain, l);
  }
  return out;
}

std::string key(const TwoCellTerm& t) {
  std::string out;
  for (const auto& l : t.source()) {
    out += l.kind == OpKind::Box ? 'b' : 'd';
    out += std::to_string(l.atom);
  }
  out += '|';
  for (const auto& l : t.layers()) {
    out += std::to_string(l.pos);
    out += ':';
    out += static_cast<char>('0' + static_cast<int>(l.gen.kind));
    out += std::to_string(l.gen.a.atom);
    if (l.gen.kind == GenKind::Law) {
      out += l.gen.a.kind == OpKind::Box ? 'b' : 'd';
      out += ',';
      out += l.gen.b.kind == OpKind::Box ? 'b' : 'd';
      out += std::to_string(l.gen.b.atom);
    }
    out += ' ';
  }
  return out;
}

}  // namespace modcube
