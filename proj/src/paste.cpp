#include "modcube/paste.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>

#include "modcube/error.hpp"

namespace modcube {

namespace {

OneCellChain concat(const OneCellChain& a, const OneCellChain& b) {
  OneCellChain out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

OneCellChain erase_at(OneCellChain c, std::size_t p) {
  c.erase(c.begin() + p);
  return c;
}

OneCellChain dup_at(OneCellChain c, std::size_t p) {
  c.insert(c.begin() + p, c[p]);
  return c;
}

TwoCellTerm single(const OneCellChain& chain, std::size_t pos, Generator g) {
  return TwoCellTerm(chain, {Layer{pos, g}});
}

}  // namespace

std::vector<Diagram> law_diagrams(const OneCellChain& moving,
                                  const OneCellChain& fixed,
                                  const TwoCellTerm& t) {
  const std::size_t ni = moving.size();
  const std::size_t nj = fixed.size();
  const OneCellChain src = concat(moving, fixed);
  std::vector<Diagram> out;
  for (std::size_t p = 0; p < ni; ++p) {
    const Letter x = moving[p];
    const std::string at = "[" + std::to_string(p) + "]";
    const OneCellChain minus = erase_at(moving, p);
    const OneCellChain dup = dup_at(moving, p);
    if (x.kind == OpKind::Box) {
      out.push_back({"counit-moving" + at,
                     t.then(single(t.target(), nj + p, Generator::counit(x.atom))),
                     single(src, p, Generator::counit(x.atom))
                         .then(canonical_law(minus, fixed))});
      out.push_back({"comult-moving" + at,
                     t.then(single(t.target(), nj + p, Generator::comult(x.atom))),
                     single(src, p, Generator::comult(x.atom))
                         .then(canonical_law(dup, fixed))});
    } else {
      const TwoCellTerm grid_minus = canonical_law(minus, fixed);
      out.push_back({"unit-moving" + at,
                     single(concat(minus, fixed), p, Generator::unit(x.atom)).then(t),
                     grid_minus.then(single(grid_minus.target(), nj + p,
                                            Generator::unit(x.atom)))});
      const TwoCellTerm grid_dup = canonical_law(dup, fixed);
      out.push_back({"mult-moving" + at,
                     single(concat(dup, fixed), p, Generator::mult(x.atom)).then(t),
                     grid_dup.then(single(grid_dup.target(), nj + p,
                                          Generator::mult(x.atom)))});
    }
  }
  for (std::size_t q = 0; q < nj; ++q) {
    const Letter y = fixed[q];
    const std::string at = "[" + std::to_string(q) + "]";
    const OneCellChain minus = erase_at(fixed, q);
    const OneCellChain dup = dup_at(fixed, q);
    if (y.kind == OpKind::Box) {
      out.push_back({"counit-fixed" + at,
                     t.then(single(t.target(), q, Generator::counit(y.atom))),
                     single(src, ni + q, Generator::counit(y.atom))
                         .then(canonical_law(moving, minus))});
      out.push_back({"comult-fixed" + at,
                     t.then(single(t.target(), q, Generator::comult(y.atom))),
                     single(src, ni + q, Generator::comult(y.atom))
                         .then(canonical_law(moving, dup))});
    } else {
      const TwoCellTerm grid_minus = canonical_law(moving, minus);
      out.push_back({"unit-fixed" + at,
                     single(concat(moving, minus), ni + q, Generator::unit(y.atom))
                         .then(t),
                     grid_minus.then(
                         single(grid_minus.target(), q, Generator::unit(y.atom)))});
      const TwoCellTerm grid_dup = canonical_law(moving, dup);
      out.push_back({"mult-fixed" + at,
                     single(concat(moving, dup), ni + q, Generator::mult(y.atom))
                         .then(t),
                     grid_dup.then(
                         single(grid_dup.target(), q, Generator::mult(y.atom)))});
    }
  }
  return out;
}

std::vector<Diagram> rules_for(const std::vector<Letter>& letters,
                               const std::vector<Generator>& laws) {
  std::vector<Diagram> out;
  for (const Letter& x : letters) {
    const std::string tag = "[" + render(x) + "]";
    const OneCellChain one{x};
    if (x.kind == OpKind::Box) {
      const auto d = Generator::comult(x.atom);
      const auto e = Generator::counit(x.atom);
      out.push_back({"counit-left" + tag, TwoCellTerm(one, {{0, d}, {0, e}}),
                     TwoCellTerm::identity(one)});
      out.push_back({"counit-right" + tag, TwoCellTerm(one, {{0, d}, {1, e}}),
                     TwoCellTerm::identity(one)});
      out.push_back({"coassoc" + tag, TwoCellTerm(one, {{0, d}, {0, d}}),
                     TwoCellTerm(one, {{0, d}, {1, d}})});
    } else {
      const auto u = Generator::unit(x.atom);
      const auto m = Generator::mult(x.atom);
      out.push_back({"unit-left" + tag, TwoCellTerm(one, {{0, u}, {0, m}}),
                     TwoCellTerm::identity(one)});
      out.push_back({"unit-right" + tag, TwoCellTerm(one, {{1, u}, {0, m}}),
                     TwoCellTerm::identity(one)});
      out.push_back({"assoc" + tag, TwoCellTerm({x, x, x}, {{0, m}, {0, m}}),
                     TwoCellTerm({x, x, x}, {{1, m}, {0, m}})});
    }
  }
  for (const Generator& g : laws) {
    for (auto& dg : law_diagrams({g.a}, {g.b}, TwoCellTerm::generator(g))) {
      dg.name = render(g) + "." + dg.name;
      out.push_back(std::move(dg));
    }
  }
  return out;
}

void collect_alphabet(const TwoCellTerm& t, std::vector<Letter>& letters,
                      std::vector<Generator>& laws) {
  auto add_letter = [&](const Letter& l) {
    if (std::find(letters.begin(), letters.end(), l) == letters.end())
      letters.push_back(l);
  };
  for (const auto& l : t.source()) add_letter(l);
  for (const auto& layer : t.layers()) {
    add_letter(layer.gen.a);
    if (layer.gen.kind == GenKind::Law) {
      add_letter(layer.gen.b);
      if (std::find(laws.begin(), laws.end(), layer.gen) == laws.end())
        laws.push_back(layer.gen);
    }
  }
}

namespace {

std::optional<TwoCellTerm> swap_layers(const TwoCellTerm& t, std::size_t k,
                                       bool left_case) {
  if (k + 1 >= t.size()) return std::nullopt;
  const Layer& l1 = t.layers()[k];
  const Layer& l2 = t.layers()[k + 1];
  const std::size_t w1 = l1.gen.source().size();
  const std::size_t v1 = l1.gen.target().size();
  const std::size_t w2 = l2.gen.source().size();
  const std::size_t v2 = l2.gen.target().size();
  Layer n1, n2;
  if (left_case) {
    if (l2.pos + w2 > l1.pos) return std::nullopt;
    n1 = {l2.pos, l2.gen};
    n2 = {l1.pos + v2 - w2, l1.gen};
  } else {
    if (l2.pos < l1.pos + v1) return std::nullopt;
    n1 = {l2.pos - v1 + w1, l2.gen};
    n2 = {l1.pos, l1.gen};
  }
  std::vector<Layer> layers = t.layers();
  layers[k] = n1;
  layers[k + 1] = n2;
  return TwoCellTerm(t.source(), std::move(layers));
}

// Offset at which `pattern` matches t's layers starting at k, if any.
std::optional<std::size_t> match(const TwoCellTerm& t, std::size_t k,
                                 const TwoCellTerm& pattern) {
  const auto& pl = pattern.layers();
  if (pl.empty() || k + pl.size() > t.size()) return std::nullopt;
  const Layer& first = t.layers()[k];
  if (first.pos < pl[0].pos) return std::nullopt;
  const std::size_t off = first.pos - pl[0].pos;
  for (std::size_t r = 0; r < pl.size(); ++r) {
    const Layer& l = t.layers()[k + r];
    if (!(l.gen == pl[r].gen) || l.pos != pl[r].pos + off) return std::nullopt;
  }
  const OneCellChain chain = t.chain_at(k);
  const auto& src = pattern.source();
  if (off + src.size() > chain.size()) return std::nullopt;
  if (!std::equal(src.begin(), src.end(), chain.begin() + off)) return std::nullopt;
  return off;
}

TwoCellTerm replace(const TwoCellTerm& t, std::size_t k, std::size_t off,
                    std::size_t removed, const TwoCellTerm& with) {
  std::vector<Layer> layers(t.layers().begin(), t.layers().begin() + k);
  for (Layer l : with.layers()) {
    l.pos += off;
    layers.push_back(l);
  }
  layers.insert(layers.end(), t.layers().begin() + k + removed, t.layers().end());
  return TwoCellTerm(t.source(), std::move(layers));
}

const Diagram& find_rule(const std::vector<Diagram>& rules,
                         const std::string& name) {
  for (const auto& r : rules)
    if (r.name == name) return r;
  throw Error(ErrorKind::ChainMismatch, "unknown rule " + name);
}

// Position of `moving` after passing leftward over `fixed`, or nullopt when
// the two layers overlap. `left` reports which case applied.
std::optional<std::size_t> pass_left(const Layer& fixed, const Layer& moving, bool& left) {
  const std::size_t w1 = fixed.gen.source().size();
  const std::size_t v1 = fixed.gen.target().size();
  const std::size_t w2 = moving.gen.source().size();
  if (moving.pos + w2 <= fixed.pos) {
    left = true;
    return moving.pos;
  }
  if (moving.pos >= fixed.pos + v1) {
    left = false;
    return moving.pos - v1 + w1;
  }
  return std::nullopt;
}

struct NormalForm {
  std::vector<Layer> layers;
  std::vector<std::pair<std::size_t, bool>> steps;  // swaps (index, left case)
};

// Greedy representative of the interchange class: each slot takes the layer
// that can reach it with the smallest (offset, generator).
NormalForm normal_form(const TwoCellTerm& t) {
  NormalForm nf{t.layers(), {}};
  auto& ls = nf.layers;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    std::optional<std::size_t> best;
    Layer best_layer{};
    for (std::size_t q = p; q < ls.size(); ++q) {
      Layer cur = ls[q];
      bool ok = true;
      for (std::size_t j = q; j-- > p;) {
        bool left;
        const auto pos = pass_left(ls[j], cur, left);
        if (!pos) {
          ok = false;
          break;
        }
        cur.pos = *pos;
      }
      if (ok && (!best || std::tie(cur.pos, cur.gen) < std::tie(best_layer.pos, best_layer.gen))) {
        best = q;
        best_layer = cur;
      }
    }
    for (std::size_t j = *best; j-- > p;) {
      bool left;
      Layer moved = ls[j + 1];
      moved.pos = *pass_left(ls[j], ls[j + 1], left);
      // The passed layer shifts by the moving layer's width change when it
      // sat to the right.
      Layer passed = ls[j];
      if (left)
        passed.pos = passed.pos + moved.gen.target().size() - moved.gen.source().size();
      ls[j] = moved;
      ls[j + 1] = passed;
      nf.steps.emplace_back(j, left);
    }
  }
  return nf;
}

struct Edge {
  std::string parent;
  TwoCellTerm from;
  Step step;
  TwoCellTerm to;
};

class Search {
 public:
  explicit Search(const std::vector<Diagram>& rules) : rules_(rules) {}

  // Interchange normal form of t, keyed; members are enumerated lazily.
  std::string canonical(const TwoCellTerm& t) {
    const std::string k = key(t);
    if (auto it = canon_of_.find(k); it != canon_of_.end()) return it->second;
    NormalForm nf = normal_form(t);
    TwoCellTerm rep(t.source(), std::move(nf.layers));
    std::string canon = key(rep);
    canon_of_[k] = canon;
    reps_.emplace(canon, std::move(rep));
    return canon;
  }

  // All (step, result) pairs one rule application away from the class.
  template <typename Fn>
  void neighbours(const std::string& canon, Fn&& fn) {
    const auto members_copy = members(canon);
    for (const auto& m : members_copy) {
      for (std::size_t k = 0; k < m.size(); ++k) {
        for (const auto& r : rules_) {
          for (bool fwd : {true, false}) {
            const TwoCellTerm& from = fwd ? r.lhs : r.rhs;
            const TwoCellTerm& to = fwd ? r.rhs : r.lhs;
            if (auto off = match(m, k, from)) {
              TwoCellTerm next = replace(m, k, *off, from.size(), to);
              fn(m, Step{r.name, k, *off, fwd}, std::move(next));
            }
          }
        }
      }
    }
  }

  std::vector<Step> interchange_path(const TwoCellTerm& a, const TwoCellTerm& b) {
    NormalForm na = normal_form(a);
    NormalForm nb = normal_form(b);
    if (na.layers != nb.layers)
      throw Error(ErrorKind::ChainMismatch, "terms are not interchange-equivalent");
    std::vector<Step> out;
    for (const auto& [j, left] : na.steps) out.push_back(interchange_step(j, left));
    // Undoing a swap at j exchanges the left and right cases.
    for (auto it = nb.steps.rbegin(); it != nb.steps.rend(); ++it)
      out.push_back(interchange_step(it->first, !it->second));
    return out;
  }

  std::size_t explored() const { return reps_.size(); }

 private:
  static constexpr std::size_t kClassCap = 20000;

  static Step interchange_step(std::size_t j, bool left) {
    return Step{"interchange", j, left ? 0u : 1u, true};
  }

  // Class members reachable from the normal form, capped at kClassCap.
  const std::vector<TwoCellTerm>& members(const std::string& canon) {
    if (auto it = classes_.find(canon); it != classes_.end()) return it->second;
    std::vector<TwoCellTerm> seen{reps_.at(canon)};
    std::set<std::string> keys{canon};
    for (std::size_t i = 0; i < seen.size() && seen.size() < kClassCap; ++i) {
      for (std::size_t j = 0; j + 1 < seen[i].size(); ++j)
        for (bool left : {true, false})
          if (auto s = swap_layers(seen[i], j, left))
            if (keys.insert(key(*s)).second) seen.push_back(std::move(*s));
    }
    for (const auto& kk : keys) canon_of_.emplace(kk, canon);
    return classes_.emplace(canon, std::move(seen)).first->second;
  }

  const std::vector<Diagram>& rules_;
  std::unordered_map<std::string, std::string> canon_of_;
  std::unordered_map<std::string, TwoCellTerm> reps_;
  std::unordered_map<std::string, std::vector<TwoCellTerm>> classes_;
};

}  // namespace

TwoCellTerm apply_step(const TwoCellTerm& t, const Step& step,
                       const std::vector<Diagram>& rules) {
  if (step.rule == "interchange") {
    auto s = swap_layers(t, step.index, step.offset == 0);
    if (!s) throw Error(ErrorKind::ChainMismatch, "interchange does not apply");
    return *s;
  }
  const Diagram& r = find_rule(rules, step.rule);
  const TwoCellTerm& from = step.forward ? r.lhs : r.rhs;
  const TwoCellTerm& to = step.forward ? r.rhs : r.lhs;
  if (from.size() > 0) {
    auto off = match(t, step.index, from);
    if (!off || *off != step.offset)
      throw Error(ErrorKind::ChainMismatch, "rule " + step.rule + " does not match");
  } else {
    const OneCellChain chain = t.chain_at(step.index);
    const auto& src = from.source();
    if (step.index > t.size() || step.offset + src.size() > chain.size() ||
        !std::equal(src.begin(), src.end(), chain.begin() + step.offset))
      throw Error(ErrorKind::ChainMismatch, "rule " + step.rule + " does not fit");
  }
  return replace(t, step.index, step.offset, from.size(), to);
}

bool replay(const TwoCellTerm& from, const std::vector<Step>& path,
            const TwoCellTerm& to, const std::vector<Diagram>& rules) {
  TwoCellTerm cur = from;
  for (const auto& s : path) {
    try {
      TwoCellTerm next = apply_step(cur, s, rules);
      if (next.source() != cur.source() || next.target() != cur.target())
        return false;
      cur = std::move(next);
    } catch (const Error&) {
      return false;
    }
  }
  return cur == to;
}

Verdict check_equal(const TwoCellTerm& t1, const TwoCellTerm& t2,
                    std::size_t bound) {
  std::vector<Letter> letters;
  std::vector<Generator> laws;
  collect_alphabet(t1, letters, laws);
  collect_alphabet(t2, letters, laws);
  std::sort(letters.begin(), letters.end());
  std::sort(laws.begin(), laws.end());
  return check_equal(t1, t2, bound, rules_for(letters, laws));
}

Verdict check_equal(const TwoCellTerm& t1, const TwoCellTerm& t2,
                    std::size_t bound, const std::vector<Diagram>& rules) {
  if (t1.source() != t2.source() || t1.target() != t2.target())
    throw Error(ErrorKind::ChainMismatch,
                "endpoints differ: " + render(t1.source()) + " => " +
                    render(t1.target()) + " vs " + render(t2.source()) +
                    " => " + render(t2.target()));
  Search search(rules);
  const std::string root1 = search.canonical(t1);
  const std::string root2 = search.canonical(t2);

  struct Side {
    std::unordered_map<std::string, std::optional<Edge>> visited;
    std::vector<std::string> frontier;
    std::size_t depth = 0;
  };
  Side fwd, bwd;
  fwd.visited.emplace(root1, std::nullopt);
  fwd.frontier.push_back(root1);
  bwd.visited.emplace(root2, std::nullopt);
  bwd.frontier.push_back(root2);

  std::optional<std::string> meet;
  if (root1 == root2) meet = root1;

  while (!meet && fwd.depth + bwd.depth < bound) {
    Side& side = (fwd.frontier.size() <= bwd.frontier.size()) ? fwd : bwd;
    Side& other = (&side == &fwd) ? bwd : fwd;
    if (side.frontier.empty()) {
      if (other.frontier.empty()) break;
      continue;
    }
    std::vector<std::string> next;
    for (const auto& cur : side.frontier) {
      search.neighbours(cur, [&](const TwoCellTerm& from, Step step, TwoCellTerm to) {
        if (meet) return;
        const std::string c = search.canonical(to);
        if (side.visited.count(c)) return;
        side.visited.emplace(c, Edge{cur, from, std::move(step), std::move(to)});
        next.push_back(c);
        if (other.visited.count(c)) meet = c;
      });
      if (meet) break;
    }
    side.frontier = std::move(next);
    ++side.depth;
    if (fwd.frontier.empty() && !meet) break;
    if (bwd.frontier.empty() && !meet) break;
  }

  Verdict v;
  v.explored = search.explored();
  if (!meet) return v;

  // Concrete rule steps from t1 to t2: pairs (a_i -> b_i).
  struct Hop {
    TwoCellTerm a;
    Step step;
    TwoCellTerm b;
  };
  std::vector<Hop> hops;
  for (std::string c = *meet; fwd.visited.at(c);) {
    const Edge& e = *fwd.visited.at(c);
    hops.push_back({e.from, e.step, e.to});
    c = e.parent;
  }
  std::reverse(hops.begin(), hops.end());
  for (std::string c = *meet; bwd.visited.at(c);) {
    const Edge& e = *bwd.visited.at(c);
    Step inverse = e.step;
    inverse.forward = !inverse.forward;
    hops.push_back({e.to, inverse, e.from});
    c = e.parent;
  }

  TwoCellTerm cur = t1;
  for (const auto& h : hops) {
    for (auto& s : search.interchange_path(cur, h.a)) v.path.push_back(s);
    v.path.push_back(h.step);
    cur = h.b;
  }
  for (auto& s : search.interchange_path(cur, t2)) v.path.push_back(s);
  v.rule_steps = hops.size();
  v.equal = true;
  return v;
}

bool Report::all_equal() const {
  return std::all_of(diagrams.begin(), diagrams.end(),
                     [](const DiagramResult& d) { return d.verdict.equal; });
}

Report verify_law(const TwoCellTerm& t, const OneCellChain& moving,
                  const OneCellChain& fixed, LawKind kind, std::size_t bound) {
  if (t.source() != concat(moving, fixed) || t.target() != concat(fixed, moving))
    throw Error(ErrorKind::ShapeMismatch,
                "term " + render(t.source()) + " => " + render(t.target()) +
                    " is not " + render(concat(moving, fixed)) + " => " +
                    render(concat(fixed, moving)));
  const bool box_moving = kind == LawKind::BoxBox || kind == LawKind::BoxDia;
  const bool box_fixed = kind == LawKind::BoxBox || kind == LawKind::DiaBox;
  for (const auto& l : moving)
    if ((l.kind == OpKind::Box) != box_moving)
      throw Error(ErrorKind::ShapeMismatch, "moving side does not fit kind " + to_string(kind));
  for (const auto& l : fixed)
    if ((l.kind == OpKind::Box) != box_fixed)
      throw Error(ErrorKind::ShapeMismatch, "fixed side does not fit kind " + to_string(kind));

  Report report{kind, {}};
  auto diagrams = law_diagrams(moving, fixed, t);
  std::vector<Letter> letters;
  std::vector<Generator> laws;
  collect_alphabet(t, letters, laws);
  for (const auto& d : diagrams) {
    collect_alphabet(d.lhs, letters, laws);
    collect_alphabet(d.rhs, letters, laws);
  }
  std::sort(letters.begin(), letters.end());
  std::sort(laws.begin(), laws.end());
  const auto rules = rules_for(letters, laws);

  report.diagrams.resize(diagrams.size());
  const long n = static_cast<long>(diagrams.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& d = diagrams[static_cast<std::size_t>(i)];
    report.diagrams[static_cast<std::size_t>(i)] =
        DiagramResult{d.name, d, check_equal(d.lhs, d.rhs, bound, rules)};
  }
  return report;
}

Report verify_law(const LawComposite& c, std::size_t bound) {
  return verify_law(c.term, letters(c.label.mode, c.label.moving),
                    letters(c.label.mode, c.label.fixed), c.label.kind, bound);
}

}  // namespace modcube
