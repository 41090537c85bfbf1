#include "modcube/axioms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>

#include "modcube/dlaw.hpp"
#include "modcube/error.hpp"

namespace modcube {

namespace {

ModalPrefix ops(OpKind kind, const ModIndex& idx) {
  ModalPrefix out;
  for (Atom a : idx) out.push_back({kind, a});
  return out;
}

ModalPrefix cat(ModalPrefix a, const ModalPrefix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Splits p as kind1* kind2*; nullopt if p does not have that shape.
std::optional<std::pair<ModIndex, ModIndex>> split_runs(const ModalPrefix& p,
                                                        OpKind first) {
  std::vector<Atom> head, tail;
  std::size_t k = 0;
  for (; k < p.size() && p[k].kind == first; ++k) head.push_back(p[k].atom);
  for (; k < p.size(); ++k) {
    if (p[k].kind == first) return std::nullopt;
    tail.push_back(p[k].atom);
  }
  return std::make_pair(ModIndex(std::move(head)), ModIndex(std::move(tail)));
}

}  // namespace

AxiomSentence geach_to_sentence(const GeachAxiom& g) {
  return {Formula{cat(ops(OpKind::Diamond, g.a), ops(OpKind::Box, g.b))},
          Formula{cat(ops(OpKind::Box, g.c), ops(OpKind::Diamond, g.d))}};
}

std::optional<GeachAxiom> sentence_to_geach(const AxiomSentence& s) {
  const auto l = split_runs(s.lhs.prefix, OpKind::Diamond);
  const auto r = split_runs(s.rhs.prefix, OpKind::Box);
  if (!l || !r) return std::nullopt;
  return GeachAxiom{l->first, l->second, r->first, r->second};
}

std::string render(const GeachAxiom& g) {
  return "G^{" + render_side(g.a) + "," + render_side(g.b) + "," +
         render_side(g.c) + "," + render_side(g.d) + "}";
}

std::string to_string(AxiomFamily f) {
  switch (f) {
    case AxiomFamily::Reflexivity: return "Reflexivity";
    case AxiomFamily::Transitivity: return "Transitivity";
    case AxiomFamily::RestrictedPersistency: return "RestrictedPersistency";
    case AxiomFamily::GeneralPersistency: return "GeneralPersistency";
    case AxiomFamily::Composition: return "Composition";
    case AxiomFamily::Seriality: return "Seriality";
    case AxiomFamily::McKinsey: return "McKinsey";
    case AxiomFamily::K: return "K";
    case AxiomFamily::Unnamed: return "Unnamed";
  }
  return "?";
}

AxiomFamily classify(const AxiomSentence& s, const std::optional<CategoryMode>& mode) {
  const ModalPrefix& l = s.lhs.prefix;
  const ModalPrefix& r = s.rhs.prefix;
  auto box = [](const Letter& x) { return x.kind == OpKind::Box; };
  auto dia = [](const Letter& x) { return x.kind == OpKind::Diamond; };
  if (l == r) return AxiomFamily::K;
  if (l.size() == 1 && r.empty() && box(l[0])) return AxiomFamily::Reflexivity;
  if (l.empty() && r.size() == 1 && dia(r[0])) return AxiomFamily::Reflexivity;
  if (l.size() == 1 && box(l[0]) && r == ModalPrefix{l[0], l[0]})
    return AxiomFamily::Transitivity;
  if (r.size() == 1 && dia(r[0]) && l == ModalPrefix{r[0], r[0]})
    return AxiomFamily::Transitivity;
  if (l.size() == 2 && r == ModalPrefix{l[1], l[0]}) {
    const Letter x = l[0], y = l[1];
    if (x.kind == y.kind) {
      if (mode)
        return mode->symmetric() ? AxiomFamily::GeneralPersistency
                                 : AxiomFamily::RestrictedPersistency;
      return x.atom > y.atom ? AxiomFamily::RestrictedPersistency
                             : AxiomFamily::GeneralPersistency;
    }
    return box(x) ? AxiomFamily::McKinsey : AxiomFamily::Composition;
  }
  if (l.size() == 2 && r.size() == 1 && l[1] == r[0] && l[0].kind == r[0].kind &&
      l[0].atom != r[0].atom)
    return AxiomFamily::Composition;
  if (l.size() == 1 && r.size() == 2 && dia(l[0]) && dia(r[0]) && r[1] == l[0] &&
      r[0].atom != l[0].atom)
    return AxiomFamily::Composition;
  if (l.size() == 1 && r.size() == 1 && box(l[0]) && dia(r[0]))
    return AxiomFamily::Seriality;
  return AxiomFamily::Unnamed;
}

std::vector<Generator> mode_generators(const CategoryMode& mode) {
  std::vector<Generator> out;
  for (Atom a = 0; a < mode.arity; ++a) {
    if (mode.op_for(a) == OpKind::Box) {
      out.push_back(Generator::counit(a));
      out.push_back(Generator::comult(a));
    } else {
      out.push_back(Generator::unit(a));
      out.push_back(Generator::mult(a));
    }
  }
  for (Atom x = 0; x < mode.arity; ++x)
    for (Atom y = 0; y < mode.arity; ++y)
      if (x != y && (mode.symmetric() || x > y))
        out.push_back(Generator::law(mode.letter(x), mode.letter(y)));
  return out;
}

namespace {

LawCell law_cell(const CategoryMode& mode, const Generator& g) {
  return make_law(mode, ModIndex({g.a.atom}), ModIndex({g.b.atom}));
}

// Seed d[max;min] and a word carrying it to the law g.
LawOrigin origin_for(const CategoryMode& mode, const Generator& g) {
  const Atom hi = std::max(g.a.atom, g.b.atom);
  const Atom lo = std::min(g.a.atom, g.b.atom);
  const Generator seed = Generator::law(mode.letter(hi), mode.letter(lo));
  const LawCell target = law_cell(mode, g);
  std::vector<std::pair<LawCell, PermutationWord>> seen{{law_cell(mode, seed), {}}};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i].first == target) return {g, seed, seen[i].second};
    for (unsigned k = 1; k < mode.arity; ++k) {
      LawCell next = act_on_law({k}, seen[i].first);
      if (std::none_of(seen.begin(), seen.end(),
                       [&](const auto& p) { return p.first == next; })) {
        PermutationWord w = seen[i].second;
        w.push_back({k});
        seen.emplace_back(std::move(next), std::move(w));
      }
    }
  }
  throw Error(ErrorKind::ShapeMismatch, render(g) + " is not in the orbit of " + render(seed));
}

struct Found {
  std::string key;
  DerivedAxiom axiom;
};

std::vector<Found> from_source(const CategoryMode& mode,
                               const std::vector<Generator>& gens,
                               const OneCellChain& src, unsigned depth) {
  const std::size_t max_len = depth + 1;
  std::map<OneCellChain, std::pair<OneCellChain, Layer>> parent;
  std::vector<OneCellChain> order{src};
  parent.emplace(src, std::make_pair(OneCellChain{}, Layer{}));
  std::vector<OneCellChain> frontier{src};
  for (unsigned level = 0; level < depth; ++level) {
    std::vector<OneCellChain> next;
    for (const auto& c : frontier) {
      for (std::size_t pos = 0; pos <= c.size(); ++pos) {
        for (const auto& g : gens) {
          OneCellChain d = c;
          const Layer layer{pos, g};
          if (!apply_layer(d, layer) || d.size() > max_len) continue;
          if (parent.count(d)) continue;
          parent.emplace(d, std::make_pair(c, layer));
          order.push_back(d);
          next.push_back(std::move(d));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Found> out;
  for (const auto& tgt : order) {
    if (tgt == src) continue;
    std::vector<Layer> layers;
    for (OneCellChain c = tgt; c != src;) {
      const auto& [prev, layer] = parent.at(c);
      layers.push_back(layer);
      c = prev;
    }
    std::reverse(layers.begin(), layers.end());
    Witness w{TwoCellTerm(src, layers), {}};
    if (mode.symmetric()) {
      for (const auto& l : layers)
        if (l.gen.kind == GenKind::Law && l.gen.a.atom < l.gen.b.atom &&
            std::none_of(w.origins.begin(), w.origins.end(),
                         [&](const LawOrigin& o) { return o.law == l.gen; }))
          w.origins.push_back(origin_for(mode, l.gen));
    }
    AxiomSentence s{Formula{src}, Formula{tgt}};
    DerivedAxiom ax{s, sentence_to_geach(s), classify(s, mode), std::move(w)};
    out.push_back({render(s), std::move(ax)});
  }
  return out;
}

}  // namespace

std::vector<DerivedAxiom> generate(const CategoryMode& mode, unsigned depth) {
  const auto gens = mode_generators(mode);
  std::vector<OneCellChain> sources{{}};
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i].size() >= depth + 1) continue;
    for (Atom a = 0; a < mode.arity; ++a) {
      OneCellChain c = sources[i];
      c.push_back(mode.letter(a));
      sources.push_back(std::move(c));
    }
  }
  std::vector<std::vector<Found>> per(sources.size());
  const long n = static_cast<long>(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    per[static_cast<std::size_t>(i)] =
        from_source(mode, gens, sources[static_cast<std::size_t>(i)], depth);
  std::vector<Found> all;
  for (auto& v : per)
    for (auto& f : v) all.push_back(std::move(f));
  std::stable_sort(all.begin(), all.end(),
                   [](const Found& a, const Found& b) { return a.key < b.key; });
  std::vector<DerivedAxiom> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i == 0 || all[i].key != all[i - 1].key) out.push_back(std::move(all[i].axiom));
  return out;
}

bool replay(const DerivedAxiom& ax, const CategoryMode& mode) {
  const auto gens = mode_generators(mode);
  const TwoCellTerm& t = ax.witness.term;
  for (const auto& l : t.layers()) {
    if (std::find(gens.begin(), gens.end(), l.gen) == gens.end()) return false;
    if (l.gen.kind == GenKind::Law && l.gen.a.atom < l.gen.b.atom) {
      const auto it = std::find_if(ax.witness.origins.begin(), ax.witness.origins.end(),
                                   [&](const LawOrigin& o) { return o.law == l.gen; });
      if (it == ax.witness.origins.end() || it->seed.a.atom <= it->seed.b.atom)
        return false;
      try {
        if (!(act_word(it->word, law_cell(mode, it->seed)) == law_cell(mode, l.gen)))
          return false;
      } catch (const Error&) {
        return false;
      }
    }
  }
  try {
    const TwoCellTerm rebuilt(t.source(), t.layers());
    return rebuilt.source() == ax.sentence.lhs.prefix &&
           rebuilt.target() == ax.sentence.rhs.prefix;
  } catch (const Error&) {
    return false;
  }
}

const std::vector<Box>& published_boxes() {
  using O = BoxEntry::Order;
  using F = AxiomFamily;
  using Slots = std::vector<std::string>;
  static const std::vector<Box> boxes{
      {ModeKind::DCmd,
       false,
       {{"Reflexivity axiom", F::Reflexivity, Slots{"eps", "i", "eps", "eps"},
         "box_i A -> A"},
        {"Transitivity axiom", F::Transitivity, Slots{"eps", "i", "(i;i)", "eps"},
         "box_i A -> box_i box_i A"},
        {"Restricted Persistency axiom", F::RestrictedPersistency,
         Slots{"eps", "(i;j)", "(j;i)", "eps"}, "box_i box_j A -> box_j box_i A",
         O::IGreater}}},
      {ModeKind::SDCmd,
       false,
       {{"General Persistency axiom", F::GeneralPersistency,
         Slots{"eps", "(i;j)", "(j;i)", "eps"}, "box_i box_j A -> box_j box_i A"},
        {"Composition axiom", F::Composition, Slots{"eps", "(j;i)", "i", "eps"},
         "box_j A box_i A -> box_i A"}}},
      {ModeKind::DMnd,
       true,
       {{"Reflexivity axiom", F::Reflexivity, Slots{"j", "eps", "eps", "eps"},
         "A -> dia_j A"},
        {"Transitivity axiom", F::Transitivity, Slots{"j", "eps", "eps", "(j;j)"},
         "dia_j dia_j A -> dia_j A"},
        {"Restricted Persistency axiom", F::RestrictedPersistency,
         Slots{"(j;i)", "eps", "eps", "(i;j)"}, "dia_i dia_j A -> dia_j dia_i A",
         O::IGreater}}},
      {ModeKind::SDMnd,
       true,
       {{"General Persistency axiom", F::GeneralPersistency,
         Slots{"(j;i)", "eps", "eps", "(i;j)"}, "dia_i dia_j A -> dia_j dia_i A"},
        {"Composition axiom", F::Composition, Slots{"(j;i)", "eps", "eps", "i"},
         "dia_j A -> dia_i dia_j A"}}},
      {ModeKind::Ent,
       false,
       {{"Seriality axiom", F::Seriality, Slots{"eps", "i", "eps", "j"},
         "box_i A -> dia_j A"},
        {"Composition axiom", F::Composition, Slots{"j", "i", "i", "j"},
         "dia_j box_i A -> box_i dia_j A", O::JGreater},
        {"Axiom for G^{j,i,eps,j}", F::Unnamed, Slots{"j", "i", "eps", "j"},
         "dia_j box_i A -> dia_j A"}}},
      {ModeKind::SEnt,
       false,
       {{"McKinsey axiom", F::McKinsey, std::nullopt, "box_i dia_j A -> dia_j box_i A"},
        {"Unnamed", F::Unnamed, std::nullopt, "box_i A -> dia_j box_i A"}}},
  };
  return boxes;
}

const Box& published_box(ModeKind mode) {
  for (const auto& b : published_boxes())
    if (b.mode == mode) return b;
  throw Error(ErrorKind::ModeMismatch, "no box for " + to_string(mode));
}

namespace {

struct Assignment {
  std::optional<Atom> i, j;
};

bool mentions(const BoxEntry& e, char var) {
  const std::regex printed(std::string("_") + var + "\\b");
  if (std::regex_search(e.printed, printed)) return true;
  if (!e.geach) return false;
  const std::regex slot(std::string("\\b") + var + "\\b");
  return std::any_of(e.geach->begin(), e.geach->end(),
                     [&](const std::string& s) { return std::regex_search(s, slot); });
}

std::vector<Assignment> assignments(const Box& box, const BoxEntry& e, unsigned arity) {
  const bool parity = box.mode == ModeKind::Ent || box.mode == ModeKind::SEnt;
  const bool use_i = mentions(e, 'i');
  const bool use_j = mentions(e, 'j');
  auto domain = [&](bool used, unsigned want_parity) {
    std::vector<std::optional<Atom>> out;
    if (!used) return std::vector<std::optional<Atom>>{std::nullopt};
    for (Atom a = 0; a < arity; ++a)
      if (!parity || a % 2 == want_parity) out.push_back(a);
    return out;
  };
  std::vector<Assignment> out;
  for (auto i : domain(use_i, 0))
    for (auto j : domain(use_j, 1)) {
      if (i && j && *i == *j) continue;
      if (e.order == BoxEntry::Order::IGreater && !(*i > *j)) continue;
      if (e.order == BoxEntry::Order::JGreater && !(*j > *i)) continue;
      out.push_back({i, j});
    }
  return out;
}

std::string substitute(const std::string& text, const Assignment& a, bool printed) {
  std::string out = text;
  const std::string pre = printed ? "_" : "\\b";
  const std::string post = "\\b";
  const std::string keep = printed ? "_" : "";
  if (a.i) out = std::regex_replace(out, std::regex(pre + "i" + post), keep + std::to_string(*a.i));
  if (a.j) out = std::regex_replace(out, std::regex(pre + "j" + post), keep + std::to_string(*a.j));
  return out;
}

std::optional<AxiomSentence> printed_sentence(const BoxEntry& e, const Assignment& a,
                                              unsigned arity) {
  try {
    return parse_axiom(substitute(e.printed, a, true), arity);
  } catch (const Error&) {
    return std::nullopt;
  }
}

GeachAxiom label(const BoxEntry& e, const Assignment& a, unsigned arity) {
  const auto& s = *e.geach;
  auto idx = [&](std::size_t k) { return parse_index(substitute(s[k], a, false), arity); };
  return GeachAxiom{idx(0), idx(1), idx(2), idx(3)};
}

}  // namespace

std::vector<AxiomSentence> instantiate(const Box& box, const BoxEntry& e, unsigned arity) {
  std::vector<AxiomSentence> out;
  for (const auto& a : assignments(box, e, arity)) {
    if (auto s = printed_sentence(e, a, arity))
      out.push_back(*s);
    else if (e.geach)
      out.push_back(geach_to_sentence(label(e, a, arity)));
  }
  return out;
}

DiscrepancyReport diff_against_paper(const CategoryMode& mode, unsigned depth) {
  const Box& box = published_box(mode.kind);
  std::set<std::string> engine;
  for (const auto& ax : generate(mode, depth)) engine.insert(render(ax.sentence));

  DiscrepancyReport rep{mode.kind, mode.arity, {}, 0, 0, {}, {}};
  std::set<std::string> expected_all;
  for (const auto& e : box.entries) {
    EntryReport er{e.label, e.family, false, "", {}, {}};
    for (const auto& a : assignments(box, e, mode.arity)) {
      const auto printed = printed_sentence(e, a, mode.arity);
      if (!printed) {
        er.flagged = true;
        er.reason = "printed \"" + e.printed + "\" is not a well-formed sentence";
        if (e.geach)
          er.reason += "; label " + render(label(e, a, mode.arity)) + " reads " +
                       render(geach_to_sentence(label(e, a, mode.arity)));
        continue;
      }
      if (e.geach) {
        GeachAxiom g = label(e, a, mode.arity);
        const AxiomSentence standard = geach_to_sentence(g);
        if (box.swapped_reading) std::swap(g.a, g.d);
        const AxiomSentence read = geach_to_sentence(g);
        if (!(read == *printed)) {
          er.flagged = true;
          er.reason = "printed " + render(*printed) + " disagrees with label " +
                      render(label(e, a, mode.arity)) + " read as " + render(read) +
                      " (standard reading " + render(standard) + ")";
        }
      }
    }
    for (const auto& s : instantiate(box, e, mode.arity)) {
      const std::string r = render(s);
      er.expected.push_back(r);
      expected_all.insert(r);
      if (!engine.count(r)) {
        er.missing.push_back(r);
        rep.paper_only.push_back(r);
      }
    }
    if (er.flagged)
      ++rep.flagged;
    else if (er.missing.empty())
      ++rep.matched;
    rep.entries.push_back(std::move(er));
  }
  for (const auto& s : engine)
    if (!expected_all.count(s)) rep.engine_only.push_back(s);
  return rep;
}

}  // namespace modcube
