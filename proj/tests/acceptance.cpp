// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gen.hpp"
#include "modcube/axioms.hpp"
#include "modcube/cli.hpp"
#include "modcube/cube.hpp"
#include "modcube/error.hpp"
#include "modcube/kripke.hpp"
#include "modcube/paste.hpp"
#include "modcube/sym.hpp"

using namespace modcube;

namespace {

constexpr ModeKind kAllModes[] = {ModeKind::DCmd, ModeKind::SDCmd, ModeKind::DMnd,
                                  ModeKind::SDMnd, ModeKind::Ent, ModeKind::SEnt};
constexpr ModeKind kSymmetric[] = {ModeKind::SDCmd, ModeKind::SDMnd, ModeKind::SEnt};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later checks still run.
struct Check {
  Outcome& out;
  void operator()(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

std::vector<std::string> golden(ModeKind m, unsigned n) {
  std::ifstream in(std::string(MODCUBE_GOLDEN_DIR) + "/" + to_string(m) + "_" +
                   std::to_string(n) + ".txt");
  if (!in) throw Error(ErrorKind::Io, "missing golden file for " + to_string(m));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

Outcome reproduction() {
  Outcome o;
  Check check{o};
  std::size_t lines = 0;
  std::set<std::pair<std::string, std::string>> flagged;
  std::size_t paper_only = 0;
  for (ModeKind m : kAllModes)
    for (unsigned n : {2u, 3u}) {
      std::ostringstream out, err;
      const int code = run({"derive", "--mode", to_string(m), "--arity", std::to_string(n),
                            "--depth", "2"},
                           out, err);
      check(code == 0, "derive failed for " + to_string(m));
      std::set<std::string> sentences;
      std::istringstream in(out.str());
      for (std::string line; std::getline(in, line);)
        sentences.insert(line.substr(0, line.find("  [")));
      for (const auto& g : golden(m, n)) {
        check(sentences.count(g) == 1, to_string(m) + " arity " + std::to_string(n) +
                                            " lacks " + g);
        ++lines;
      }
      const auto rep = diff_against_paper(CategoryMode(m, n), 2);
      paper_only += rep.paper_only.size();
      for (const auto& e : rep.entries)
        if (e.flagged) flagged.emplace(to_string(m), e.label);
    }
  const std::set<std::pair<std::string, std::string>> expect{
      {"sdcmd", "Composition axiom"}, {"sdmnd", "Composition axiom"}};
  check(flagged == expect, std::to_string(flagged.size()) + " flagged entries, expected 2");
  check(paper_only == 0, std::to_string(paper_only) + " paper-only entries");
  if (o.ok)
    o.detail = std::to_string(lines) + " golden sentences matched, flagged: sdcmd and sdmnd "
               "Composition";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  Check check{o};
  const CategoryMode dcmd(ModeKind::DCmd, 3);
  const CategoryMode sdcmd(ModeKind::SDCmd, 3);
  const LawCell d10 = make_law(dcmd, {1}, {0});
  const std::string v1 = render(compose_dir(d10, d10, 0));
  const std::string v1c =
      render(term(compose(Cube::square(d10), Cube::square(d10), 0)).label);
  const std::string v2 =
      render(compose_dir(make_law(sdcmd, {0}, {1}), make_law(sdcmd, {0}, {2}), 1));
  const std::string v3 = render(act_on_law({1}, make_law(sdcmd, {1}, {0})));
  const std::string v4 = render(act_on_law({1}, make_law(sdcmd, {2}, {1, 1})));
  check(v1 == "d[1;(0;0)]" && v1c == v1, "d10 +_0 d10 gave " + v1 + " / " + v1c);
  check(v2 == "d[0;(2;1)]", "d01 +_1 d02 gave " + v2);
  check(v3 == "d[0;1]", "s1(d10) gave " + v3);
  check(v4 == "d[2;(0;0)]", "s1(d2(11)) gave " + v4);
  if (o.ok) o.detail = v1 + ", " + v2 + ", " + v3 + ", " + v4;
  return o;
}

Outcome group_action() {
  Outcome o;
  Check check{o};
  std::mt19937 rng(20240601);
  std::size_t cells = 0, cubes = 0, pairs = 0;
  for (unsigned n : {2u, 3u, 4u})
    for (int t = 0; t < 10000; ++t) {
      const CategoryMode m(kSymmetric[t % 3], n);
      const LawCell d = gen::law(rng, m);
      const Cube c = gen::cube(rng, m);
      for (unsigned s = 1; s < n; ++s) {
        check(act_word({{s}, {s}}, d) == d, "involution on " + render(d));
        check(render(act_word({{s}, {s}}, c)) == render(c), "involution on " + render(c));
        if (s + 1 < n) {
          const PermutationWord l{{s}, {s + 1}, {s}}, r{{s + 1}, {s}, {s + 1}};
          check(act_word(l, d) == act_word(r, d), "braid on " + render(d));
          check(render(act_word(l, c)) == render(act_word(r, c)), "braid on " + render(c));
        }
        for (unsigned u = s + 2; u < n; ++u) {
          const PermutationWord l{{s}, {u}}, r{{u}, {s}};
          check(act_word(l, d) == act_word(r, d), "commutation on " + render(d));
          check(render(act_word(l, c)) == render(act_word(r, c)),
                "commutation on " + render(c));
        }
      }
      ++cells;
      ++cubes;
    }
  for (int t = 0; t < 1000; ++t) {
    const CategoryMode m(kSymmetric[t % 3], 2 + t % 3);
    const gen::Pair p = gen::composable_pair(rng, m);
    const Transposition s{1 + gen::below(rng, m.arity - 1)};
    const Cube lhs = act_on_cube(s, compose(p.a, p.b, p.dir));
    const Cube rhs = compose(act_on_cube(s, p.a), act_on_cube(s, p.b), apply(s, p.dir));
    check(render(lhs) == render(rhs), "equivariance on " + render(lhs));
    ++pairs;
  }
  if (o.ok)
    o.detail = std::to_string(cells) + " cells, " + std::to_string(cubes) + " cubes, " +
               std::to_string(pairs) + " composable pairs";
  return o;
}

Outcome interchange() {
  Outcome o;
  Check check{o};
  std::mt19937 rng(77);
  std::size_t grids = 0;
  for (ModeKind k : {ModeKind::DCmd, ModeKind::DMnd, ModeKind::Ent}) {
    const CategoryMode m(k, 4);
    for (int t = 0; t < 1000; ++t) {
      const gen::Grid g = gen::grid(rng, m);
      check(interchange_check(g.a, g.b, g.c, g.d, g.i, g.j),
            "cube interchange failed in " + to_string(k));
      const Cube rows = compose(compose(g.a, g.b, g.i), compose(g.c, g.d, g.i), g.j);
      const Cube cols = compose(compose(g.a, g.c, g.j), compose(g.b, g.d, g.j), g.i);
      const LawComposite tr = term(rows), tc = term(cols);
      check(tr.label == tc.label && check_equal(tr.term, tc.term, 0).equal,
            "2-cell interchange failed for " + render(tr.label));
      ++grids;
    }
  }
  if (o.ok) o.detail = std::to_string(grids) + " grids, 0 failures";
  return o;
}

Outcome coherence() {
  Outcome o;
  Check check{o};
  constexpr std::size_t bound = 12;
  std::size_t laws = 0, diagrams = 0, not_proven = 0;
  auto verify = [&](const LawComposite& c) {
    const Report r = verify_law(c, bound);
    for (const auto& d : r.diagrams) {
      ++diagrams;
      if (!d.verdict.equal) ++not_proven;
      check(d.verdict.equal, render(c.label) + " " + d.name + " NotProven");
    }
    check(!r.diagrams.empty(), render(c.label) + " has no diagrams");
    ++laws;
  };
  for (ModeKind k : {ModeKind::DCmd, ModeKind::DMnd}) {
    const CategoryMode m(k, 4);
    auto d = [&](Atom i, Atom j) { return as_composite(make_law(m, {i}, {j})); };
    for (Atom a = 0; a < 4; ++a)
      for (Atom b = a + 1; b < 4; ++b)
        for (Atom c = b + 1; c < 4; ++c) {
          verify(compose_h(d(c, a), d(c, b)));  // (d_cb | d_ca)
          verify(compose_v(d(b, a), d(c, a)));  // (d_ca / d_ba)
        }
  }
  const CategoryMode ent(ModeKind::Ent, 4);
  verify(parse_law_expr("h(d[3;0],d[3;2])", ent));
  verify(parse_law_expr("h(d[3;2],d[3;0])", ent));
  verify(parse_law_expr("v(d[1;0],d[3;0])", ent));

  const CategoryMode m(ModeKind::DCmd, 4);
  const auto lhs = parse_law_expr("v(d[2;1],h(d[3;1],unit[3]))", m);
  const auto rhs = parse_law_expr("h(v(d[2;1],d[3;1]),unit[(3;2)])", m);
  check(lhs.label == rhs.label, "display sides differ: " + render(lhs.label) + " vs " +
                                    render(rhs.label));
  check(check_equal(lhs.term, rhs.term, bound).equal, "display terms not proven equal");
  verify(lhs);
  verify(rhs);
  const auto h1 = parse_law_expr("h(h(d[3;0],d[3;1]),d[3;2])", m);
  const auto h2 = parse_law_expr("h(d[3;0],h(d[3;1],d[3;2]))", m);
  const auto v1 = parse_law_expr("v(v(d[1;0],d[2;0]),d[3;0])", m);
  const auto v2 = parse_law_expr("v(d[1;0],v(d[2;0],d[3;0]))", m);
  check(h1.label == h2.label && check_equal(h1.term, h2.term, bound).equal,
        "horizontal associativity not proven");
  check(v1.label == v2.label && check_equal(v1.term, v2.term, bound).equal,
        "vertical associativity not proven");
  for (const auto* c : {&h1, &h2, &v1, &v2}) verify(*c);
  if (o.ok || not_proven)
    o.detail = std::to_string(laws) + " composites, " + std::to_string(diagrams) +
               " diagrams, " + std::to_string(not_proven) + " NotProven, bound " +
               std::to_string(bound);
  return o;
}

Outcome soundness() {
  Outcome o;
  Check check{o};
  std::set<GeachAxiom> forms;
  for (ModeKind k : kAllModes)
    for (unsigned n : {1u, 2u}) {
      if (n < 2 && (k == ModeKind::SDCmd || k == ModeKind::SDMnd || k == ModeKind::SEnt))
        continue;
      for (const auto& ax : generate(CategoryMode(k, n), 2)) {
        if (!ax.geach) continue;
        const auto& g = *ax.geach;
        if (g.a.size() <= 2 && g.b.size() <= 2 && g.c.size() <= 2 && g.d.size() <= 2)
          forms.insert(g);
      }
    }
  std::uint64_t violations = 0;
  for (const auto& g : forms) {
    const std::uint64_t v = parallel::soundness_violations(g, 3, 2);
    violations += v;
    check(v == 0, render(g) + " has " + std::to_string(v) + " violations");
  }
  const auto t = countermodel_search(parse_axiom("box_0 A -> A"), 3);
  const auto mck = countermodel_search(parse_axiom("box_0 dia_1 A -> dia_1 box_0 A"), 3);
  check(t.has_value(), "no countermodel for box_0 A -> A");
  check(mck.has_value(), "no countermodel for the McKinsey form");
  if (o.ok)
    o.detail = std::to_string(forms.size()) + " Geach forms, " + std::to_string(violations) +
               " violations; countermodels with " + std::to_string(t->frame.worlds) + " and " +
               std::to_string(mck->frame.worlds) + " worlds";
  return o;
}

Outcome classification() {
  Outcome o;
  Check check{o};
  auto table = [](ModeKind m, Atom i, Atom j) {
    if (m == ModeKind::DCmd || m == ModeKind::SDCmd) return LawKind::BoxBox;
    if (m == ModeKind::DMnd || m == ModeKind::SDMnd) return LawKind::DiaDia;
    const bool ie = i % 2 == 0, je = j % 2 == 0;
    if (ie && je) return LawKind::BoxBox;
    if (!ie && je) return LawKind::DiaBox;
    if (ie && !je) return LawKind::BoxDia;
    return LawKind::DiaDia;
  };
  std::size_t pairs = 0;
  for (ModeKind k : kAllModes)
    for (unsigned n = 1; n <= 8; ++n) {
      if (n < 2 && (k == ModeKind::SDCmd || k == ModeKind::SDMnd || k == ModeKind::SEnt))
        continue;
      const CategoryMode m(k, n);
      for (Atom i = 0; i < n; ++i)
        for (Atom j = 0; j <= i; ++j) {
          check(classify(i, j, m) == table(k, i, j),
                "d" + std::to_string(i) + std::to_string(j) + " in " + to_string(k));
          ++pairs;
        }
    }
  if (o.ok) o.detail = std::to_string(pairs) + " (mode, i, j) triples";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "axiom boxes reproduced", 10, reproduction},
      {2, "worked values", 0, worked_examples},
      {3, "group action", 30, group_action},
      {4, "interchange", 0, interchange},
      {5, "coherence of composites", 60, coherence},
      {6, "semantic soundness", 120, soundness},
      {7, "classification", 0, classification},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit_s > 0) time << " of " << c.limit_s << " s";
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << "): " << o.detail << " [" << time.str() << "]" << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
