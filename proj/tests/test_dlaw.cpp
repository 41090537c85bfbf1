#include <doctest.h>

#include <random>

#include "modcube/dlaw.hpp"
#include "modcube/error.hpp"

using namespace modcube;

namespace {

constexpr ModeKind kAllModes[] = {ModeKind::DCmd, ModeKind::SDCmd, ModeKind::DMnd,
                                  ModeKind::SDMnd, ModeKind::Ent, ModeKind::SEnt};

// The published parity table, restated independently of mode.op_for.
LawKind table(ModeKind m, Atom i, Atom j) {
  switch (m) {
    case ModeKind::DCmd:
    case ModeKind::SDCmd: return LawKind::BoxBox;
    case ModeKind::DMnd:
    case ModeKind::SDMnd: return LawKind::DiaDia;
    default: break;
  }
  const bool ie = i % 2 == 0, je = j % 2 == 0;
  if (ie && je) return LawKind::BoxBox;
  if (!ie && je) return LawKind::DiaBox;
  if (ie && !je) return LawKind::BoxDia;
  return LawKind::DiaDia;
}

ErrorKind kind_thrown(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("classification matches the parity table for n <= 8") {
  std::size_t checked = 0;
  for (ModeKind m : kAllModes)
    for (unsigned n = 2; n <= 8; ++n) {
      const CategoryMode mode(m, n);
      for (Atom i = 0; i < n; ++i)
        for (Atom j = 0; j <= i; ++j) {
          REQUIRE(classify(i, j, mode) == table(m, i, j));
          ++checked;
        }
    }
  CHECK(checked == 6 * (3 + 6 + 10 + 15 + 21 + 28 + 36));
}

TEST_CASE("classification of i < j depends on symmetry") {
  for (ModeKind m : kAllModes) {
    const CategoryMode mode(m, 4);
    if (mode.symmetric())
      CHECK(classify(0, 3, mode) == table(m, 0, 3));
    else
      CHECK(kind_thrown([&] { classify(0, 3, mode); }) == ErrorKind::OrderingViolation);
  }
}

TEST_CASE("law kinds render and parse") {
  for (LawKind k : {LawKind::BoxBox, LawKind::DiaDia, LawKind::DiaBox, LawKind::BoxDia})
    CHECK(parse_law_kind(to_string(k)) == k);
  CHECK_FALSE(parse_law_kind("boxbox"));
}

TEST_CASE("make_law enforces ordering, range and uniform sides") {
  const CategoryMode dcmd(ModeKind::DCmd, 3);
  CHECK(kind_thrown([&] { make_law(dcmd, {0}, {1}); }) == ErrorKind::OrderingViolation);
  CHECK(kind_thrown([&] { make_law(dcmd, {2}, {3}); }) == ErrorKind::IndexOutOfRange);
  CHECK(make_law(dcmd, {2, 1}, {1, 0}).kind == LawKind::BoxBox);
  const CategoryMode ent(ModeKind::Ent, 3);
  CHECK(kind_thrown([&] { make_law(ent, {2, 1}, {0}); }) == ErrorKind::ShapeMismatch);
  CHECK(make_law(ent, {1}, {0}).kind == LawKind::DiaBox);
  CHECK(make_law(ent, {2}, {1}).kind == LawKind::BoxDia);
  CHECK_NOTHROW(make_law(CategoryMode(ModeKind::SDCmd, 3), {0}, {2}));
}

TEST_CASE("parse_law reads both label spellings") {
  const CategoryMode m(ModeKind::SDCmd, 3);
  CHECK(render(parse_law("d[2;(1;1)]", m)) == "d[2;(1;1)]");
  CHECK(render(parse_law(" d_{0;eps} ", m)) == "d[0;eps]");
  CHECK(parse_law("d[(0;eps);1]", m).moving == ModIndex{0});
  CHECK_THROWS_AS(parse_law("d[2;1;1]", m), ParseError);
  CHECK_THROWS_AS(parse_law("e[2;1]", m), ParseError);
  CHECK_THROWS_AS(parse_law("d[2]", m), ParseError);
  CHECK(kind_thrown([&] { parse_law("d[3;1]", m); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("directed composition on the fixed and moving edges") {
  const CategoryMode dcmd(ModeKind::DCmd, 3);
  const LawCell d10 = make_law(dcmd, {1}, {0});
  CHECK(render(compose_dir(d10, d10, 0)) == "d[1;(0;0)]");
  CHECK(render(compose_dir(d10, make_law(dcmd, {2}, {0}), 1)) == "d[(2;1);0]");
  CHECK(kind_thrown([&] { compose_dir(d10, d10, 2); }) == ErrorKind::NotComposable);
  CHECK(kind_thrown([&] { compose_dir(d10, make_law(dcmd, {2}, {1}), 1); }) ==
        ErrorKind::NotComposable);
  const CategoryMode sdcmd(ModeKind::SDCmd, 3);
  CHECK(render(compose_dir(make_law(sdcmd, {0}, {1}), make_law(sdcmd, {0}, {2}), 1)) ==
        "d[0;(2;1)]");
  CHECK(kind_thrown([&] { compose_dir(d10, make_law(sdcmd, {1}, {0}), 0); }) ==
        ErrorKind::ModeMismatch);
}

TEST_CASE("horizontal and vertical composites carry explicit grids") {
  const CategoryMode dcmd(ModeKind::DCmd, 3);
  const auto d20 = as_composite(make_law(dcmd, {2}, {0}));
  const auto d21 = as_composite(make_law(dcmd, {2}, {1}));
  const auto d10 = as_composite(make_law(dcmd, {1}, {0}));

  const auto h = compose_h(d20, d21);
  CHECK(render(h.label) == "d[2;(1;0)]");
  CHECK(render(h.term) == "d[2;1] box_0 >> box_1 d[2;0]");
  CHECK(render(h.term.source()) == "box_2 box_1 box_0");
  CHECK(render(h.term.target()) == "box_1 box_0 box_2");

  const auto v = compose_v(d10, d20);
  CHECK(render(v.label) == "d[(2;1);0]");
  CHECK(render(v.term) == "box_2 d[1;0] >> d[2;0] box_1");
  CHECK(render(v.term.target()) == "box_0 box_2 box_1");

  CHECK_THROWS_AS(compose_h(d20, d10), Error);
  CHECK_THROWS_AS(compose_v(d21, d20), Error);
}

TEST_CASE("property: composite labels agree with directed composition") {
  std::mt19937 rng(3);
  const CategoryMode dcmd(ModeKind::DCmd, 5);
  for (int n = 0; n < 500; ++n) {
    // moving atoms from {3,4}, fixed atoms from {0,1,2}
    auto side = [&](Atom lo, Atom hi) {
      std::vector<Atom> a(std::uniform_int_distribution<int>(1, 2)(rng));
      for (auto& x : a) x = std::uniform_int_distribution<Atom>(lo, hi)(rng);
      return ModIndex(a);
    };
    const ModIndex i1 = side(3, 4), i2 = side(3, 4);
    const ModIndex j1 = side(0, 2), j2 = side(0, 2);
    const LawCell a = make_law(dcmd, i1, j1);
    const LawCell hb = make_law(dcmd, i1, j2);
    const LawCell vb = make_law(dcmd, i2, j1);
    const auto h = compose_h(as_composite(a), as_composite(hb));
    REQUIRE(h.label == compose_dir(a, hb, j1[0]));
    REQUIRE(h.term.source() == letters(dcmd, i1.then(j2).then(j1)));
    REQUIRE(h.term.target() == letters(dcmd, j2.then(j1).then(i1)));
    const auto v = compose_v(as_composite(a), as_composite(vb));
    REQUIRE(v.label == compose_dir(a, vb, i1[0]));
    REQUIRE(v.term.size() == (i1.size() + i2.size()) * j1.size());
  }
}

TEST_CASE("canonical grids have one generator per crossing") {
  const CategoryMode ent(ModeKind::Ent, 6);
  const LawCell d = make_law(ent, {5, 3}, {2, 0, 0});
  const TwoCellTerm t = law_term(d);
  CHECK(t.size() == 6);
  CHECK(t.source() == letters(ent, ModIndex{5, 3, 2, 0, 0}));
  CHECK(t.target() == letters(ent, ModIndex{2, 0, 0, 5, 3}));
  for (const Layer& l : t.layers()) CHECK(l.gen.kind == GenKind::Law);
}

TEST_CASE("special cells are identities on their chains") {
  const CategoryMode dmnd(ModeKind::DMnd, 3);
  const auto lu = special_cell(SpecialKind::LeftUnit, dmnd, {2});
  CHECK(render(lu.label) == "d[2;eps]");
  CHECK(lu.term.size() == 0);
  const auto ru = special_cell(SpecialKind::RightUnit, dmnd, {1, 0});
  CHECK(render(ru.label) == "d[eps;(1;0)]");
  const auto id = special_cell(SpecialKind::IdentitySquare, dmnd, {1});
  CHECK(render(id.label) == "d[1;1]");
  CHECK(render(as_axiom(id.label)) == "dia_1 dia_1 A -> dia_1 dia_1 A");
  CHECK_THROWS_AS(special_cell(SpecialKind::IdentitySquare, dmnd, {1, 0}), Error);
}

TEST_CASE("laws read as axioms") {
  CHECK(render(as_axiom(make_law(CategoryMode(ModeKind::DCmd, 2), {1}, {0}))) ==
        "box_1 box_0 A -> box_0 box_1 A");
  CHECK(render(as_axiom(make_law(CategoryMode(ModeKind::Ent, 2), {1}, {0}))) ==
        "dia_1 box_0 A -> box_0 dia_1 A");
  CHECK(render(as_axiom(make_law(CategoryMode(ModeKind::SEnt, 3), {0}, {1, 1}))) ==
        "box_0 dia_1 dia_1 A -> dia_1 dia_1 box_0 A");
}
