#include "modcube/dlaw.hpp"

#include <algorithm>
#include <cctype>

#include "modcube/error.hpp"

namespace modcube {

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::BoxBox: return "box";
    case LawKind::DiaDia: return "dia";
    case LawKind::DiaBox: return "diabox";
    case LawKind::BoxDia: return "boxdia";
  }
  return "?";
}

std::optional<LawKind> parse_law_kind(std::string_view text) {
  for (LawKind k : {LawKind::BoxBox, LawKind::DiaDia, LawKind::DiaBox,
                    LawKind::BoxDia})
    if (text == to_string(k)) return k;
  return std::nullopt;
}

LawKind kind_of(OpKind moving, OpKind fixed) {
  if (moving == OpKind::Box)
    return fixed == OpKind::Box ? LawKind::BoxBox : LawKind::BoxDia;
  return fixed == OpKind::Box ? LawKind::DiaBox : LawKind::DiaDia;
}

LawKind classify(Atom i, Atom j, const CategoryMode& mode) {
  if (!mode.symmetric() && i < j)
    throw Error(ErrorKind::OrderingViolation,
                "d_{" + std::to_string(i) + std::to_string(j) +
                    "} needs i >= j in " + to_string(mode.kind));
  return kind_of(mode.op_for(i), mode.op_for(j));
}

namespace {

std::optional<OpKind> side_op(const CategoryMode& mode, const ModIndex& side) {
  if (side.empty()) return std::nullopt;
  const OpKind op = mode.op_for(side[0]);
  for (Atom a : side)
    if (mode.op_for(a) != op)
      throw Error(ErrorKind::ShapeMismatch,
                  "side " + render_side(side) +
                      " mixes box and dia operators in one law");
  return op;
}

}  // namespace

LawCell make_law(const CategoryMode& mode, ModIndex moving, ModIndex fixed) {
  mode.check_index(moving);
  mode.check_index(fixed);
  if (!mode.symmetric())
    for (Atom i : moving)
      for (Atom j : fixed)
        if (i < j)
          throw Error(ErrorKind::OrderingViolation,
                      "d[" + render_side(moving) + ";" + render_side(fixed) +
                          "]: atom " + std::to_string(i) + " < " +
                          std::to_string(j) + " not allowed in " +
                          to_string(mode.kind));
  const auto mop = side_op(mode, moving);
  const auto fop = side_op(mode, fixed);
  const OpKind m = mop.value_or(fop.value_or(mode.op_for(0)));
  const OpKind f = fop.value_or(m);
  return LawCell{std::move(moving), std::move(fixed), kind_of(m, f), mode};
}

LawCell indexing_normal_form(const LawCell& d) {
  auto sorted = [](const ModIndex& x) {
    std::vector<Atom> a = x.atoms();
    std::sort(a.begin(), a.end());
    return ModIndex(std::move(a));
  };
  LawCell out = d;
  out.moving = sorted(d.moving);
  out.fixed = sorted(d.fixed);
  return out;
}

std::string render(const LawCell& d) {
  return "d[" + render_side(d.moving) + ";" + render_side(d.fixed) + "]";
}

LawCell parse_law(std::string_view text, const CategoryMode& mode) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  char close;
  if (s.starts_with("d[")) {
    close = ']';
  } else if (s.starts_with("d_{")) {
    close = '}';
    s.remove_prefix(1);
  } else {
    throw ParseError(0, "law cell must look like d[I;J]");
  }
  s.remove_prefix(2);
  if (s.empty() || s.back() != close)
    throw ParseError(text.size(), std::string("expected '") + close + "'");
  s.remove_suffix(1);
  // Split at the top-level ';'.
  int depth = 0;
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == '}') --depth;
    if (s[i] == ';' && depth == 0) {
      if (split != std::string_view::npos)
        throw ParseError(i, "composite sides must be parenthesized, e.g. d[2;(1;1)]");
      split = i;
    }
  }
  if (split == std::string_view::npos)
    throw ParseError(0, "law cell needs two sides separated by ';'");
  ModIndex moving = parse_index(s.substr(0, split), mode.arity);
  ModIndex fixed = parse_index(s.substr(split + 1), mode.arity);
  return make_law(mode, std::move(moving), std::move(fixed));
}

LawCell compose_dir(const LawCell& d1, const LawCell& d2, Atom dir) {
  if (!(d1.mode == d2.mode))
    throw Error(ErrorKind::ModeMismatch, "cells come from different modes");
  d1.mode.check_atom(dir);
  auto contains = [](const ModIndex& x, Atom a) {
    return std::find(x.begin(), x.end(), a) != x.end();
  };
  if (contains(d1.moving, dir)) {
    if (d1.fixed != d2.fixed)
      throw Error(ErrorKind::NotComposable,
                  render(d1) + " +_" + std::to_string(dir) + " " + render(d2) +
                      ": fixed sides differ");
    return make_law(d1.mode, d2.moving.then(d1.moving), d1.fixed);
  }
  if (contains(d1.fixed, dir)) {
    if (d1.moving != d2.moving)
      throw Error(ErrorKind::NotComposable,
                  render(d1) + " +_" + std::to_string(dir) + " " + render(d2) +
                      ": moving sides differ");
    return make_law(d1.mode, d1.moving, d2.fixed.then(d1.fixed));
  }
  throw Error(ErrorKind::NotComposable,
              render(d1) + " has no edge in direction " + std::to_string(dir));
}

TwoCellTerm law_term(const LawCell& d) {
  return canonical_law(letters(d.mode, d.moving), letters(d.mode, d.fixed));
}

LawComposite as_composite(const LawCell& d) { return {d, law_term(d)}; }

LawComposite compose_h(const LawComposite& a, const LawComposite& b) {
  const LawCell& la = a.label;
  const LawCell& lb = b.label;
  if (!(la.mode == lb.mode))
    throw Error(ErrorKind::ModeMismatch, "cells come from different modes");
  if (la.moving != lb.moving)
    throw Error(ErrorKind::NotComposable,
                "(" + render(la) + " | " + render(lb) + "): moving sides differ");
  const auto ja = letters(la.mode, la.fixed);
  const auto jb = letters(la.mode, lb.fixed);
  TwoCellTerm term = b.term.whisker({}, ja).then(a.term.whisker(jb, {}));
  return {make_law(la.mode, la.moving, lb.fixed.then(la.fixed)), std::move(term)};
}

LawComposite compose_v(const LawComposite& a, const LawComposite& b) {
  const LawCell& la = a.label;
  const LawCell& lb = b.label;
  if (!(la.mode == lb.mode))
    throw Error(ErrorKind::ModeMismatch, "cells come from different modes");
  if (la.fixed != lb.fixed)
    throw Error(ErrorKind::NotComposable,
                "(" + render(la) + " / " + render(lb) + "): fixed sides differ");
  const auto ia = letters(la.mode, la.moving);
  const auto ib = letters(la.mode, lb.moving);
  TwoCellTerm term = a.term.whisker(ib, {}).then(b.term.whisker({}, ia));
  return {make_law(la.mode, lb.moving.then(la.moving), la.fixed), std::move(term)};
}

LawComposite special_cell(SpecialKind kind, const CategoryMode& mode,
                          const ModIndex& index) {
  switch (kind) {
    case SpecialKind::LeftUnit: {
      LawCell d = make_law(mode, index, {});
      return {d, TwoCellTerm::identity(letters(mode, index))};
    }
    case SpecialKind::RightUnit: {
      LawCell d = make_law(mode, {}, index);
      return {d, TwoCellTerm::identity(letters(mode, index))};
    }
    case SpecialKind::IdentitySquare: {
      if (index.size() != 1)
        throw Error(ErrorKind::ShapeMismatch, "identity square takes one atom");
      LawCell d = make_law(mode, index, index);
      return {d, TwoCellTerm::identity(letters(mode, index.then(index)))};
    }
  }
  throw Error(ErrorKind::ShapeMismatch, "unknown special cell");
}

AxiomSentence as_axiom(const LawCell& d) {
  const auto i = letters(d.mode, d.moving);
  const auto j = letters(d.mode, d.fixed);
  Formula lhs{i};
  lhs.prefix.insert(lhs.prefix.end(), j.begin(), j.end());
  Formula rhs{j};
  rhs.prefix.insert(rhs.prefix.end(), i.begin(), i.end());
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace modcube
