#include "modcube/cube.hpp"

#include <algorithm>

#include "modcube/error.hpp"

namespace modcube {

struct CubeAccess {
  static Cube make(CategoryMode mode, MultiIndex axes, Cube::Content content) {
    return Cube(mode, std::move(axes), std::move(content));
  }
};

namespace {

MultiIndex with(const MultiIndex& axes, Atom j) {
  MultiIndex out = axes;
  out.insert(std::upper_bound(out.begin(), out.end(), j), j);
  return out;
}

std::shared_ptr<const Cube> share(Cube c) {
  return std::make_shared<const Cube>(std::move(c));
}

Cube raw_composite(const Cube& a, const Cube& b, Atom dir) {
  return CubeAccess::make(a.mode(), a.axes(),
                          Cube::Composite{share(a), share(b), dir});
}

template <typename T>
const T* as(const Cube& c) {
  return std::get_if<T>(&c.content());
}

}  // namespace

Cube::Cube(CategoryMode mode, MultiIndex axes, Content content)
    : mode_(mode), axes_(std::move(axes)), content_(std::move(content)) {}

bool Cube::has_axis(Atom a) const noexcept {
  return std::binary_search(axes_.begin(), axes_.end(), a);
}

Cube Cube::node(const CategoryMode& mode) { return Cube(mode, {}, Node{}); }

Cube Cube::edge(const CategoryMode& mode, Atom axis, ModIndex chain) {
  mode.check_atom(axis);
  mode.check_index(chain);
  return Cube(mode, {axis}, Edge{axis, std::move(chain)});
}

Cube Cube::square(LawCell law, Atom moving_axis, Atom fixed_axis) {
  law.mode.check_atom(moving_axis);
  law.mode.check_atom(fixed_axis);
  if (moving_axis == fixed_axis)
    throw Error(ErrorKind::ShapeMismatch, "a square needs two distinct axes");
  MultiIndex axes{std::min(moving_axis, fixed_axis),
                  std::max(moving_axis, fixed_axis)};
  const CategoryMode mode = law.mode;
  return Cube(mode, std::move(axes), Square{std::move(law), moving_axis, fixed_axis});
}

Cube Cube::square(LawCell law) {
  auto single_atom = [&](const ModIndex& side) -> std::optional<Atom> {
    if (side.empty()) return std::nullopt;
    for (Atom a : side)
      if (a != side[0]) return std::nullopt;
    return side[0];
  };
  const auto m = single_atom(law.moving);
  const auto f = single_atom(law.fixed);
  if (!m || !f || *m == *f)
    throw Error(ErrorKind::ShapeMismatch,
                render(law) + " does not determine its axes; give them explicitly");
  return square(std::move(law), *m, *f);
}

Cube face(const Cube& c, Atom i, Sign sign) {
  if (!c.has_axis(i))
    throw Error(ErrorKind::AxisNotPresent,
                "axis " + std::to_string(i) + " is not an axis of " + render(c));
  const CategoryMode& mode = c.mode();
  return std::visit(
      [&](const auto& x) -> Cube {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cube::Node>) {
          throw Error(ErrorKind::AxisNotPresent, "a node has no faces");
        } else if constexpr (std::is_same_v<T, Cube::Edge>) {
          return Cube::node(mode);
        } else if constexpr (std::is_same_v<T, Cube::Square>) {
          if (i == x.moving_axis) return Cube::edge(mode, x.fixed_axis, x.law.fixed);
          return Cube::edge(mode, x.moving_axis, x.law.moving);
        } else if constexpr (std::is_same_v<T, Cube::Composite>) {
          if (i == x.dir) return face(sign == Sign::Minus ? *x.a : *x.b, i, sign);
          return compose(face(*x.a, i, sign), face(*x.b, i, sign), x.dir);
        } else {
          if (i == x.axis) return *x.base;
          return degeneracy(face(*x.base, i, sign), x.axis);
        }
      },
      c.content());
}

Cube degeneracy(const Cube& c, Atom j) {
  c.mode().check_atom(j);
  if (c.has_axis(j))
    throw Error(ErrorKind::AxisAlreadyPresent,
                "axis " + std::to_string(j) + " is already an axis of " + render(c));
  return CubeAccess::make(c.mode(), with(c.axes(), j), Cube::Degenerate{share(c), j});
}

std::optional<Atom> moving_axis(const Cube& c) {
  if (const auto* s = as<Cube::Square>(c)) return s->moving_axis;
  if (const auto* k = as<Cube::Composite>(c)) {
    if (auto m = moving_axis(*k->a)) return m;
    return moving_axis(*k->b);
  }
  return std::nullopt;
}

Cube compose(const Cube& a, const Cube& b, Atom dir) {
  if (!(a.mode() == b.mode()))
    throw Error(ErrorKind::ModeMismatch, "cubes come from different modes");
  if (!a.has_axis(dir) || !b.has_axis(dir))
    throw Error(ErrorKind::AxisNotPresent,
                "direction " + std::to_string(dir) + " is not an axis of both operands");
  if (a.axes() != b.axes())
    throw Error(ErrorKind::NotComposable, "operands span different axes");
  const Cube out = face(a, dir, Sign::Plus);
  const Cube in = face(b, dir, Sign::Minus);
  if (!equivalent(out, in))
    throw Error(ErrorKind::NotComposable,
                render(a) + " +_" + std::to_string(dir) + " " + render(b) +
                    ": face " + render(normalize(out)) + " vs " +
                    render(normalize(in)));
  const auto ma = moving_axis(a);
  const auto mb = moving_axis(b);
  if (ma && mb && *ma != *mb)
    throw Error(ErrorKind::NotComposable,
                "squares drawn with different orientations do not compose");
  return raw_composite(a, b, dir);
}

namespace {

// A two-dimensional degenerate cube read as a unit law square.
std::optional<LawCell> unit_law(const Cube& c, Atom m) {
  const auto* d = as<Cube::Degenerate>(c);
  if (!d || c.dim() != 2) return std::nullopt;
  const Cube base = normalize(*d->base);
  const auto* e = as<Cube::Edge>(base);
  if (!e) return std::nullopt;
  if (d->axis == m) return make_law(c.mode(), {}, e->chain);
  return make_law(c.mode(), e->chain, {});
}

std::optional<Cube> as_square(const Cube& c, Atom m, Atom f) {
  if (as<Cube::Square>(c)) return c;
  if (auto law = unit_law(c, m)) return Cube::square(*law, m, f);
  return std::nullopt;
}

Cube merge(const Cube& a, const Cube& b, Atom dir) {
  if (const auto* d = as<Cube::Degenerate>(a); d && d->axis == dir) return b;
  if (const auto* d = as<Cube::Degenerate>(b); d && d->axis == dir) return a;
  if (const auto* ea = as<Cube::Edge>(a))
    if (const auto* eb = as<Cube::Edge>(b))
      return Cube::edge(a.mode(), dir, eb->chain.then(ea->chain));
  const auto* da = as<Cube::Degenerate>(a);
  const auto* db = as<Cube::Degenerate>(b);
  if (da && db && da->axis == db->axis) {
    Cube inner = merge(normalize(*da->base), normalize(*db->base), dir);
    if (as<Cube::Composite>(inner)) return raw_composite(a, b, dir);
    return degeneracy(inner, da->axis);
  }
  const Cube::Square* oriented = as<Cube::Square>(a);
  if (!oriented) oriented = as<Cube::Square>(b);
  if (oriented) {
    const Atom m = oriented->moving_axis;
    const Atom f = oriented->fixed_axis;
    const auto sa = as_square(a, m, f);
    const auto sb = as_square(b, m, f);
    if (sa && sb) {
      const auto& A = std::get<Cube::Square>(sa->content());
      const auto& B = std::get<Cube::Square>(sb->content());
      if (A.moving_axis == B.moving_axis) {
        LawCell law = dir == m
                          ? make_law(a.mode(), B.law.moving.then(A.law.moving), A.law.fixed)
                          : make_law(a.mode(), A.law.moving, B.law.fixed.then(A.law.fixed));
        return Cube::square(std::move(law), m, f);
      }
    }
  }
  return raw_composite(a, b, dir);
}

}  // namespace

Cube normalize(const Cube& c) {
  if (const auto* d = as<Cube::Degenerate>(c)) {
    const Cube base = normalize(*d->base);
    if (as<Cube::Node>(base)) return Cube::edge(c.mode(), d->axis, {});
    if (const auto* k = as<Cube::Composite>(base))
      return normalize(compose(degeneracy(*k->a, d->axis),
                               degeneracy(*k->b, d->axis), k->dir));
    // Stacked degeneracies commute; the outermost axis is the largest.
    if (const auto* inner = as<Cube::Degenerate>(base); inner && inner->axis > d->axis)
      return degeneracy(normalize(degeneracy(*inner->base, d->axis)), inner->axis);
    if (const auto* e = as<Cube::Edge>(base); e && e->chain.empty() && e->axis > d->axis)
      return degeneracy(Cube::edge(c.mode(), d->axis, {}), e->axis);
    return degeneracy(base, d->axis);
  }
  if (const auto* k = as<Cube::Composite>(c))
    return merge(normalize(*k->a), normalize(*k->b), k->dir);
  return c;
}

bool equivalent(const Cube& a, const Cube& b) {
  return a.mode() == b.mode() && a.axes() == b.axes() &&
         render(normalize(a)) == render(normalize(b));
}

bool interchange_check(const Cube& a, const Cube& b, const Cube& c,
                       const Cube& d, Atom i, Atom j) {
  if (!(i < j))
    throw Error(ErrorKind::ShapeMismatch, "interchange needs i < j");
  const Cube rows = compose(compose(a, b, i), compose(c, d, i), j);
  const Cube cols = compose(compose(a, c, j), compose(b, d, j), i);
  return equivalent(rows, cols);
}

namespace {

LawComposite term_oriented(const Cube& c, Atom m, Atom f) {
  if (const auto* s = as<Cube::Square>(c)) {
    if (s->moving_axis != m)
      throw Error(ErrorKind::ShapeMismatch, "square orientation differs from its partners");
    return as_composite(s->law);
  }
  if (const auto* k = as<Cube::Composite>(c)) {
    const LawComposite ta = term_oriented(*k->a, m, f);
    const LawComposite tb = term_oriented(*k->b, m, f);
    return k->dir == m ? compose_v(ta, tb) : compose_h(ta, tb);
  }
  if (auto law = unit_law(c, m))
    return {*law, TwoCellTerm::identity(letters(c.mode(), law->moving.then(law->fixed)))};
  throw Error(ErrorKind::ShapeMismatch, render(c) + " is not a law square");
}

}  // namespace

LawComposite term(const Cube& c) {
  if (c.dim() != 2)
    throw Error(ErrorKind::ShapeMismatch, "only two-dimensional cubes carry a law");
  Atom m;
  if (auto ma = moving_axis(c)) {
    m = *ma;
  } else if (const auto* d = as<Cube::Degenerate>(c)) {
    m = d->axis;
  } else {
    m = c.axes()[1];
  }
  const Atom f = c.axes()[0] == m ? c.axes()[1] : c.axes()[0];
  return term_oriented(c, m, f);
}

std::string render(const Cube& c) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cube::Node>) {
          return "node";
        } else if constexpr (std::is_same_v<T, Cube::Edge>) {
          return "edge_" + std::to_string(x.axis) + "[" + render_side(x.chain) + "]";
        } else if constexpr (std::is_same_v<T, Cube::Square>) {
          return "sq_" + std::to_string(x.moving_axis) + std::to_string(x.fixed_axis) +
                 " " + render(x.law);
        } else if constexpr (std::is_same_v<T, Cube::Composite>) {
          return "(" + render(*x.a) + " +_" + std::to_string(x.dir) + " " +
                 render(*x.b) + ")";
        } else {
          return "e_" + std::to_string(x.axis) + "(" + render(*x.base) + ")";
        }
      },
      c.content());
}

}  // namespace modcube
