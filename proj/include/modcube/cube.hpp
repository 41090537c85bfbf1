#pragma once

// Cells of a multiple category of cubical type. Axes are absolute atoms,
// never renumbered when a face erases one.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modcube/dlaw.hpp"
#include "modcube/mode.hpp"

namespace modcube {

enum class Sign { Minus, Plus };

/// Strictly increasing subset of the mode's axes.
using MultiIndex = std::vector<Atom>;

class Cube {
 public:
  struct Node {};
  /// Operator chain along `axis`; an empty chain is an identity edge.
  struct Edge {
    Atom axis;
    ModIndex chain;
  };
  /// A law cell drawn with its moving side along `moving_axis` and its fixed
  /// side along `fixed_axis`.
  struct Square {
    LawCell law;
    Atom moving_axis;
    Atom fixed_axis;
  };
  struct Composite {
    std::shared_ptr<const Cube> a;
    std::shared_ptr<const Cube> b;
    Atom dir;
  };
  struct Degenerate {
    std::shared_ptr<const Cube> base;
    Atom axis;
  };
  using Content = std::variant<Node, Edge, Square, Composite, Degenerate>;

  static Cube node(const CategoryMode& mode);
  static Cube edge(const CategoryMode& mode, Atom axis, ModIndex chain);
  static Cube square(LawCell law, Atom moving_axis, Atom fixed_axis);
  /// Axes read off the sides: each side must use a single atom, and the two
  /// atoms must differ. Throws ShapeMismatch otherwise.
  static Cube square(LawCell law);

  const CategoryMode& mode() const noexcept { return mode_; }
  const MultiIndex& axes() const noexcept { return axes_; }
  const Content& content() const noexcept { return content_; }
  std::size_t dim() const noexcept { return axes_.size(); }
  bool has_axis(Atom a) const noexcept;

 private:
  Cube(CategoryMode mode, MultiIndex axes, Content content);
  friend struct CubeAccess;

  CategoryMode mode_;
  MultiIndex axes_;
  Content content_;
};

/// Throws AxisNotPresent unless i is an axis of c.
Cube face(const Cube& c, Atom i, Sign sign);
/// Throws AxisAlreadyPresent if j is an axis of c.
Cube degeneracy(const Cube& c, Atom j);
/// a +_dir b. Throws AxisNotPresent, ModeMismatch, or NotComposable when the
/// shared face differs or two squares are drawn with different orientations.
Cube compose(const Cube& a, const Cube& b, Atom dir);

/// Flattens composites of edges and squares, erases unit degeneracies and
/// pushes degeneracies through composites.
Cube normalize(const Cube& c);
/// Structural equality of normal forms.
bool equivalent(const Cube& a, const Cube& b);

/// (a +_i b) +_j (c +_i d) versus (a +_j c) +_i (b +_j d). Needs i < j.
bool interchange_check(const Cube& a, const Cube& b, const Cube& c,
                       const Cube& d, Atom i, Atom j);

/// Axis along which the moving side runs, if c is square-like and oriented.
std::optional<Atom> moving_axis(const Cube& c);

/// The law cell and explicit 2-cell of a two-dimensional cube. Composites
/// along the moving axis become vertical composites, the others horizontal.
/// Throws ShapeMismatch for cubes that are not two-dimensional.
LawComposite term(const Cube& c);

std::string render(const Cube& c);

}  // namespace modcube
