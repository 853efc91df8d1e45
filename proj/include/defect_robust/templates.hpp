#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>
#include <vector>

#include "defect_robust/lattice_path.hpp"

namespace defect_robust {

/// Cell (a, b) is the unit square [a, a+1] x [b, b+1].
using Cell = Eigen::Vector2i;

/// A named estimator path, defined by the set of cells it encloses.
struct Template {
  std::string name;
  std::vector<Cell> cells;  // sorted lexicographically
  LatticePath boundary;     // counterclockwise
  double resolution = 0;    // sqrt(#cells)

  /// Area centroid of the cells.
  Eigen::Vector2d centroid() const;
};

/// Names accepted by builtin_template besides square(n).
const std::vector<std::string>& builtin_template_names();

/// "single", "2x2", "cross", "3x3", "3x3ext" or "square(n)" / "square<n>".
Template builtin_template(std::string_view name);

/// Builds a template from an arbitrary simply connected cell set.
Template make_template(std::string name, std::vector<Cell> cells);

/// Counterclockwise simple cycle around a 4-connected, hole-free cell set,
/// starting at its lexicographically smallest vertex. Throws InvalidCellSet.
LatticePath boundary_of_cells(std::vector<Cell> cells);

/// Largest absolute angle subtended by a boundary edge as seen from
/// `center` (template units). Throws DegenerateCenter if `center` is on the
/// boundary, std::invalid_argument if it is outside.
double max_view_angle(const Template& tmpl, const Eigen::Vector2d& center);

/// Signed angle subtended by segment a->b seen from `center`, in [-pi, pi).
double view_angle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                  const Eigen::Vector2d& center);

/// Euclidean distance from `p` to the nearest boundary edge.
double distance_to_boundary(const LatticePath& boundary, const Eigen::Vector2d& p);

/// Even-odd test against the closed boundary; points on it count as outside.
bool strictly_inside(const LatticePath& boundary, const Eigen::Vector2d& p);

/// A template translated by an integer offset on a field grid.
struct Placement {
  Template tmpl;
  GridPoint offset = GridPoint::Zero();

  LatticePath boundary() const { return tmpl.boundary.translated(offset); }
  Eigen::Vector2d centroid() const { return tmpl.centroid() + offset.cast<double>(); }
  bool fits(int nx, int ny) const { return boundary().inside(nx, ny); }
};

/// Integer offset that puts the template centroid nearest `target`.
Placement place_near(const Template& tmpl, const Eigen::Vector2d& target);

}  // namespace defect_robust
