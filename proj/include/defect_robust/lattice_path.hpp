#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

namespace defect_robust {

using GridPoint = Eigen::Vector2i;

/// Sequence of 4-neighbor lattice vertices. A closed path stores each vertex
/// once; the closing edge runs from the last vertex back to the first.
class LatticePath {
 public:
  LatticePath() = default;

  /// Validates unit axis-aligned steps (including the closing step when
  /// `closed`) and that no vertex repeats. Throws InvalidPath.
  LatticePath(std::vector<GridPoint> vertices, bool closed);

  static LatticePath closed_loop(std::vector<GridPoint> vertices) {
    return LatticePath(std::move(vertices), true);
  }

  const std::vector<GridPoint>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const {
    if (vertices_.empty()) return 0;
    return closed_ ? vertices_.size() : vertices_.size() - 1;
  }

  const GridPoint& edge_start(std::size_t e) const { return vertices_[e]; }
  const GridPoint& edge_end(std::size_t e) const {
    return vertices_[(e + 1) % vertices_.size()];
  }

  /// Mean of the vertex coordinates.
  Eigen::Vector2d centroid() const;

  /// Twice the signed shoelace area; positive for counterclockwise loops.
  long twice_signed_area() const;

  LatticePath reversed() const;
  /// Same loop starting at vertex `shift`.
  LatticePath rotated(std::size_t shift) const;
  LatticePath translated(const GridPoint& offset) const;

  /// True if every vertex satisfies 0 <= i < nx and 0 <= j < ny.
  bool inside(int nx, int ny) const;

  bool operator==(const LatticePath& o) const {
    return closed_ == o.closed_ && vertices_ == o.vertices_;
  }

 private:
  std::vector<GridPoint> vertices_;
  bool closed_ = false;
};

}  // namespace defect_robust
