#include "defect_robust/lattice_path.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "defect_robust/errors.hpp"

namespace defect_robust {
namespace {

bool unit_step(const GridPoint& a, const GridPoint& b) {
  return std::abs(a.x() - b.x()) + std::abs(a.y() - b.y()) == 1;
}

}  // namespace

LatticePath::LatticePath(std::vector<GridPoint> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.empty()) throw InvalidPath("path has no vertices");
  for (std::size_t k = 0; k + 1 < vertices_.size(); ++k)
    if (!unit_step(vertices_[k], vertices_[k + 1]))
      throw InvalidPath("vertices " + std::to_string(k) + " and " + std::to_string(k + 1) +
                        " are not 4-neighbors");
  if (closed_ && !unit_step(vertices_.back(), vertices_.front()))
    throw InvalidPath("closing edge is not a unit step");

  std::set<std::pair<int, int>> seen;
  for (const auto& v : vertices_)
    if (!seen.emplace(v.x(), v.y()).second) throw InvalidPath("path revisits a vertex");
}

Eigen::Vector2d LatticePath::centroid() const {
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  for (const auto& v : vertices_) sum += v.cast<double>();
  return sum / static_cast<double>(vertices_.size());
}

long LatticePath::twice_signed_area() const {
  long area = 0;
  for (std::size_t e = 0; e < num_edges(); ++e) {
    const GridPoint& a = edge_start(e);
    const GridPoint& b = edge_end(e);
    area += static_cast<long>(a.x()) * b.y() - static_cast<long>(b.x()) * a.y();
  }
  return area;
}

LatticePath LatticePath::reversed() const {
  LatticePath out = *this;
  std::reverse(out.vertices_.begin(), out.vertices_.end());
  return out;
}

LatticePath LatticePath::rotated(std::size_t shift) const {
  LatticePath out = *this;
  if (!out.vertices_.empty())
    std::rotate(out.vertices_.begin(),
                out.vertices_.begin() + static_cast<long>(shift % out.vertices_.size()),
                out.vertices_.end());
  return out;
}

LatticePath LatticePath::translated(const GridPoint& offset) const {
  LatticePath out = *this;
  for (auto& v : out.vertices_) v += offset;
  return out;
}

bool LatticePath::inside(int nx, int ny) const {
  return std::all_of(vertices_.begin(), vertices_.end(), [&](const GridPoint& v) {
    return v.x() >= 0 && v.y() >= 0 && v.x() < nx && v.y() < ny;
  });
}

}  // namespace defect_robust
