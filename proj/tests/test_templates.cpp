#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "defect_robust/estimator.hpp"
#include "defect_robust/templates.hpp"
#include "test_support.hpp"

using namespace defect_robust;
using namespace defect_robust::testing;
using std::numbers::pi;

namespace {

// Faces not shared between two cells, counted independently of the tracer.
std::size_t unshared_faces(const std::vector<Cell>& cells) {
  std::map<std::tuple<int, int, int>, int> faces;  // (x, y, horizontal?)
  for (const auto& c : cells) {
    ++faces[{c.x(), c.y(), 1}];
    ++faces[{c.x(), c.y() + 1, 1}];
    ++faces[{c.x(), c.y(), 0}];
    ++faces[{c.x() + 1, c.y(), 0}];
  }
  std::size_t n = 0;
  for (const auto& [k, count] : faces) n += count == 1;
  return n;
}

}  // namespace

TEST_CASE("builtin template geometry") {
  struct Expect {
    const char* name;
    std::size_t cells;
    std::size_t edges;
  };
  for (const auto& e : {Expect{"single", 1, 4}, Expect{"2x2", 4, 8}, Expect{"cross", 5, 12},
                        Expect{"3x3", 9, 12}, Expect{"3x3ext", 13, 20},
                        Expect{"square(5)", 25, 20}}) {
    CAPTURE(e.name);
    const Template t = builtin_template(e.name);
    CHECK(t.cells.size() == e.cells);
    CHECK(t.boundary.num_edges() == e.edges);
    CHECK(t.boundary.num_edges() == unshared_faces(t.cells));
    CHECK(t.resolution * t.resolution == doctest::Approx(double(e.cells)).epsilon(1e-15));
    CHECK(t.boundary.twice_signed_area() == 2 * static_cast<long>(e.cells));
    for (const auto& c : t.cells)
      CHECK(strictly_inside(t.boundary, c.cast<double>() + Eigen::Vector2d::Constant(0.5)));
  }
  CHECK(builtin_template("square7").name == "square(7)");
  CHECK(builtin_template("3x3 ext").name == "3x3ext");
}

TEST_CASE("single boundary is the counterclockwise unit loop") {
  const Template t = builtin_template("single");
  const std::vector<GridPoint> expect{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(t.boundary.vertices() == expect);
  CHECK(t.resolution == 1.0);
}

TEST_CASE("cross boundary trace") {
  const LatticePath traced =
      boundary_of_cells({Cell(1, 2), Cell(0, 1), Cell(1, 1), Cell(2, 1), Cell(1, 0)});
  const std::vector<GridPoint> expect{{0, 1}, {1, 1}, {1, 0}, {2, 0}, {2, 1}, {3, 1},
                                      {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}};
  CHECK(traced.vertices() == expect);
  CHECK(traced == builtin_template("cross").boundary);
  CHECK(builtin_template("cross").resolution == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(builtin_template("3x3ext").resolution == doctest::Approx(std::sqrt(13.0)).epsilon(1e-15));
}

TEST_CASE("invalid cell sets") {
  CHECK_THROWS_AS(boundary_of_cells({}), InvalidCellSet);
  CHECK_THROWS_AS(boundary_of_cells({Cell(0, 0), Cell(2, 0)}), InvalidCellSet);
  CHECK_THROWS_AS(boundary_of_cells({Cell(0, 0), Cell(1, 1)}), InvalidCellSet);
  std::vector<Cell> ring;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != 1 || b != 1) ring.emplace_back(a, b);
  CHECK_THROWS_AS(boundary_of_cells(ring), InvalidCellSet);
  CHECK_THROWS_AS(builtin_template("hexagon"), UnknownTemplate);
  CHECK_THROWS_AS(builtin_template("square(0)"), UnknownTemplate);
}

TEST_CASE("boundary tracing commutes with translation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (const auto& name : builtin_template_names()) {
    const Template t = builtin_template(name);
    const GridPoint shift(d(rng), d(rng));
    std::vector<Cell> moved = t.cells;
    for (auto& c : moved) c += shift;
    CHECK(boundary_of_cells(moved) == t.boundary.translated(shift));
  }
}

TEST_CASE("builtin templates on a constant field") {
  const OrientationField f = constant_field(10, 10, 2.2);
  for (const auto& name : builtin_template_names()) {
    const LatticePath path = builtin_template(name).boundary.translated({3, 3});
    CHECK(estimate_charge(f, path).charge.is_zero());
    CHECK(path_robustness(f, path).path_robustness == pi / 2);
  }
}

TEST_CASE("max_view_angle") {
  CHECK(max_view_angle(builtin_template("single"), {0.5, 0.5}) ==
        doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(max_view_angle(builtin_template("single"), {0.5, 0.0}), DegenerateCenter);
  CHECK_THROWS_AS(max_view_angle(builtin_template("single"), {1.5, 0.5}), std::invalid_argument);

  // brute force: subdivide every edge and accumulate the acos angle of each piece
  const Template cross = builtin_template("cross");
  const Eigen::Vector2d c(1.5, 1.5);
  const int pieces = 100000 / static_cast<int>(cross.boundary.num_edges());
  double brute = 0;
  for (std::size_t e = 0; e < cross.boundary.num_edges(); ++e) {
    const Eigen::Vector2d a = cross.boundary.edge_start(e).cast<double>();
    const Eigen::Vector2d b = cross.boundary.edge_end(e).cast<double>();
    double sum = 0;
    for (int k = 0; k < pieces; ++k)
      sum += subtended_acos(a + (b - a) * k / pieces, a + (b - a) * (k + 1) / pieces, c);
    brute = std::max(brute, sum);
  }
  CHECK(max_view_angle(cross, c) == doctest::Approx(brute).epsilon(1e-9));

  for (int n : {4, 8, 16, 32, 64}) {
    const Template sq = builtin_template("square(" + std::to_string(n) + ")");
    const Eigen::Vector2d mid = sq.centroid();
    const double r_min = distance_to_boundary(sq.boundary, mid);
    CHECK(max_view_angle(sq, mid) <= std::asin(1.0 / r_min) + 1e-9);
  }
  CHECK(max_view_angle(builtin_template("square(64)"), {32, 32}) < 0.05);
}

TEST_CASE("max_view_angle is invariant under quarter turns about the centroid") {
  for (const auto& name : builtin_template_names()) {
    const Template t = builtin_template(name);
    const Eigen::Vector2d mid = t.centroid();
    std::vector<Cell> turned;
    for (const auto& cell : t.cells) {
      // quarter turn of the cell center about the origin, back to a corner
      const Eigen::Vector2d center = cell.cast<double>() + Eigen::Vector2d::Constant(0.5);
      const Eigen::Vector2d rot(-center.y(), center.x());
      turned.emplace_back(static_cast<int>(std::lround(rot.x() - 0.5)),
                          static_cast<int>(std::lround(rot.y() - 0.5)));
    }
    const Template u = make_template("turned", turned);
    const Eigen::Vector2d rmid(-mid.y(), mid.x());
    CHECK(u.centroid().isApprox(rmid));
    if (distance_to_boundary(t.boundary, mid) > 0)
      CHECK(max_view_angle(u, rmid) == doctest::Approx(max_view_angle(t, mid)).epsilon(1e-14));
  }
}

TEST_CASE("placement") {
  const Placement p = place_near(builtin_template("3x3ext"), {15.5, 15.5});
  CHECK(p.centroid().isApprox(Eigen::Vector2d(15.5, 15.5)));
  CHECK(p.fits(32, 32));
  CHECK_FALSE(Placement{builtin_template("3x3ext"), GridPoint(0, 0)}.fits(32, 32));
}
