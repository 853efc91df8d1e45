#include "defect_robust/templates.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "defect_robust/angles.hpp"
#include "defect_robust/errors.hpp"

namespace defect_robust {
namespace {

using Key = std::pair<int, int>;
using Edge = std::tuple<int, int, int, int>;

Key key(const Eigen::Vector2i& v) { return {v.x(), v.y()}; }

bool cell_less(const Cell& a, const Cell& b) { return key(a) < key(b); }

std::vector<Cell> block(int x0, int x1, int y0, int y1) {
  std::vector<Cell> cells;
  for (int a = x0; a < x1; ++a)
    for (int b = y0; b < y1; ++b) cells.emplace_back(a, b);
  return cells;
}

void require_connected(const std::vector<Cell>& cells) {
  std::set<Key> remaining;
  for (const auto& c : cells) remaining.insert(key(c));
  std::queue<Key> frontier;
  frontier.push(*remaining.begin());
  remaining.erase(remaining.begin());
  while (!frontier.empty()) {
    const auto [a, b] = frontier.front();
    frontier.pop();
    for (const Key& next : {Key{a + 1, b}, Key{a - 1, b}, Key{a, b + 1}, Key{a, b - 1}}) {
      if (auto it = remaining.find(next); it != remaining.end()) {
        remaining.erase(it);
        frontier.push(next);
      }
    }
  }
  if (!remaining.empty()) throw InvalidCellSet("cell set is not 4-connected");
}

int parse_square_size(std::string_view name) {
  std::string_view digits;
  if (name.starts_with("square(") && name.ends_with(")"))
    digits = name.substr(7, name.size() - 8);
  else if (name.starts_with("square"))
    digits = name.substr(6);
  else
    return 0;
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) return 0;
  return n;
}

}  // namespace

Eigen::Vector2d Template::centroid() const {
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  for (const auto& c : cells) sum += c.cast<double>();
  return sum / static_cast<double>(cells.size()) + Eigen::Vector2d::Constant(0.5);
}

const std::vector<std::string>& builtin_template_names() {
  static const std::vector<std::string> names{"single", "2x2", "cross", "3x3", "3x3ext"};
  return names;
}

LatticePath boundary_of_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw InvalidCellSet("empty cell set");
  std::sort(cells.begin(), cells.end(), cell_less);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  require_connected(cells);

  // Counterclockwise faces of every cell; faces shared by two cells cancel.
  std::set<Edge> faces;
  for (const auto& c : cells) {
    const int a = c.x(), b = c.y();
    const Edge ccw[4] = {{a, b, a + 1, b},
                         {a + 1, b, a + 1, b + 1},
                         {a + 1, b + 1, a, b + 1},
                         {a, b + 1, a, b}};
    for (const auto& [x0, y0, x1, y1] : ccw) {
      if (auto rev = faces.find({x1, y1, x0, y0}); rev != faces.end())
        faces.erase(rev);
      else
        faces.insert({x0, y0, x1, y1});
    }
  }

  std::map<Key, Key> successor;
  for (const auto& [x0, y0, x1, y1] : faces)
    if (!successor.emplace(Key{x0, y0}, Key{x1, y1}).second)
      throw InvalidCellSet("boundary touches itself at (" + std::to_string(x0) + ", " +
                           std::to_string(y0) + "); cell set has a hole");

  const Key start = successor.begin()->first;
  std::vector<GridPoint> loop;
  Key at = start;
  do {
    loop.emplace_back(at.first, at.second);
    at = successor.at(at);
  } while (at != start && loop.size() <= faces.size());
  if (loop.size() != faces.size()) throw InvalidCellSet("cell set has a hole");
  return LatticePath::closed_loop(std::move(loop));
}

Template make_template(std::string name, std::vector<Cell> cells) {
  LatticePath boundary = boundary_of_cells(cells);
  std::sort(cells.begin(), cells.end(), cell_less);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const double resolution = std::sqrt(static_cast<double>(cells.size()));
  return Template{std::move(name), std::move(cells), std::move(boundary), resolution};
}

Template builtin_template(std::string_view name) {
  if (name == "single") return make_template("single", {Cell(0, 0)});
  if (name == "2x2") return make_template("2x2", block(0, 2, 0, 2));
  if (name == "3x3") return make_template("3x3", block(0, 3, 0, 3));
  if (name == "cross")
    return make_template("cross", {Cell(1, 0), Cell(0, 1), Cell(1, 1), Cell(2, 1), Cell(1, 2)});
  if (name == "3x3ext" || name == "3x3 ext") {
    auto cells = block(0, 3, 0, 3);
    cells.insert(cells.end(), {Cell(1, -1), Cell(1, 3), Cell(-1, 1), Cell(3, 1)});
    return make_template("3x3ext", std::move(cells));
  }
  if (const int n = parse_square_size(name); n > 0)
    return make_template("square(" + std::to_string(n) + ")", block(0, n, 0, n));
  throw UnknownTemplate("unknown template '" + std::string(name) + "'");
}

double view_angle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                  const Eigen::Vector2d& center) {
  const Eigen::Vector2d da = a - center;
  const Eigen::Vector2d db = b - center;
  return wrap_diff(std::atan2(db.y(), db.x()) - std::atan2(da.y(), da.x()), PeriodMode::Polar);
}

double distance_to_boundary(const LatticePath& boundary, const Eigen::Vector2d& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < boundary.num_edges(); ++e) {
    const Eigen::Vector2d a = boundary.edge_start(e).cast<double>();
    const Eigen::Vector2d b = boundary.edge_end(e).cast<double>();
    const Eigen::Vector2d ab = b - a;
    const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    best = std::min(best, (a + t * ab - p).norm());
  }
  return best;
}

bool strictly_inside(const LatticePath& boundary, const Eigen::Vector2d& p) {
  if (distance_to_boundary(boundary, p) == 0.0) return false;
  bool inside = false;
  for (std::size_t e = 0; e < boundary.num_edges(); ++e) {
    const Eigen::Vector2d a = boundary.edge_start(e).cast<double>();
    const Eigen::Vector2d b = boundary.edge_end(e).cast<double>();
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

double max_view_angle(const Template& tmpl, const Eigen::Vector2d& center) {
  if (distance_to_boundary(tmpl.boundary, center) < 1e-12)
    throw DegenerateCenter("center lies on the template boundary");
  if (!strictly_inside(tmpl.boundary, center))
    throw std::invalid_argument("center lies outside the template");
  double best = 0;
  for (std::size_t e = 0; e < tmpl.boundary.num_edges(); ++e)
    best = std::max(best, std::abs(view_angle(tmpl.boundary.edge_start(e).cast<double>(),
                                              tmpl.boundary.edge_end(e).cast<double>(), center)));
  return best;
}

Placement place_near(const Template& tmpl, const Eigen::Vector2d& target) {
  const Eigen::Vector2d shift = target - tmpl.centroid();
  return Placement{tmpl, GridPoint(static_cast<int>(std::lround(shift.x())),
                                   static_cast<int>(std::lround(shift.y())))};
}

}  // namespace defect_robust
