#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "defect_robust/estimator.hpp"
#include "defect_robust/io.hpp"
#include "defect_robust/templates.hpp"

using namespace defect_robust;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "defect_robust");
  std::ostringstream out, err;
  const int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "defect_robust_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate then charge") {
  const fs::path file = scratch_dir() / "half.orifield";
  REQUIRE(run({"generate", "--charge", "1/2", "--center", "10.3,9.6", "--size", "20,20", "--out",
               file.string()})
              .status == 0);
  for (const char* t : {"single", "2x2", "cross", "3x3", "3x3ext"}) {
    const Placement p = place_near(builtin_template(t), {10.3, 9.6});
    const std::string at = std::to_string(p.offset.x()) + "," + std::to_string(p.offset.y());
    const Run r = run({"charge", "--field", file.string(), "--template", t, "--at", at});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("charge = 1/2\n", 0) == 0);
  }
  const Run rob = run({"robustness", "--field", file.string(), "--template", "single", "--at", "10,9"});
  CHECK(rob.status == 0);
  CHECK(rob.out.find("weakest_edge = ") != std::string::npos);
  CHECK(rob.out.find("normalized = ") != std::string::npos);
}

TEST_CASE("scan finds one charged cell and satisfies additivity") {
  const fs::path file = scratch_dir() / "scan.orifield";
  REQUIRE(run({"generate", "--center", "6.3,7.8", "--size", "14,14", "--out", file.string()})
              .status == 0);
  const Run r = run({"scan", "--field", file.string(), "--template", "single"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].rfind("6,7,6.5,7.5,0.5,", 0) == 0);

  // sum over every unit cell equals the outer loop's charge
  const OrientationField f = read_field(file);
  Charge total;
  for (int j = 0; j + 1 < f.ny(); ++j)
    for (int i = 0; i + 1 < f.nx(); ++i)
      total += estimate_charge(f, builtin_template("single").boundary.translated({i, j})).charge;
  CHECK(total == estimate_charge(f, builtin_template("square(13)").boundary).charge);
  CHECK(total == Charge::from_halves(1));
}

TEST_CASE("oracle and convergence output") {
  const Run o = run({"oracle", "--template", "2x2", "--charge", "1/2", "--density", "50"});
  CHECK(o.status == 0);
  CHECK(o.out.find("lower = 0.785398") != std::string::npos);
  const Run c = run({"convergence", "--sizes", "1,2,3", "--density", "40"});
  CHECK(c.status == 0);
  CHECK(c.out.find("# monotone = true") != std::string::npos);
}

TEST_CASE("usage and data errors") {
  CHECK(run({}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"charge", "--bogus"}).status == 1);
  CHECK(run({"oracle", "--template", "hexagon"}).status == 1);
  CHECK(run({"generate", "--center", "1;2", "--out", "x"}).status == 1);
  CHECK(run({"--help"}).status == 0);

  const fs::path bad = scratch_dir() / "bad.orifield";
  std::ofstream(bad) << "ORIFIELD 1 3 2 1 nematic\n0 0 0\n0 0\n";
  const Run r = run({"charge", "--field", bad.string(), "--template", "single"});
  CHECK(r.status == 2);
  CHECK(r.err.find("row 1") != std::string::npos);
  CHECK(run({"charge", "--field", (scratch_dir() / "missing").string()}).status == 2);
  CHECK(run({"generate", "--center", "3,3", "--size", "8,8", "--out",
             (scratch_dir() / "d.orifield").string()})
            .status == 2);
}

TEST_CASE("sweep output is byte-identical across thread counts") {
  const fs::path dir = scratch_dir();
  const fs::path config = dir / "sweep.json";
  std::ofstream(config) << R"({"n_centers": 40, "realizations": 2, "oracle_density": 20,
                               "templates": ["single", "cross"]})";
  const std::string a = (dir / "a").string(), b = (dir / "b").string();
  REQUIRE(run({"sweep", "--config", config.string(), "--out", a, "--threads", "1", "--seed", "5"}).status == 0);
  REQUIRE(run({"sweep", "--config", config.string(), "--out", b, "--threads", "3", "--seed", "5"}).status == 0);
  CHECK(slurp(a + ".csv") == slurp(b + ".csv"));
  CHECK(slurp(a + ".summary.txt") == slurp(b + ".summary.txt"));
  CHECK(slurp(a + ".csv").size() > 100);
}
