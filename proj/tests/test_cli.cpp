#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "arcwave/config.hpp"
#include "arcwave/experiments.hpp"

using namespace arcwave;
namespace fs = std::filesystem;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  const fs::path dir = fs::temp_directory_path() / ("arcwave_cli_" + tag + "_" + std::to_string(rng()));
  fs::create_directories(dir);
  return dir;
}

// Runs the CLI on a config written into a fresh directory; returns the exit
// code and leaves outputs in dir.
int run_cli(const std::string& sub, nlohmann::json cfg, const fs::path& dir) {
  cfg["output"] = {{"dir", dir.string()}};
  const fs::path path = dir / "config.json";
  std::ofstream(path) << cfg.dump(2);
  const std::string cmd = std::string("\"") + ARCWAVE_CLI_PATH + "\" " + sub + " --config \"" + path.string() +
                          "\" > \"" + (dir / "stdout.txt").string() + "\" 2> \"" + (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json strip_config() {
  return {{"geometry", {{"name", "flat_strip"}}},
          {"material", {{"lambda", 2.0}, {"mu", 1.0}, {"rho", 1.0}}},
          {"omega", 10.0},
          {"formulation", "DirSw"},
          {"N", 160},
          {"gmres", {{"tol", 1e-5}}}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config defaults") {
    const RunConfig c = parse_config("{}");
    CHECK(c.geometry.name == "flat_strip");
    CHECK(c.material.lambda == 2.0);
    CHECK(c.material.mu == 1.0);
    CHECK(c.material.rho == 1.0);
    CHECK(c.omega == std::vector<double>{10.0});
    CHECK(c.incident.angle == doctest::Approx(kPi / 4));
    CHECK(c.tol == 1e-8);
    CHECK(c.data_sign() == -1.0);
    CHECK_FALSE(c.field.has_value());
  }

  TEST_CASE("config lists and names") {
    const RunConfig c = parse_config(R"({"omega": [10, 50], "N": [100, 200], "formulation": "all",
      "incident": {"kind": "point", "z0": [0.1, 0.2]}, "field": {"x": [-1, 1, 3], "y": [2, 3, 2]},
      "geometry": {"name": "circle", "param": 2.0}})");
    CHECK(c.omega.size() == 2);
    CHECK(c.n == std::vector<std::size_t>{100, 200});
    CHECK(c.formulations.size() == 5);
    CHECK(c.data_sign() == 1.0);
    REQUIRE(c.field.has_value());
    CHECK(field_grid_points(*c.field).size() == 6);
    CHECK(c.curve().closed());
    CHECK(c.curve().eval(0.0).x.isApprox(Vec2(2.0, 0.0)));
  }

  TEST_CASE("config errors name the field") {
    auto field_of = [](const std::string& text) -> std::string {
      try {
        parse_config(text);
      } catch (const ConfigError& e) {
        return e.field();
      }
      return "";
    };
    CHECK(field_of(R"({"material": {"mu": -1}})") == "material.mu");
    CHECK(field_of(R"({"material": {"lambda": -3}})") == "material.lambda");
    CHECK(field_of(R"({"material": {"rho": 0}})") == "material.rho");
    CHECK(field_of(R"({"omega": [10, -1]})") == "omega[1]");
    CHECK(field_of(R"({"N": 3})") == "N[0]");
    CHECK(field_of(R"({"gmres": {"tol": 2}})") == "gmres.tol");
    CHECK(field_of(R"({"geometry": {"name": "square"}})") == "geometry.name");
    CHECK(field_of(R"({"incident": {"kind": "spherical"}})") == "incident.kind");
    CHECK(field_of(R"({"formulation": "Robin"})").rfind("formulation", 0) == 0);
    CHECK(field_of("{not json") == "config");
    try {
      parse_config(R"({"material": {"mu": -1}})");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("mu > 0") != std::string::npos);
    }
  }

  TEST_CASE("writer headers") {
    const Grid grid = discretize(preset_geometry(Preset::flat_strip), 4);
    std::ostringstream d, f, c, it, sp, sl;
    write_density_csv(d, grid, Eigen::VectorXcd::Ones(8));
    CHECK(first_line(d.str()) == "j,theta,t,x1,x2,re_a1,im_a1,re_a2,im_a2");
    CHECK(line_count(d.str()) == 5);
    write_field_csv(f, {Vec2(0, 1)}, {Vec2C(1.0, 2.0)});
    CHECK(first_line(f.str()) == "x1,x2,re_u1,im_u1,re_u2,im_u2");
    write_convergence_csv(c, {});
    CHECK(first_line(c.str()) == "omega,N,formulation,error");
    write_iterations_csv(it, {});
    CHECK(first_line(it.str()) == "omega,N,formulation,iterations,seconds");
    SpectrumResult s;
    s.values = Eigen::VectorXcd::Ones(2);
    write_spectrum_csv(sp, s);
    CHECK(first_line(sp.str()) == "index,re,im");
    StripLimitResult r;
    write_strip_limit_csv(sl, r);
    CHECK(first_line(sl.str()) == "a,angle,|up|,|us|");
  }

  TEST_CASE("cluster share and far-field gap") {
    Eigen::VectorXcd v(4);
    v << cplx(-0.24, 0.0), cplx(-0.25, 0.01), cplx(1.0, 0.0), cplx(-0.3, 0.0);
    CHECK(cluster_share(v, cplx(-0.24, 0.0), 0.05) == doctest::Approx(0.5));
    FarField a, b;
    a.up = {1.0, cplx(0.0, 2.0)};
    a.us = {0.0, 0.0};
    b.up = {1.0, cplx(0.0, -2.0)};
    b.us = {0.0, 0.5};
    CHECK(far_field_gap(a, b, true) == doctest::Approx(0.25));
    CHECK(far_field_gap(a, b, false) == doctest::Approx(2.0));
  }

  TEST_CASE("solve writes its files") {
    const fs::path dir = fresh_dir("solve");
    nlohmann::json cfg = strip_config();
    cfg["field"] = {{"x", {-2.0, 2.0, 3}}, {"y", {1.0, 2.0, 2}}};
    REQUIRE(run_cli("solve", cfg, dir) == 0);
    const std::string density = slurp(dir / "density.csv");
    CHECK(first_line(density) == "j,theta,t,x1,x2,re_a1,im_a1,re_a2,im_a2");
    CHECK(line_count(density) == 161);
    const std::string field = slurp(dir / "field.csv");
    CHECK(first_line(field) == "x1,x2,re_u1,im_u1,re_u2,im_u2");
    CHECK(line_count(field) == 7);
    const nlohmann::json report = nlohmann::json::parse(slurp(dir / "report.json"));
    std::vector<std::string> keys;
    for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
    for (const char* k : {"formulation", "omega", "N", "iterations", "converged", "final_residual", "wall_seconds"})
      CHECK(report.contains(k));
    CHECK(report["converged"] == true);
    const int iters = report["iterations"];
    CHECK(iters >= 15);
    CHECK(iters <= 27);

    // Same config, byte-identical solution.
    const fs::path again = fresh_dir("solve2");
    REQUIRE(run_cli("solve", cfg, again) == 0);
    CHECK(slurp(again / "density.csv") == density);
    CHECK(slurp(again / "field.csv") == field);
    fs::remove_all(dir);
    fs::remove_all(again);
  }

  TEST_CASE("exit codes") {
    const fs::path dir = fresh_dir("codes");
    nlohmann::json bad = strip_config();
    bad["material"]["mu"] = -1.0;
    CHECK(run_cli("solve", bad, dir) == 3);
    CHECK(slurp(dir / "stderr.txt").find("material.mu") != std::string::npos);

    nlohmann::json capped = strip_config();
    capped["gmres"] = {{"tol", 1e-10}, {"maxit", 3}};
    CHECK(run_cli("solve", capped, dir) == 2);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(nlohmann::json::parse(slurp(dir / "report.json"))["converged"] == false);

    nlohmann::json wrong_kind = strip_config();
    wrong_kind["geometry"] = {{"name", "circle"}};
    wrong_kind["N"] = 16;
    wrong_kind["spectrum"] = {{"operator", "NwSw"}};
    CHECK(run_cli("spectrum", wrong_kind, dir) == 3);
    fs::remove_all(dir);
  }

  TEST_CASE("table subcommands") {
    const fs::path dir = fresh_dir("tables");
    nlohmann::json conv = {{"geometry", {{"name", "circle"}}},
                           {"incident", {{"kind", "point"}, {"z0", {0.0, 0.5}}}},
                           {"omega", 10.0},
                           {"N", 30},
                           {"formulation", "DirSw"}};
    REQUIRE(run_cli("convergence-table", conv, dir) == 0);
    const std::string c = slurp(dir / "convergence.csv");
    CHECK(first_line(c) == "omega,N,formulation,error");
    CHECK(line_count(c) == 2);

    nlohmann::json it = strip_config();
    it["omega"] = {10.0, 20.0};
    it["N"] = {160, 320};
    it["formulation"] = {"DirSw", "NeuNwSw"};
    REQUIRE(run_cli("iterations-table", it, dir) == 0);
    std::istringstream rows(slurp(dir / "iterations.csv"));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "omega,N,formulation,iterations,seconds");
    int count = 0;
    while (std::getline(rows, line)) {
      ++count;
      CHECK(std::stod(line.substr(line.rfind(',') + 1)) > 0.0);
    }
    CHECK(count == 4);

    nlohmann::json id = {{"geometry", {{"name", "spiral"}}}, {"N", 8}, {"spectrum", {{"operator", "identity"}}}};
    REQUIRE(run_cli("spectrum", id, dir) == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "spectrum.json"))["eigenvalues"] == 16);
    std::istringstream eig(slurp(dir / "spectrum.csv"));
    std::getline(eig, line);
    int values = 0;
    while (std::getline(eig, line)) {
      ++values;
      double re = 0.0, im = 0.0;
      char comma = 0;
      int index = 0;
      std::istringstream(line) >> index >> comma >> re >> comma >> im;
      CHECK(re == doctest::Approx(1.0));
      CHECK(im == doctest::Approx(0.0));
    }
    CHECK(values == 16);

    nlohmann::json sl = {{"omega", 5.0},
                         {"strip_limit", {{"a", {0.05}}, {"n_ellipse", 64}, {"n_strip", 48}, {"directions", 1}}}};
    REQUIRE(run_cli("strip-limit", sl, dir) == 0);
    const std::string s = slurp(dir / "strip_limit.csv");
    CHECK(first_line(s) == "a,angle,|up|,|us|");
    CHECK(line_count(s) == 3);
    fs::remove_all(dir);
  }
}
