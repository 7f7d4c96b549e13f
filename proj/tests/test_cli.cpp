#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + "'" LMG_CLI_PATH "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("spectrum at gamma = 0 lists 0, 1, 1, 4, 4") {
  const auto r = run("spectrum --j 2 --gamma 0");
  CHECK(r.status == 0);
  const auto t = csv(r.out);
  REQUIRE(t.size() == 6);
  CHECK(t[0] == std::vector<std::string>{"j", "gamma", "level_index", "eigenvalue", "pair_id",
                                         "is_zero_mode"});
  const double ref[] = {0, 1, 1, 4, 4};
  for (int k = 0; k < 5; ++k) {
    CHECK(std::stod(t[k + 1][3]) == doctest::Approx(ref[k]).epsilon(1e-12));
    CHECK(t[k + 1][0] == "2");
  }
  CHECK(t[1][5] == "true");
  CHECK(t[2][4] == "1");
  CHECK(t[5][4] == "2");
}

TEST_CASE("spectrum over a closed grid") {
  const auto r = run("spectrum --j 2 --gamma-min -1 --gamma-max 1 --steps 101 --format csv");
  CHECK(r.status == 0);
  const auto t = csv(r.out);
  CHECK(t.size() == 506);
  CHECK(t[1][1] == "-1");
  CHECK(t.back()[1] == "1");
  // Spectrum is even in gamma: first and last grid points agree.
  for (int k = 0; k < 5; ++k)
    CHECK(std::stod(t[1 + k][3]) == doctest::Approx(std::stod(t[501 + k][3])).epsilon(1e-10));
}

TEST_CASE("general model") {
  const auto r =
      run("spectrum --j 2 --gamma 0.5 --model general --xi 1 --chi1 2 --chi2 1 --lambda 0.7");
  CHECK(r.status == 0);
  const auto t = csv(r.out);
  REQUIRE(t.size() == 6);
  CHECK(t[0].size() == 4);
  CHECK(std::stod(t[1][1]) == doctest::Approx(0.5493061443340548).epsilon(1e-14));
  CHECK(run("spectrum --j 2 --model general --xi 1 --chi1 2").status == 2);
  CHECK(run("spectrum --j 2 --model general --xi 1 --chi1 1 --chi2 1 --lambda 1").status == 2);
}

TEST_CASE("gap-scan") {
  SUBCASE("isotropic point") {
    const auto r = run("gap-scan --j-list 2 --gamma 0");
    CHECK(r.status == 0);
    const auto t = csv(r.out);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::vector<std::string>{"j", "gamma", "gap", "bound", "satisfied"});
    CHECK(std::stod(t[1][2]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t[1][3] == "1");
    CHECK(t[1][4] == "true");
  }
  SUBCASE("bound holds on the default range") {
    const auto r = run("gap-scan --j-list 5,10,15,25,30 --gamma-min 0 --gamma-max 3 --steps 150");
    CHECK(r.status == 0);
    const auto t = csv(r.out);
    CHECK(t.size() == 751);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i][4] == "true");
  }
  SUBCASE("large J") {
    const auto r = run("gap-scan --j-list 100000 --gamma 0.5");
    CHECK(r.status == 0);
    const auto t = csv(r.out);
    REQUIRE(t.size() == 2);
    CHECK(t[1][0] == "100000");
    CHECK(t[1][4] == "true");
  }
  SUBCASE("half-integer rows are marked") {
    const auto r = run("gap-scan --j-list 1.5,2 --gamma 0.1");
    CHECK(r.status == 0);
    const auto t = csv(r.out);
    REQUIRE(t.size() == 3);
    CHECK(t[1][4] == "error:NotIntegerSpin");
    CHECK(t[2][4] == "true");
    CHECK(run("gap-scan --j-list 1.5 --gamma 0.1").status == 1);
  }
  SUBCASE("methods agree") {
    const auto a = csv(run("gap-scan --j-list 12 --gamma 0.8 --method supercharge").out);
    const auto b = csv(run("gap-scan --j-list 12 --gamma 0.8 --method dense").out);
    CHECK(std::stod(a[1][2]) == doctest::Approx(std::stod(b[1][2])).epsilon(1e-11));
  }
}

TEST_CASE("susy-check exit codes") {
  const auto a = run("susy-check --j 2 --gamma 0.7");
  CHECK(a.status == 0);
  const auto t = csv(a.out);
  REQUIRE(t.size() == 2);
  CHECK(t[1][12] == "SusyPattern");
  CHECK(t[1].back() == "true");

  CHECK(run("susy-check --j 3 --gamma 0").status == 0);

  const auto h = run("susy-check --j 1.5 --gamma 0.5");
  CHECK(h.status == 0);
  const auto th = csv(h.out);
  CHECK(th[1][2] == "false");
  CHECK(th[1][12] == "SusyBroken");

  const auto j = nlohmann::json::parse(run("susy-check --j 2,3 --gamma 0.2,1 --format json").out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["summary"]["all_passed"] == true);
}

TEST_CASE("ground-state") {
  SUBCASE("gamma = 0") {
    const auto r = run("ground-state --j 2 --gamma 0");
    CHECK(r.status == 0);
    CHECK(r.out == "m,amplitude\n-2,0\n-1,0\n0,1\n1,0\n2,0\n");
  }
  SUBCASE("J = 10 row count") {
    const auto r = run("ground-state --j 10 --gamma 1");
    CHECK(r.status == 0);
    CHECK(csv(r.out).size() == 22);
  }
  SUBCASE("json fields") {
    const auto r = run("ground-state --j 4 --gamma 0.5 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("config"));
    CHECK(j["rows"].size() == 9);
    CHECK(j["rows"][0]["m"] == -4);
    const auto& s = j["summary"];
    CHECK(s["norm_direct"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s["energy_residual"].get<double>() <= 1e-9 * s["h_norm"].get<double>());
    CHECK(s.contains("norm_legendre"));
  }
  SUBCASE("rotated frame") {
    CHECK(run("ground-state --j 5 --gamma 0.3 --frame rotated").status == 0);
  }
  SUBCASE("config errors") {
    CHECK(run("ground-state --j 1.5 --gamma 0.5").status == 2);
    CHECK(run("ground-state --j 2,3 --gamma 0.5").status == 2);
  }
}

TEST_CASE("bench") {
  const auto r = run("bench --j-list 10 --gamma 0");
  CHECK(r.status == 0);
  const auto t = csv(r.out);
  REQUIRE(t.size() == 2);
  CHECK(std::stod(t[1][2]) == doctest::Approx(1.0).epsilon(1e-12));
  const auto a = csv(run("bench --j-list 1000 --gamma 2 --threads 4").out);
  const auto b = csv(run("bench --j-list 1000 --gamma 2 --threads 1").out);
  CHECK(a[1][2] == b[1][2]);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("gap-scan").status == 2);
  CHECK(run("gap-scan --j 2 --gamma 0.1 --steps 3").status == 2);
  CHECK(run("gap-scan --j 2 --gamma-min 1 --gamma-max 0 --steps 3").status == 2);
  CHECK(run("gap-scan --j 0.3").status == 2);
  CHECK(run("gap-scan --j 2 --format xml").status == 2);
  CHECK(run("gap-scan --j 2 --threads 0").status == 2);
  CHECK(run("gap-scan --j 2", "LMG_THREADS=abc ").status == 2);
  CHECK(run("gap-scan --j 2 --format json --emit-plot x.gp").status == 2);
}

TEST_CASE("thread count never changes output") {
  const std::string args = "spectrum --j-list 2,3,4.5 --gamma-min -1 --gamma-max 1 --steps 7";
  const auto a = run(args + " --threads 1");
  const auto b = run(args + " --threads 3");
  const auto c = run(args, "LMG_THREADS=2 ");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto ja = run(args + " --format json --threads 1");
  const auto jb = run(args + " --format json --threads 5");
  CHECK(ja.out == jb.out);
}

TEST_CASE("plot script and output file") {
  const std::string csv_path = "cli_test_gap.csv", gp_path = "cli_test_gap.gp";
  const auto r = run("gap-scan --j-list 5,10 --gamma-min 0 --gamma-max 1 --steps 5 --out " +
                     csv_path + " --emit-plot " + gp_path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream gp(gp_path), data(csv_path);
  std::stringstream gs, ds;
  gs << gp.rdbuf();
  ds << data.rdbuf();
  CHECK(gs.str().find("cosh(2*x)") != std::string::npos);
  CHECK(gs.str().find(csv_path) != std::string::npos);
  CHECK(csv(ds.str()).size() == 11);
  std::remove(csv_path.c_str());
  std::remove(gp_path.c_str());
}
