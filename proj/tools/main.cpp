// Command-line front end for the LMG spectral library. Talks to the library
// only through the C interface in lmg/lmg.h.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lmg/lmg.h"
#include "pool.hpp"
#include "table.hpp"

namespace {

using lmgcli::Field;
using lmgcli::Row;
using lmgcli::Table;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> j_values;
  std::vector<std::string> j_list;
  std::vector<double> gammas;
  std::optional<double> gamma_min, gamma_max;
  int steps = 0;
  std::string model = "susy";
  std::optional<double> xi, chi1, chi2, lambda;
  std::string method = "supercharge";
  std::string frame = "factorized";
  std::string format = "csv";
  std::string out;
  std::string emit_plot;
  double tol = 1e-8;
  int threads = 0;
};

// Cells of a (J, gamma) scan, J-major.
struct Cell {
  int two_j;
  double gamma;
};

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

int parse_two_j(const std::string& text) {
  double v = 0.0;
  try {
    std::size_t pos = 0;
    v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("not a spin value: " + text);
  }
  const double twice = 2.0 * v;
  if (!(v >= 0.0) || std::abs(twice - std::round(twice)) > 1e-9 || twice > 2e9)
    throw UsageError("J must be a non-negative integer or half-integer: " + text);
  return static_cast<int>(std::lround(twice));
}

std::vector<int> spins(const Options& o) {
  std::vector<int> out;
  for (const auto& s : split_commas(o.j_values)) out.push_back(parse_two_j(s));
  for (const auto& s : split_commas(o.j_list)) out.push_back(parse_two_j(s));
  if (out.empty()) throw UsageError("no spin given (use --j or --j-list)");
  return out;
}

// Closed grid with `steps` points including both ends, or an explicit list.
std::vector<double> gamma_grid(const Options& o, double def_min, double def_max, int def_steps) {
  if (!o.gammas.empty()) {
    if (o.gamma_min || o.gamma_max || o.steps)
      throw UsageError("--gamma cannot be combined with --gamma-min/--gamma-max/--steps");
    return o.gammas;
  }
  const double lo = o.gamma_min.value_or(def_min);
  const double hi = o.gamma_max.value_or(def_max);
  const int n = o.steps ? o.steps : (o.gamma_min || o.gamma_max ? 50 : def_steps);
  if (n < 1) throw UsageError("--steps must be at least 1");
  if (n == 1) {
    if (lo != hi) throw UsageError("--steps 1 needs --gamma-min equal to --gamma-max");
    return {lo};
  }
  if (!(hi > lo)) throw UsageError("--gamma-max must exceed --gamma-min");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[k] = k + 1 == n ? hi : lo + (hi - lo) * k / (n - 1);
  return g;
}

std::vector<Cell> cells(const std::vector<int>& js, const std::vector<double>& gs) {
  std::vector<Cell> out;
  for (int j : js)
    for (double g : gs) out.push_back({j, g});
  return out;
}

unsigned thread_count(const Options& o) {
  if (o.threads > 0) return static_cast<unsigned>(o.threads);
  if (const char* env = std::getenv("LMG_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LMG_THREADS must be a positive integer, got '") + env + "'");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

double j_value(int two_j) { return 0.5 * two_j; }

// Integer spins print as integers; half-integers keep their ".5".
Field j_field(int two_j) {
  if (two_j % 2 == 0) return static_cast<std::int64_t>(two_j / 2);
  return j_value(two_j);
}

std::string status_text(lmg_status st) {
  std::string msg = lmg_status_string(st);
  const std::string detail = lmg_last_error();
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

// Output of one command before it is rendered.
struct Result {
  Table table;
  json summary = json::object();
  int exit_code = kExitOk;
};

json config_json(const std::string& command, const Options& o, const std::vector<int>& js,
                 const std::vector<double>& gs) {
  json c = json::object();
  c["command"] = command;
  json jl = json::array();
  for (int j : js) jl.push_back(lmgcli::json_cell(j_field(j)));
  c["j_list"] = jl;
  c["gammas"] = gs;
  if (command == "spectrum") c["model"] = o.model;
  if (command == "spectrum" && o.model == "general") {
    c["xi"] = *o.xi;
    c["chi1"] = *o.chi1;
    c["chi2"] = *o.chi2;
    c["lambda"] = *o.lambda;
  }
  if (command == "gap-scan" || command == "bench") c["method"] = o.method;
  if (command == "ground-state") c["frame"] = o.frame;
  if (command == "spectrum" || command == "susy-check") c["tol"] = o.tol;
  return c;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumCell {
  std::vector<Row> rows;
  std::string error;
  std::optional<bool> pattern;
};

Result cmd_spectrum(const Options& o, json& config) {
  Result r;
  const auto js = spins(o);
  const bool general = o.model == "general";
  std::vector<double> gs;
  if (general) {
    if (!o.xi || !o.chi1 || !o.chi2 || !o.lambda)
      throw UsageError("--model general needs --xi, --chi1, --chi2 and --lambda");
    double omega0 = 0, gamma = 0;
    const lmg_status st = lmg_params_from_chi(*o.chi1, *o.chi2, &omega0, &gamma);
    if (st != LMG_OK) throw UsageError(status_text(st));
    gs = {gamma};
    r.summary["omega0"] = omega0;
    r.summary["derived_gamma"] = gamma;
  } else {
    gs = gamma_grid(o, 0.0, 0.0, 1);
  }
  config = config_json("spectrum", o, js, gs);
  const auto grid = cells(js, gs);

  auto results = lmgcli::parallel_map<SpectrumCell>(grid.size(), thread_count(o), [&](std::size_t i) {
    SpectrumCell out;
    const Cell c = grid[i];
    lmg_spectrum* s = nullptr;
    const lmg_status st =
        general ? lmg_spectrum_general(c.two_j, *o.xi, *o.chi1, *o.chi2, *o.lambda, &s)
                : lmg_spectrum_susy(c.two_j, c.gamma, o.tol, &s);
    if (st != LMG_OK) {
      out.error = status_text(st);
      return out;
    }
    const std::size_t n = lmg_spectrum_size(s);
    std::vector<double> eig(n);
    std::vector<int> ids(n);
    lmg_spectrum_eigenvalues(s, eig.data(), n);
    lmg_spectrum_pair_ids(s, ids.data(), n);
    if (!general) {
      lmg_verdict v;
      lmg_spectrum_verdict(s, &v);
      out.pattern = v == LMG_SUSY_PATTERN;
    }
    lmg_spectrum_free(s);
    for (std::size_t k = 0; k < n; ++k) {
      Row row{j_field(c.two_j), c.gamma, static_cast<std::int64_t>(k), eig[k]};
      if (!general) {
        row.emplace_back(static_cast<std::int64_t>(ids[k]));
        row.emplace_back(ids[k] == 0);
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  });

  r.table.header = {"j", "gamma", "level_index", "eigenvalue"};
  if (!general) {
    r.table.header.push_back("pair_id");
    r.table.header.push_back("is_zero_mode");
  }
  std::size_t errors = 0, pattern = 0, broken = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& cell = results[i];
    if (!cell.error.empty()) {
      ++errors;
      std::cerr << "spectrum: J=" << j_value(grid[i].two_j) << " gamma=" << grid[i].gamma << ": "
                << cell.error << '\n';
      continue;
    }
    if (cell.pattern) ++(*cell.pattern ? pattern : broken);
    for (auto& row : cell.rows) r.table.rows.push_back(std::move(row));
  }
  r.summary["cells"] = grid.size();
  r.summary["errors"] = errors;
  if (!general) {
    r.summary["susy_pattern_cells"] = pattern;
    r.summary["susy_broken_cells"] = broken;
  }
  if (errors == grid.size()) r.exit_code = kExitVerification;
  return r;
}

// ---------------------------------------------------------------- gap-scan

lmg_gap_method parse_method(const std::string& m) {
  if (m == "supercharge") return LMG_GAP_SUPERCHARGE;
  if (m == "tridiag") return LMG_GAP_TRIDIAG_ODD;
  if (m == "dense") return LMG_GAP_DENSE;
  throw UsageError("unknown method: " + m);
}

struct GapCell {
  lmg_status status = LMG_OK;
  std::string error;
  lmg_gap_result res{};
  double seconds = 0.0;
};

GapCell run_gap(const Cell& c, lmg_gap_method method) {
  GapCell g;
  const auto t0 = std::chrono::steady_clock::now();
  g.status = lmg_spectral_gap(c.two_j, c.gamma, method, &g.res);
  g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (g.status != LMG_OK) g.error = status_text(g.status);
  return g;
}

Result cmd_gap_scan(const Options& o, json& config) {
  Result r;
  const auto js = spins(o);
  const auto gs = gamma_grid(o, 0.0, 3.0, 50);
  const auto method = parse_method(o.method);
  config = config_json("gap-scan", o, js, gs);
  const auto grid = cells(js, gs);
  const auto results = lmgcli::parallel_map<GapCell>(
      grid.size(), thread_count(o), [&](std::size_t i) { return run_gap(grid[i], method); });

  r.table.header = {"j", "gamma", "gap", "bound", "satisfied"};
  std::size_t failed = 0, violated = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = results[i];
    Row row{j_field(grid[i].two_j), grid[i].gamma};
    if (g.status != LMG_OK) {
      ++failed;
      row.insert(row.end(), {Field{}, Field{}, Field{std::string("error:") + lmg_status_string(g.status)}});
      std::cerr << "gap-scan: J=" << j_value(grid[i].two_j) << " gamma=" << grid[i].gamma << ": "
                << g.error << '\n';
    } else {
      if (!g.res.satisfied) ++violated;
      row.insert(row.end(), {g.res.gap, g.res.bound, g.res.satisfied != 0});
    }
    r.table.rows.push_back(std::move(row));
  }
  r.summary["rows"] = grid.size();
  r.summary["errors"] = failed;
  r.summary["bound_violations"] = violated;
  r.summary["all_satisfied"] = failed == 0 && violated == 0;
  if (violated > 0 || failed == grid.size()) r.exit_code = kExitVerification;
  return r;
}

// ---------------------------------------------------------------- susy-check

Result cmd_susy_check(const Options& o, json& config) {
  Result r;
  const auto js = spins(o);
  const auto gs = gamma_grid(o, 0.0, 0.0, 1);
  config = config_json("susy-check", o, js, gs);
  const auto grid = cells(js, gs);

  struct Out {
    lmg_status status = LMG_OK;
    std::string error;
    lmg_susy_report rep{};
  };
  const auto results = lmgcli::parallel_map<Out>(grid.size(), thread_count(o), [&](std::size_t i) {
    Out out;
    out.status = lmg_susy_check(grid[i].two_j, grid[i].gamma, o.tol, &out.rep);
    if (out.status != LMG_OK) out.error = status_text(out.status);
    return out;
  });

  r.table.header = {"j", "gamma", "integer_spin", "q1_squared", "q2_squared", "anticommutator",
                    "commutator", "h_norm", "algebra_pass", "charpoly_residual", "charpoly_pass",
                    "permutation_equivalent", "verdict", "has_zero_mode", "all_levels_paired",
                    "min_eigenvalue", "passed"};
  std::string first_failure;
  std::size_t broken = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& c = grid[i];
    const auto& out = results[i];
    const std::string where =
        "J=" + lmgcli::csv_cell(j_field(c.two_j)) + " gamma=" + lmgcli::format_double(c.gamma);
    if (out.status != LMG_OK) {
      std::cerr << "susy-check: " << where << ": " << out.error << '\n';
      if (first_failure.empty()) first_failure = "error (" + where + ")";
      Row row{j_field(c.two_j), c.gamma};
      row.resize(r.table.header.size());
      row.back() = std::string("error:") + lmg_status_string(out.status);
      r.table.rows.push_back(std::move(row));
      continue;
    }
    const auto& rep = out.rep;
    const bool pattern = rep.verdict == LMG_SUSY_PATTERN;
    std::string failed;
    if (rep.integer_spin) {
      if (!rep.algebra_pass) failed = "superalgebra";
      else if (rep.charpoly_checked && !rep.charpoly_pass) failed = "determinant-factorization";
      else if (rep.permutation_checked && !rep.permutation_equivalent) failed = "permutation-equivalence";
      else if (!pattern) failed = "spectrum-pattern";
    } else {
      ++broken;
      // Broken supersymmetry is the expected outcome for half-integer J.
      if (pattern || rep.has_zero_mode) failed = "half-integer-zero-mode";
    }
    if (!failed.empty() && first_failure.empty()) first_failure = failed + " (" + where + ")";

    auto opt = [](bool present, Field f) { return present ? f : Field{}; };
    r.table.rows.push_back(Row{
        j_field(c.two_j), c.gamma, rep.integer_spin != 0,
        opt(rep.algebra_checked, rep.q1_squared), opt(rep.algebra_checked, rep.q2_squared),
        opt(rep.algebra_checked, rep.anticommutator), opt(rep.algebra_checked, rep.commutator),
        opt(rep.algebra_checked, rep.h_norm), opt(rep.algebra_checked, rep.algebra_pass != 0),
        opt(rep.charpoly_checked, rep.charpoly_residual),
        opt(rep.charpoly_checked, rep.charpoly_pass != 0),
        opt(rep.permutation_checked, rep.permutation_equivalent != 0),
        std::string(pattern ? "SusyPattern" : "SusyBroken"), rep.has_zero_mode != 0,
        rep.all_levels_paired != 0, rep.min_eigenvalue, failed.empty()});
  }
  r.summary["cells"] = grid.size();
  r.summary["susy_broken_cells"] = broken;
  r.summary["all_passed"] = first_failure.empty();
  if (!first_failure.empty()) {
    r.summary["first_failure"] = first_failure;
    std::cerr << "susy-check: failed check: " << first_failure << '\n';
    r.exit_code = kExitVerification;
  }
  return r;
}

// ---------------------------------------------------------------- ground-state

Result cmd_ground_state(const Options& o, json& config) {
  Result r;
  const auto js = spins(o);
  const auto gs = gamma_grid(o, 0.0, 0.0, 1);
  if (js.size() != 1 || gs.size() != 1)
    throw UsageError("ground-state takes exactly one J and one gamma");
  lmg_frame frame;
  if (o.frame == "factorized") frame = LMG_FRAME_FACTORIZED;
  else if (o.frame == "rotated") frame = LMG_FRAME_ROTATED;
  else throw UsageError("unknown frame: " + o.frame);
  config = config_json("ground-state", o, js, gs);

  lmg_ground_state* state = nullptr;
  const lmg_status st = lmg_ground_state_new(js[0], gs[0], frame, &state);
  if (st != LMG_OK) throw UsageError(status_text(st));
  const std::size_t n = lmg_ground_state_size(state);
  std::vector<double> amp(n);
  lmg_ground_state_amplitudes(state, amp.data(), n);
  lmg_ground_state_summary sum{};
  lmg_ground_state_summary_get(state, &sum);
  lmg_ground_state_free(state);

  r.table.header = {"m", "amplitude"};
  for (std::size_t i = 0; i < n; ++i)
    r.table.rows.push_back(Row{j_field(2 * static_cast<int>(i) - js[0]), amp[i]});

  const bool residual_ok = sum.energy_residual <= 1e-9 * sum.h_norm;
  const bool norm_ok = std::abs(sum.norm_direct - 1.0) <= 1e-10;
  r.summary["norm_direct"] = lmgcli::json_cell(sum.norm_direct);
  r.summary["norm_legendre"] = lmgcli::json_cell(sum.norm_legendre);
  r.summary["log_norm_legendre"] = lmgcli::json_cell(sum.log_norm_legendre);
  r.summary["energy_residual"] = lmgcli::json_cell(sum.energy_residual);
  r.summary["h_norm"] = lmgcli::json_cell(sum.h_norm);
  r.summary["residual_ok"] = residual_ok;
  r.summary["norm_ok"] = norm_ok;
  if (!residual_ok || !norm_ok) r.exit_code = kExitVerification;
  return r;
}

// ---------------------------------------------------------------- bench

Result cmd_bench(const Options& o, json& config) {
  Result r;
  const auto js = spins(o);
  const auto gs = gamma_grid(o, 0.5, 0.5, 1);
  const auto method = parse_method(o.method);
  config = config_json("bench", o, js, gs);
  const auto grid = cells(js, gs);
  const auto results = lmgcli::parallel_map<GapCell>(
      grid.size(), thread_count(o), [&](std::size_t i) { return run_gap(grid[i], method); });

  r.table.header = {"j", "gamma", "gap", "bound", "satisfied", "seconds", "workspace_bytes"};
  // Per-J cost over the rows large enough for the loop to dominate.
  double lo = INFINITY, hi = 0.0;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = results[i];
    const auto bytes = static_cast<std::int64_t>(lmg_gap_workspace_bytes(grid[i].two_j, method));
    if (g.status != LMG_OK) {
      ++failed;
      std::cerr << "bench: J=" << j_value(grid[i].two_j) << ": " << g.error << '\n';
      r.table.rows.push_back(Row{j_field(grid[i].two_j), grid[i].gamma, Field{}, Field{},
                                 std::string("error:") + lmg_status_string(g.status), g.seconds,
                                 bytes});
      continue;
    }
    if (grid[i].two_j >= 200000) {
      const double per = g.seconds / j_value(grid[i].two_j);
      lo = std::min(lo, per);
      hi = std::max(hi, per);
    }
    r.table.rows.push_back(Row{j_field(grid[i].two_j), grid[i].gamma, g.res.gap, g.res.bound,
                               g.res.satisfied != 0, g.seconds, bytes});
  }
  r.summary["rows"] = grid.size();
  r.summary["errors"] = failed;
  if (hi > 0.0 && lo < INFINITY && lo > 0.0) {
    r.summary["per_j_cost_ratio"] = hi / lo;
    r.summary["linear_within_3x"] = hi / lo <= 3.0;
    if (hi / lo > 3.0) r.exit_code = kExitVerification;
  } else {
    r.summary["linear_within_3x"] = nullptr;
  }
  if (failed) r.exit_code = kExitVerification;
  return r;
}

// ---------------------------------------------------------------- output

std::string plot_script(const std::string& command, const std::string& data,
                        const std::vector<std::string>& js) {
  std::ostringstream s;
  s << "# gnuplot script; data: " << data << "\n"
    << "set datafile separator ','\n"
    << "set key outside right\n"
    << "file = '" << data << "'\n";
  if (command == "spectrum") {
    s << "set xlabel 'gamma'\nset ylabel 'E'\n"
      << "stats file using 3 nooutput\n"
      << "plot for [k=0:int(STATS_max)] file using 2:($3==k ? $4 : 1/0) "
         "every ::1 with linespoints pt 7 ps 0.3 notitle\n";
  } else if (command == "gap-scan") {
    s << "set xlabel 'gamma'\nset ylabel 'gap'\n"
      << "js = '";
    for (std::size_t i = 0; i < js.size(); ++i) s << (i ? " " : "") << js[i];
    s << "'\n"
      << "plot for [J in js] file using 2:(strcol(1) eq J ? $3 : 1/0) every ::1 "
         "with lines title sprintf('J = %s', J), \\\n"
      << "     cosh(2*x) with lines lw 2 lc rgb 'green' title 'cosh 2{/Symbol g}'\n";
  } else if (command == "ground-state") {
    s << "set xlabel 'm'\nset ylabel 'amplitude'\n"
      << "plot file using 1:2 every ::1 with impulses lw 3 notitle\n";
  }
  return s.str();
}

int emit(const std::string& command, const Options& o, const Result& r, const json& config) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << o.out << " for writing\n";
      return kExitUsage;
    }
    os = &file;
  }
  if (o.format == "csv") {
    lmgcli::write_csv(*os, r.table);
    if (command == "ground-state" || command == "bench" || command == "susy-check")
      std::cerr << "summary: " << r.summary.dump() << '\n';
  } else {
    json doc = json::object();
    doc["config"] = config;
    doc["rows"] = lmgcli::rows_json(r.table);
    doc["summary"] = r.summary;
    *os << doc.dump(2) << '\n';
  }
  os->flush();
  if (!*os) {
    std::cerr << "write failed\n";
    return kExitUsage;
  }
  if (!o.emit_plot.empty()) {
    std::vector<std::string> js;
    for (const auto& v : config["j_list"]) js.push_back(v.dump());
    std::ofstream p(o.emit_plot);
    p << plot_script(command, o.out.empty() ? "lmg.csv" : o.out, js);
    if (!p) {
      std::cerr << "cannot write plot script " << o.emit_plot << '\n';
      return kExitUsage;
    }
  }
  return r.exit_code;
}

void add_common(CLI::App* sub, Options& o, bool with_model) {
  sub->add_option("--j", o.j_values, "Total spin J (integer or half-integer), comma separated")
      ->delimiter(',');
  sub->add_option("--j-list", o.j_list, "Comma-separated list of J values")->delimiter(',');
  sub->add_option("--gamma", o.gammas, "Anisotropy value(s), comma separated")->delimiter(',');
  sub->add_option("--gamma-min", o.gamma_min, "Lower end of a closed gamma grid");
  sub->add_option("--gamma-max", o.gamma_max, "Upper end of a closed gamma grid");
  sub->add_option("--steps", o.steps, "Grid points, endpoints included");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "Output file (default: standard output)");
  sub->add_option("--threads", o.threads, "Worker threads (default: LMG_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  if (with_model) {
    sub->add_option("--model", o.model, "Hamiltonian")->check(CLI::IsMember({"susy", "general"}));
    sub->add_option("--xi", o.xi, "General model: overall scale");
    sub->add_option("--chi1", o.chi1, "General model: chi1 > 0");
    sub->add_option("--chi2", o.chi2, "General model: 0 <= chi2 < chi1");
    sub->add_option("--lambda", o.lambda, "General model: Jx coupling");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of the antiferromagnetic LMG model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lmg_version()));
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Energy levels over a (J, gamma) grid");
  add_common(spectrum, o, true);
  spectrum->add_option("--tol", o.tol, "Pairing tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--emit-plot", o.emit_plot, "Write a gnuplot script for the CSV");

  auto* gap = app.add_subcommand("gap-scan", "First excited level against the cosh(2 gamma) bound");
  add_common(gap, o, false);
  gap->add_option("--method", o.method, "Solver")
      ->check(CLI::IsMember({"supercharge", "tridiag", "dense"}));
  gap->add_option("--emit-plot", o.emit_plot, "Write a gnuplot script for the CSV");

  auto* susy = app.add_subcommand("susy-check", "Superalgebra, determinant and pairing checks");
  add_common(susy, o, false);
  susy->add_option("--tol", o.tol, "Pairing tolerance")->check(CLI::PositiveNumber);

  auto* ground = app.add_subcommand("ground-state", "Zero-energy ground state amplitudes");
  add_common(ground, o, false);
  ground->add_option("--frame", o.frame, "Hamiltonian frame")
      ->check(CLI::IsMember({"factorized", "rotated"}));
  ground->add_option("--emit-plot", o.emit_plot, "Write a gnuplot script for the CSV");

  auto* bench = app.add_subcommand("bench", "Time the large-J gap solver");
  add_common(bench, o, false);
  bench->add_option("--method", o.method, "Solver")
      ->check(CLI::IsMember({"supercharge", "tridiag", "dense"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (!o.emit_plot.empty() && o.format != "csv")
      throw UsageError("--emit-plot reads CSV output; use --format csv");
    json config;
    Result r;
    if (command == "spectrum") r = cmd_spectrum(o, config);
    else if (command == "gap-scan") r = cmd_gap_scan(o, config);
    else if (command == "susy-check") r = cmd_susy_check(o, config);
    else if (command == "ground-state") r = cmd_ground_state(o, config);
    else r = cmd_bench(o, config);
    return emit(command, o, r, config);
  } catch (const UsageError& e) {
    std::cerr << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << command << ": " << e.what() << '\n';
    return kExitVerification;
  }
}
