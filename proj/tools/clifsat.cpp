// Command-line front end: solve / compile / gen / xcheck / bench.
// Solver-conventional exit codes for `solve`: 10 = SAT, 20 = UNSAT, 1 = error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clifsat/clifsat.hpp"
#include "clifsat/json_io.hpp"

using namespace clifsat;
using nlohmann::json;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Cnf load_instance(const std::string& path) {
  std::vector<std::string> warnings;
  const Cnf f = parse_dimacs(read_file(path), &warnings);
  for (const std::string& w : warnings) std::cerr << "c warning: " << w << "\n";
  f.validate();
  return f;
}

DetectorConfig detector_from(const std::string& name) {
  if (name == "l0") return {DetectorLevel::L0};
  if (name == "l1") return {DetectorLevel::L1};
  if (name == "l2") return {DetectorLevel::L2};
  throw CLI::ValidationError("--detector", "expected l0, l1 or l2");
}

PickHeuristic heuristic_from(const std::string& name) {
  if (name == "maxocc") return PickHeuristic::MaxOccurrence;
  if (name == "lowest") return PickHeuristic::LowestIndex;
  throw CLI::ValidationError("--heuristic", "expected maxocc or lowest");
}

std::string witness_line(const Assignment& a) {
  std::string out = "v";
  for (int v = 1; v <= a.n; ++v)
    out += a.value(v) ? " " + std::to_string(v) : " -" + std::to_string(v);
  out += " 0";
  return out;
}

json witness_json(const Assignment& a) {
  json lits = json::array();
  for (int v = 1; v <= a.n; ++v) lits.push_back(a.value(v) ? v : -v);
  return lits;
}

struct SolveOutcome {
  Verdict verdict = Verdict::Unsat;
  std::optional<Assignment> witness;
  std::optional<SolveTrace> trace;
  std::string note;
};

SolveOutcome run_method(const Cnf& f, const std::string& method, DetectorConfig det,
                        PickHeuristic heur, bool cancel = false) {
  SolveOutcome out;
  if (method == "brute") {
    const BruteForceResult r = brute_force(f);
    out.verdict = r.verdict;
    out.witness = r.witness;
  } else if (method == "dpll") {
    const DpllResult r = dpll(f);
    out.verdict = r.verdict;
    out.witness = r.witness;
  } else if (method == "table") {
    const TruthTable t = compile_cnf(f);
    out.verdict = satisfiable_via_det(t) ? Verdict::Sat : Verdict::Unsat;
    const std::vector<Assignment> terms = dnf_terms(t);
    if (!terms.empty()) out.witness = terms.front();
  } else if (method == "symmetry") {
    const Cnf g = normalize(f);
    if (g.clause_free()) {
      // outside the nonempty hypothesis: trivially satisfiable
      out.verdict = Verdict::Sat;
      out.witness = Assignment(f.n, 0);
      out.note = "clause-free after normalization; symmetry test skipped";
    } else {
      SolveTrace trace;
      out.verdict = solve_symmetry(g, det, heur, &trace, cancel);
      out.trace = trace;
      if (cancel) out.note = "pair cancellation enabled (non-faithful speed mode)";
    }
  } else {
    throw CLI::ValidationError("--method", "expected symmetry, dpll, brute or table");
  }
  return out;
}

int cmd_solve(const std::string& path, const std::string& method,
              const std::string& detector, const std::string& heuristic,
              std::uint64_t seed, const std::string& format, bool cancel) {
  const auto start = std::chrono::steady_clock::now();
  const Cnf f = load_instance(path);
  const SolveOutcome r = run_method(f, method, detector_from(detector),
                                    heuristic_from(heuristic), cancel);
  const double elapsed = ms_since(start);

  if (format == "json") {
    json rep = {{"schema", "clifsat.solve/1"},
                {"instance", path},
                {"method", method},
                {"detector", detector},
                {"heuristic", heuristic},
                {"seed", seed},
                {"n", f.n},
                {"clauses", f.num_clauses()},
                {"verdict", to_string(r.verdict)},
                {"time_ms", elapsed}};
    if (r.witness) rep["witness"] = witness_json(*r.witness);
    if (r.trace) rep["trace"] = to_json(*r.trace);
    if (!r.note.empty()) rep["note"] = r.note;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "c method=" << method << " detector=" << detector
              << " heuristic=" << heuristic << " seed=" << seed
              << " time_ms=" << elapsed << "\n";
    if (!r.note.empty()) std::cout << "c note: " << r.note << "\n";
    std::cout << (r.verdict == Verdict::Sat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
    if (r.witness) std::cout << witness_line(*r.witness) << "\n";
  }
  return r.verdict == Verdict::Sat ? kExitSat : kExitUnsat;
}

int cmd_compile(const std::string& path, bool coeffs) {
  const Cnf f = load_instance(path);
  const TruthTable t = compile_cnf(f);
  std::cout << (coeffs ? to_json(IntTable{t}) : to_json(t)).dump(2) << "\n";
  return 0;
}

int cmd_gen(int n, int m, int k, std::uint64_t seed, const std::string& out_path) {
  const Cnf f = random_ksat(n, m, k, seed);
  const std::string text = "c generated: n=" + std::to_string(n) + " m=" +
                           std::to_string(m) + " k=" + std::to_string(k) +
                           " seed=" + std::to_string(seed) + "\n" + write_dimacs(f);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return 0;
}

int cmd_xcheck(int n, int m, int k, int count, std::uint64_t seed,
               const std::string& detectors_csv, const std::string& dump_dir,
               const std::vector<std::string>& extra_files, const std::string& format) {
  std::vector<std::string> detectors;
  {
    std::stringstream ss(detectors_csv);
    std::string item;
    while (std::getline(ss, item, ',')) detectors.push_back(item);
  }
  for (const std::string& d : detectors) detector_from(d);  // validate early

  struct Row {
    std::string name;
    Cnf instance;
  };
  std::vector<Row> rows;
  for (const std::string& path : extra_files)
    rows.push_back({path, load_instance(path)});
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(i) + 1));
    rows.push_back({"seed:" + std::to_string(s), random_ksat(n, m, k, s)});
  }

  std::vector<std::string> methods = {"dpll", "table"};
  for (const std::string& d : detectors) methods.push_back("sym-" + d);

  std::map<std::string, std::size_t> agree_count;
  json instances = json::array();
  json disagreements = json::array();
  std::size_t usable = 0;
  bool dumped_any = false;

  for (const Row& row : rows) {
    const Cnf f = normalize(row.instance);
    if (f.clause_free()) continue;  // outside the nonempty hypothesis
    ++usable;
    const Verdict truth = brute_force(f).verdict;
    json rec = {{"instance", row.name}, {"truth", to_string(truth)}};
    bool all_agree = true;
    auto note = [&](const std::string& method, Verdict v) {
      const bool ok = v == truth;
      rec["verdict_" + method] = to_string(v);
      rec["agree_" + method] = ok;
      if (ok) ++agree_count[method];
      all_agree = all_agree && ok;
    };
    note("dpll", dpll(f).verdict);
    note("table", is_symmetric_all(compile_cnf(f)) ? Verdict::Unsat : Verdict::Sat);
    for (const std::string& d : detectors)
      note("sym-" + d, solve_symmetry(f, detector_from(d)));
    instances.push_back(rec);
    if (!all_agree) {
      std::filesystem::create_directories(dump_dir);
      const std::string file =
          dump_dir + "/disagreement-" + std::to_string(disagreements.size()) + ".cnf";
      std::ofstream out(file, std::ios::binary);
      out << write_dimacs(f);
      dumped_any = true;
      rec["dumped"] = file;
      disagreements.push_back(rec);
    }
  }

  json agreement;
  for (const std::string& method : methods)
    agreement[method] =
        usable == 0 ? 1.0 : static_cast<double>(agree_count[method]) / usable;

  const json rep = {{"schema", "clifsat.xcheck/1"},
                    {"params",
                     {{"n", n}, {"m", m}, {"k", k}, {"count", count}, {"seed", seed},
                      {"detectors", detectors}}},
                    {"instances_checked", usable},
                    {"agreement", agreement},
                    {"instances", instances},
                    {"disagreements", disagreements}};
  if (format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "xcheck: " << usable << " instances, seed " << seed << "\n";
    for (const std::string& method : methods)
      std::cout << "  " << method << ": " << agreement[method].get<double>() * 100.0
                << "% agreement with brute force\n";
    std::cout << "  disagreements: " << disagreements.size()
              << (dumped_any ? " (dumped to " + dump_dir + ")" : "") << "\n";
  }
  return 0;
}

int cmd_bench(int n_min, int n_max, const std::string& ratios_csv, int k,
              std::uint64_t seed, const std::string& out_path) {
  std::vector<double> ratios;
  {
    std::stringstream ss(ratios_csv);
    std::string item;
    while (std::getline(ss, item, ',')) ratios.push_back(std::stod(item));
  }
  std::ostringstream csv;
  csv << "kind,n,m,k,seed,method,level,terms,expected_terms,verdict,time_ms\n";

  for (int n = n_min; n <= n_max; ++n) {
    for (double ratio : ratios) {
      const int m = std::max(1, static_cast<int>(ratio * n + 0.5));
      const std::uint64_t s =
          seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n * 131 + m));
      const Cnf f = normalize(random_ksat(n, m, k, s));
      if (f.clause_free()) continue;

      // pure elimination, no simplification: term counts double every level
      {
        SignedSum sum = SignedSum::of(f);
        std::uint64_t expected = 1;
        csv << "growth," << n << "," << m << "," << k << "," << s << ",,0,"
            << sum.terms.size() << "," << expected << ",,\n";
        for (int level = 1; level <= f.n; ++level) {
          sum = eliminate(sum, sum.live_vars.front());
          expected *= 2;
          csv << "growth," << n << "," << m << "," << k << "," << s << ",,"
              << level << "," << sum.terms.size() << "," << expected << ",,\n";
        }
      }

      auto emit = [&](const std::string& method, Verdict v, double time) {
        csv << "runtime," << n << "," << m << "," << k << "," << s << "," << method
            << ",,,," << to_string(v) << "," << time << "\n";
      };
      {
        auto t0 = std::chrono::steady_clock::now();
        const Verdict v = brute_force(f).verdict;
        emit("brute", v, ms_since(t0));
      }
      {
        auto t0 = std::chrono::steady_clock::now();
        const Verdict v = dpll(f).verdict;
        emit("dpll", v, ms_since(t0));
      }
      {
        auto t0 = std::chrono::steady_clock::now();
        const Verdict v =
            is_symmetric_all(compile_cnf(f)) ? Verdict::Unsat : Verdict::Sat;
        emit("table", v, ms_since(t0));
      }
      const std::vector<std::pair<std::string, DetectorConfig>> sym_methods = {
          {"sym-l0", {DetectorLevel::L0}},
          {"sym-l1", {DetectorLevel::L1}},
          {"sym-l2", {DetectorLevel::L2}}};
      for (const auto& [name, det] : sym_methods) {
        auto t0 = std::chrono::steady_clock::now();
        const Verdict v = solve_symmetry(f, det);
        emit(name, v, ms_since(t0));
      }
      {
        // non-faithful comparison point: pair cancellation enabled
        auto t0 = std::chrono::steady_clock::now();
        const Verdict v = solve_symmetry(f, {DetectorLevel::L1},
                                         PickHeuristic::MaxOccurrence, nullptr,
                                         /*cancel_pairs=*/true);
        emit("sym-l1-cancel", v, ms_since(t0));
      }
    }
  }

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT toolkit: truth-table compilation, reflection-symmetry "
               "unsatisfiability tests and signed-sum elimination"};
  app.require_subcommand(1);

  int max_n = -1;
  app.add_option("--max-n", max_n, "override all size guard limits");

  std::string path, method = "symmetry", detector = "l1", heuristic = "maxocc";
  std::string format = "text";
  std::uint64_t seed = 0;

  bool cancel = false;
  CLI::App* solve = app.add_subcommand("solve", "solve a DIMACS instance");
  solve->add_option("path", path, "DIMACS CNF file")->required();
  solve->add_option("--method", method, "symmetry | dpll | brute | table");
  solve->add_option("--detector", detector, "l0 | l1 | l2");
  solve->add_option("--heuristic", heuristic, "maxocc | lowest");
  solve->add_option("--seed", seed, "seed echoed in the report");
  solve->add_option("--format", format, "text | json");
  solve->add_flag("--cancel", cancel,
                  "cancel +/- pairs of equal problems (non-faithful speed mode)");

  bool coeffs = false;
  CLI::App* compile = app.add_subcommand("compile", "compile to a truth table (JSON)");
  compile->add_option("path", path, "DIMACS CNF file")->required();
  compile->add_flag("--coeffs", coeffs, "emit integer coefficients instead of bits");

  int gen_n = 0, gen_m = 0, gen_k = 3;
  std::string out_path;
  CLI::App* gen = app.add_subcommand("gen", "generate a random k-SAT instance");
  gen->add_option("--n", gen_n, "variables")->required();
  gen->add_option("--m", gen_m, "clauses")->required();
  gen->add_option("--k", gen_k, "literals per clause");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--out", out_path, "output file (stdout when absent)");

  int xc_n = 8, xc_m = 34, xc_k = 3, xc_count = 100;
  std::string detectors_csv = "l0,l1,l2", dump_dir = "xcheck-disagreements";
  std::vector<std::string> extra_files;
  CLI::App* xcheck = app.add_subcommand(
      "xcheck", "cross-check solvers against brute force on seeded instances");
  xcheck->add_option("--n", xc_n, "variables");
  xcheck->add_option("--m", xc_m, "clauses");
  xcheck->add_option("--k", xc_k, "literals per clause");
  xcheck->add_option("--count", xc_count, "number of random instances");
  xcheck->add_option("--seed", seed, "master seed");
  xcheck->add_option("--detectors", detectors_csv, "comma list of l0,l1,l2");
  xcheck->add_option("--dump-dir", dump_dir, "where to archive disagreements");
  xcheck->add_option("--extra", extra_files, "extra DIMACS instances to include");
  xcheck->add_option("--format", format, "text | json");

  int b_min = 4, b_max = 8;
  std::string ratios_csv = "2,4.3,6";
  CLI::App* bench = app.add_subcommand("bench", "runtime and term-growth CSV");
  bench->add_option("--n-min", b_min, "smallest n");
  bench->add_option("--n-max", b_max, "largest n");
  bench->add_option("--ratios", ratios_csv, "clause/variable ratios");
  bench->add_option("--k", xc_k, "literals per clause");
  bench->add_option("--seed", seed, "master seed");
  bench->add_option("-o,--out", out_path, "output CSV file (stdout when absent)");

  CLI11_PARSE(app, argc, argv);
  if (max_n > 0) max_n_override() = max_n;

  try {
    if (*solve)
      return cmd_solve(path, method, detector, heuristic, seed, format, cancel);
    if (*compile) return cmd_compile(path, coeffs);
    if (*gen) return cmd_gen(gen_n, gen_m, gen_k, seed, out_path);
    if (*xcheck)
      return cmd_xcheck(xc_n, xc_m, xc_k, xc_count, seed, detectors_csv, dump_dir,
                        extra_files, format);
    if (*bench) return cmd_bench(b_min, b_max, ratios_csv, xc_k, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
