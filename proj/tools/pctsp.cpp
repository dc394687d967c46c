#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pctsp/constants.hpp"
#include "pctsp/io.hpp"
#include "pctsp/oracle.hpp"
#include "pctsp/parity.hpp"
#include "pctsp/solver.hpp"

using namespace pctsp;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double ratio(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) return sgn(num) == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return to_double(num / den);
}

PctspInstance read_instance(const std::string& path) {
  try {
    return load_instance(path);
  } catch (const InstanceError& e) {
    throw UsageError(e.what());
  }
}

std::string order_string(const std::vector<Vertex>& order) {
  std::string s;
  for (Vertex v : order) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PCTSP_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

int cmd_generate(int n, std::uint64_t seed, const std::string& out) {
  const auto inst = generate_euclidean(n, seed);
  if (out.empty())
    std::cout << instance_to_json(inst).dump(2) << '\n';
  else
    save_instance(inst, out);
  return 0;
}

int cmd_solve(const std::string& path, const std::string& mode, const std::string& delta, const std::string& report) {
  const auto inst = read_instance(path);
  SolverConfig config;
  if (mode == "golden") {
    config = SolverConfig::golden();
  } else if (mode == "enumerate") {
    config = SolverConfig::enumerate();
  } else {
    if (delta.empty()) throw UsageError("--mode fixed needs --delta");
    Rational d;
    try {
      d = parse_rational(delta);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --delta: ") + e.what());
    }
    if (d < 0 || d >= 1) throw UsageError("--delta must lie in [0, 1)");
    config = SolverConfig::fixed(d);
  }
  const auto rep = run_full(inst, config);
  std::cout << "tour: " << order_string(rep.bestTour.order) << '\n'
            << "total: " << to_string(rep.bestTour.total()) << " (" << fmt12(to_double(rep.bestTour.total())) << ")\n"
            << "lp: " << to_string(rep.lpObjective) << " (" << fmt12(to_double(rep.lpObjective)) << ")\n"
            << "ratio: " << fmt12(rep.ratio) << '\n'
            << "delta: " << to_string(rep.bestDelta) << '\n'
            << "candidates: " << rep.candidateCount << '\n';
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw UsageError("cannot write " + report);
    out << report_to_json(rep).dump(2) << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& path) {
  const auto inst = read_instance(path);
  try {
    const auto opt = brute_force_opt(inst);
    std::cout << "opt: " << to_string(opt.cost) << " (" << fmt12(to_double(opt.cost)) << ")\n"
              << "tour: " << order_string(opt.tour.order) << '\n';
  } catch (const OracleError& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_verify(const std::string& path, bool lp_flag, bool decompose_flag, bool cert_flag) {
  const auto inst = read_instance(path);
  if (!lp_flag && !decompose_flag && !cert_flag) lp_flag = decompose_flag = cert_flag = true;
  const auto lp = solve_relaxation(inst);
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    std::cout << (pass ? "ok    " : "FAIL  ") << what << '\n';
    ok = ok && pass;
  };

  if (lp_flag) {
    const auto rep = verify_feasibility(inst, lp);
    line(rep.ok(), "lp feasibility" + (rep.ok() ? std::string() : ": " + rep.message));
    if (inst.size() <= kMaxOracleSize) line(enumerate_cut_check(inst, lp).ok, "lp cut enumeration");
    std::cout << "      lp objective " << to_string(lp.objective) << '\n';
  }
  if (decompose_flag) {
    try {
      const auto fam = decompose(inst, lp);
      const auto violation = family_violation(lp, fam, inst.root());
      line(!violation, "decomposition into " + std::to_string(fam.size()) + " trees" +
                           (violation ? ": " + *violation : std::string()));
    } catch (const DecompositionError& e) {
      line(false, std::string("decomposition: ") + e.what());
    }
  }
  if (cert_flag) {
    if (inst.size() > 20) throw UsageError("certificate enumeration is limited to n <= 20");
    long checked = 0;
    long failed = 0;
    for (const Rational& delta : enumerated_deltas(lp)) {
      const auto pipe = prepare_pipeline(inst, lp, delta);
      for (const Rational& gamma : pipe.thresholds())
        for (const auto& tree : pipe.family.trees) {
          const auto layers = core_layers(tree, pipe.split.y, inst.root());
          const auto c = core(tree, pipe.split.y, gamma, inst.root());
          const auto cert = build_certificate(pipe.split, layers, gamma, delta);
          const bool pass = check_join_dominant(cert.z, c).ok &&
                            edges_cost(inst, min_cost_matching(inst, odd_vertices(inst.size(), c.edges()))) <=
                                edge_cost(inst, cert.z);
          ++checked;
          failed += !pass;
        }
    }
    line(failed == 0, "certificates " + std::to_string(checked - failed) + "/" + std::to_string(checked));
  }
  return ok ? 0 : kFailure;
}

int cmd_constants(double kappa0, double kappa) {
  using namespace pctsp::analysis;
  if (!(0 <= kappa0 && kappa0 < kappa && kappa < 1)) throw UsageError("need 0 <= kappa0 < kappa < 1");
  const double gv = g(kappa, kappa0);
  const auto hv = h(kappa, kappa0);
  const double both = std::max(gv, hv.upper_bound);
  std::cout << "alpha((3-sqrt5)/2) = " << fmt12(alpha_of_delta(golden_delta_value())) << '\n'
            << "g = " << fmt12(gv) << '\n'
            << "h = " << fmt12(hv.value) << " (grid step 1e-5, argmax y = " << fmt12(hv.argmax)
            << ", certified <= " << fmt12(hv.upper_bound) << ")\n"
            << "max{g,h} <= " << fmt12(both) << '\n';
  return both < 1.599 ? 0 : kFailure;
}

struct BenchRow {
  Rational lp;
  Rational opt;
  Rational alg;
};

int cmd_bench(int count, int n, std::uint64_t seed) {
  if (n > kMaxOracleSize) throw UsageError("bench runs the exact oracle, so --n must be <= 12");
  std::vector<BenchRow> rows(count);
  std::atomic<int> next{0};
  std::atomic<bool> error{false};
  std::string message;
  std::mutex message_lock;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        const auto inst = generate_euclidean(n, seed + static_cast<std::uint64_t>(i));
        const auto lp = solve_relaxation(inst);
        rows[i] = {lp.objective, brute_force_opt(inst).cost,
                   run_full(inst, lp, SolverConfig::enumerate()).bestTour.total()};
      } catch (const std::exception& e) {
        std::lock_guard guard(message_lock);
        error = true;
        message = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(thread_count(), std::max(count, 1)); ++t) pool.emplace_back(worker);
  }
  if (error) throw std::runtime_error(message);

  bool ok = true;
  std::cout << "lp,opt,alg,ratio_to_lp,ratio_to_opt\n";
  for (const auto& r : rows) {
    std::cout << fmt12(to_double(r.lp)) << ',' << fmt12(to_double(r.opt)) << ',' << fmt12(to_double(r.alg)) << ','
              << fmt12(ratio(r.alg, r.lp)) << ',' << fmt12(ratio(r.alg, r.opt)) << '\n';
    ok = ok && r.lp <= r.opt && r.opt <= r.alg && r.alg * 1000 <= 1599 * r.lp;
  }
  return ok ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prize-collecting TSP: LP-relative approximation, oracles and analysis constants."};
  app.require_subcommand(1);

  int n = 8;
  std::uint64_t seed = 1;
  std::string out;
  auto* generate = app.add_subcommand("generate", "Write a seeded Euclidean instance as JSON");
  generate->add_option("--n", n, "Number of vertices including the root")->required()->check(CLI::Range(1, 1000));
  generate->add_option("--seed", seed, "Generator seed")->required();
  generate->add_option("--out", out, "Output file (stdout if omitted)");

  std::string instance;
  std::string mode = "enumerate";
  std::string delta;
  std::string report;
  auto* solve = app.add_subcommand("solve", "Run the LP-rounding algorithm on an instance");
  solve->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--mode", mode, "golden | enumerate | fixed")
      ->check(CLI::IsMember({"golden", "enumerate", "fixed"}));
  solve->add_option("--delta", delta, "Splitting threshold for --mode fixed, e.g. 0.4 or 2/5");
  solve->add_option("--report", report, "Write the full report as JSON");

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by dynamic programming (n <= 12)");
  oracle->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);

  bool lp_flag = false;
  bool decompose_flag = false;
  bool cert_flag = false;
  auto* verify = app.add_subcommand("verify", "Check LP feasibility, tree decomposition and certificates");
  verify->add_option("--instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  verify->add_flag("--lp", lp_flag, "LP optimum satisfies every constraint");
  verify->add_flag("--decompose", decompose_flag, "Tree decomposition identities");
  verify->add_flag("--certificates", cert_flag, "Parity certificates for every candidate (n <= 20)");

  double kappa0 = 0.3724;
  double kappa = 0.9971;
  auto* constants = app.add_subcommand("constants", "Evaluate alpha, g and h; exit 1 if max{g,h} >= 1.599");
  constants->add_option("--kappa0", kappa0, "Lower end of the delta support");
  constants->add_option("--kappa", kappa, "Upper end of the delta support");

  int count = 100;
  auto* bench = app.add_subcommand(
      "bench",
      "Solve K seeded instances (seeds S..S+K-1) and the exact oracle.\n"
      "CSV columns: lp,opt,alg,ratio_to_lp,ratio_to_opt (12 significant digits, one row per instance in seed order).\n"
      "PCTSP_THREADS caps the worker count. Exit 1 if any row breaks LP <= OPT <= alg <= 1.599 LP.");
  bench->add_option("--count", count, "Number of instances")->required()->check(CLI::Range(0, 1000000));
  bench->add_option("--n", n, "Vertices per instance")->required()->check(CLI::Range(1, 12));
  bench->add_option("--seed", seed, "First seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*generate) return cmd_generate(n, seed, out);
    if (*solve) return cmd_solve(instance, mode, delta, report);
    if (*oracle) return cmd_oracle(instance);
    if (*verify) return cmd_verify(instance, lp_flag, decompose_flag, cert_flag);
    if (*constants) return cmd_constants(kappa0, kappa);
    if (*bench) return cmd_bench(count, n, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
