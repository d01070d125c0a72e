#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "hyperspec/closed_form.hpp"
#include "hyperspec/extremal.hpp"
#include "hyperspec/hypergraph_io.hpp"
#include "hyperspec/report.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactly one of the builder flags or --file.
struct InputSource {
  std::vector<int> complete;
  std::vector<int> sunflower;
  std::vector<int> turan;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--complete", complete, "complete hypergraph K_T^R")->expected(2)->type_name("T R");
    cmd->add_option("--sunflower", sunflower, "sunflower SH(M,Q,R)")->expected(3)->type_name("M Q R");
    cmd->add_option("--turan", turan, "Turan hypergraph T_T^R(N)")->expected(3)->type_name("T R N");
    cmd->add_option("--file", file, "hypergraph text file")->type_name("PATH");
  }

  int chosen() const { return !complete.empty() + !sunflower.empty() + !turan.empty() + !file.empty(); }

  std::optional<SunflowerParams> sunflower_params() const {
    if (sunflower.empty()) return std::nullopt;
    return SunflowerParams(sunflower[0], sunflower[1], sunflower[2]);
  }

  UniformHypergraph build() const {
    if (chosen() != 1) throw UsageError("give exactly one of --complete, --sunflower, --turan, --file");
    if (!complete.empty()) return complete_hypergraph(complete[0], complete[1]);
    if (!sunflower.empty()) return hyperspec::sunflower(*sunflower_params());
    if (!turan.empty()) return turan_hypergraph(turan[0], turan[1], turan[2]);
    return load_hypergraph(file);
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

struct Common {
  double tol = 1e-10;
  long max_iter = 100000;
  std::string format = "text";
  int workers = 1;

  void attach(CLI::App* cmd, bool with_workers) {
    cmd->add_option("--tol", tol, "solver bracket tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", max_iter, "solver iteration budget")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    if (with_workers) cmd->add_option("--workers", workers, "parallel evaluation threads")->check(CLI::PositiveNumber);
  }

  SpectralOptions solver() const {
    SpectralOptions o;
    o.tol = tol;
    o.max_iter = max_iter;
    return o;
  }
};

std::string precise(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

int cmd_rho(const InputSource& in, const Common& common, const std::string& parts_text, bool vector, std::ostream& out) {
  const auto g = in.build();
  SpectralResult res;
  std::string family = family_name(g);
  if (!parts_text.empty()) {
    auto parts = parse_int_list(parts_text);
    res = quotient_spectral_radius(QuotientSystem(g, parts), common.solver());
    family += " o " + Composition{parts}.to_string();
  } else {
    res = spectral_radius(g, common.solver());
  }
  write_spectral(out, parse_format(common.format), family, res, vector);
  return res.converged ? kSuccess : kNotConverged;
}

int cmd_sunflower_rho(const InputSource& in, const Common& common, const std::string& parts_text, bool check,
                      std::ostream& out) {
  const auto params = in.sunflower_params();
  if (!params || in.chosen() != 1) throw UsageError("sunflower-rho needs --sunflower M Q R");
  const auto parts = parse_int_list(parts_text);
  const double closed = sunflower_rho(SunflowerBlowup(*params, parts));
  std::optional<SpectralResult> solved;
  if (check) solved = quotient_spectral_radius(QuotientSystem(sunflower(*params), parts), common.solver());

  const auto format = parse_format(common.format);
  const std::string family = family_name(sunflower(*params)) + " o " + Composition{parts}.to_string();
  if (format == OutputFormat::json) {
    nlohmann::ordered_json j{{"schema", 1}, {"command", "sunflower-rho"}, {"family", family}, {"rho", closed}};
    if (solved) {
      j["solver_rho"] = solved->rho;
      j["difference"] = solved->rho - closed;
      j["converged"] = solved->converged;
    }
    out << j.dump(2) << '\n';
  } else if (format == OutputFormat::csv) {
    out << "family,rho" << (solved ? ",solver_rho,difference" : "") << '\n';
    out << family << ',' << precise(closed);
    if (solved) out << ',' << precise(solved->rho) << ',' << precise(solved->rho - closed);
    out << '\n';
  } else {
    out << "family      " << family << "\nrho         " << precise(closed) << '\n';
    if (solved) out << "solver rho  " << precise(solved->rho) << "\ndifference  " << precise(solved->rho - closed) << '\n';
  }
  return solved && !solved->converged ? kNotConverged : kSuccess;
}

int cmd_extremal(const InputSource& in, const Common& common, int n, const std::string& evaluator, std::ostream& out) {
  const auto g = in.build();
  if (n < g.order()) throw UsageError("--n must be at least the base order " + std::to_string(g.order()));
  ExtremalOptions opts;
  opts.workers = common.workers;
  opts.solver = common.solver();
  const auto ev = evaluator == "closed" ? Evaluator::sunflower_closed_form : Evaluator::quotient_solver;
  write_extremal(out, parse_format(common.format), brute_force_extremal(g, n, ev, opts));
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  std::string t = "3,4", r, m, q, k = "2,3", beta;
  int n_max = -1;
  long theta_max = 20;
  int count = -1;
  unsigned long seed = 1;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
  std::vector<VerificationReport> reports;
  ExtremalOptions opts;
  opts.workers = common.workers;
  opts.solver = common.solver();
  auto list_or = [](const std::string& text, const std::string& fallback) {
    return parse_int_list(text.empty() ? fallback : text);
  };

  if (a.suite == "theorem5") {
    for (int t : list_or(a.t, "3,4"))
      for (int r : list_or(a.r, "3")) {
        if (r > t || r < 2) continue;
        for (int n = t; n <= (a.n_max < 0 ? t + 6 : a.n_max); ++n) reports.push_back(verify_theorem5(t, r, n, opts));
      }
  } else if (a.suite == "theorem41") {
    for (int m : list_or(a.m, "2,3"))
      for (int r : list_or(a.r, "3"))
        for (int n = r + m - 1; n <= (a.n_max < 0 ? r + m + 5 : a.n_max); ++n)
          reports.push_back(verify_theorem41(m, r, n, opts));
  } else if (a.suite == "theorem9" || a.suite == "eq14") {
    for (int m : list_or(a.m, "2"))
      for (int q : list_or(a.q, "2"))
        for (int r : list_or(a.r, "3")) {
          if (q >= r) continue;
          const int t = r + (m - 1) * q;
          for (int n = t; n <= (a.n_max < 0 ? t + 6 : a.n_max); ++n)
            reports.push_back(a.suite == "eq14" ? verify_eq14_transform(n, m, q, r, opts.solver)
                                                : verify_theorem9(m, q, r, n, opts));
        }
  } else if (a.suite == "lemma7") {
    const auto betas = a.beta.empty() ? std::vector<double>{1, 1.5, 2, 3} : parse_real_list(a.beta);
    for (int l = 3; l <= 5; ++l)
      for (double b : betas) reports.push_back(verify_lemma7(a.theta_max, l, b));
  } else if (a.suite == "lemma8") {
    const auto betas = a.beta.empty() ? std::vector<double>{1, 1.5, 2, 3} : parse_real_list(a.beta);
    for (int m : list_or(a.m, "2,3,4"))
      for (int q : list_or(a.q, "2,3,4"))
        for (double b : betas) reports.push_back(verify_lemma8(a.theta_max, m, q, b));
  } else if (a.suite == "lemma4") {
    reports.push_back(verify_shift_batch(a.count < 0 ? 100 : a.count, a.seed, opts.solver));
  } else if (a.suite == "scaling") {
    for (int k : list_or(a.k, "2,3")) reports.push_back(verify_scaling(k, a.count < 0 ? 50 : a.count, a.seed, opts.solver));
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  write_verification(out, parse_format(common.format), a.suite, reports);
  return std::ranges::all_of(reports, &VerificationReport::passed) ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radii of uniform hypergraphs and their blow-ups", "hyperspec"};
  app.require_subcommand(1);

  InputSource in;
  Common common;
  std::string parts;
  bool vector = false, check = false;
  int n = 0;
  std::string evaluator = "solver";
  VerifyArgs va;

  auto* rho = app.add_subcommand("rho", "spectral radius by shifted power iteration");
  in.attach(rho);
  common.attach(rho, false);
  rho->add_option("--parts", parts, "blow-up part sizes a,b,c (solved on the quotient)");
  rho->add_flag("--vector", vector, "print the Perron vector");

  auto* sf = app.add_subcommand("sunflower-rho", "closed-form spectral radius of a sunflower blow-up");
  in.attach(sf);
  common.attach(sf, false);
  sf->add_option("--parts", parts, "part sizes in kernel-then-petals order")->required();
  sf->add_flag("--check", check, "also run the quotient solver");

  auto* ex = app.add_subcommand("extremal", "brute-force minima and maxima over all blow-ups of order n");
  in.attach(ex);
  common.attach(ex, true);
  ex->add_option("--n", n, "blow-up order")->required();
  ex->add_option("--evaluator", evaluator, "solver | closed")->check(CLI::IsMember({"solver", "closed"}));

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common.attach(ver, true);
  ver->add_option("suite", va.suite, "theorem5 | theorem41 | theorem9 | eq14 | lemma4 | lemma7 | lemma8 | scaling")
      ->required();
  ver->add_option("--t", va.t, "base orders, comma separated");
  ver->add_option("--r", va.r, "ranks");
  ver->add_option("--m", va.m, "petal counts");
  ver->add_option("--q", va.q, "petal sizes");
  ver->add_option("--n-max", va.n_max, "largest blow-up order");
  ver->add_option("--theta-max", va.theta_max, "largest theta for lemma suites");
  ver->add_option("--beta", va.beta, "exponents for lemma suites");
  ver->add_option("--k", va.k, "uniform blow-up factors");
  ver->add_option("--count", va.count, "random instances");
  ver->add_option("--seed", va.seed, "random seed");

  auto* wr = app.add_subcommand("write", "print a built hypergraph in the text format");
  in.attach(wr);
  std::string wr_parts;
  wr->add_option("--parts", wr_parts, "blow up before writing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (rho->parsed()) return cmd_rho(in, common, parts, vector, out);
    if (sf->parsed()) return cmd_sunflower_rho(in, common, parts, check, out);
    if (ex->parsed()) return cmd_extremal(in, common, n, evaluator, out);
    if (ver->parsed()) return cmd_verify(va, common, out);
    if (wr->parsed()) {
      auto g = in.build();
      if (!wr_parts.empty()) g = blow_up(BlowupSpec(g, parse_int_list(wr_parts))).first;
      write_hypergraph(out, g);
      return kSuccess;
    }
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const NotConvergedError& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hyperspec::cli
