#include "oddchi/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddchi/bound.hpp"
#include "oddchi/coloring.hpp"
#include "oddchi/errors.hpp"
#include "oddchi/format.hpp"
#include "oddchi/lattice_graph.hpp"
#include "oddchi/run_record.hpp"
#include "oddchi/spectrum.hpp"
#include "oddchi/verify_suites.hpp"

namespace oddchi::cli {

namespace {

using json = nlohmann::ordered_json;

// Opened before any numerics so a bad path fails fast with exit code 2.
class Output {
 public:
  Output(std::string path, std::ostream& fallback) : path_(std::move(path)), fallback_(fallback) {
    if (is_file()) {
      file_ = std::make_unique<std::ofstream>(path_, std::ios::binary | std::ios::trunc);
      if (!*file_) throw IoError("cannot open '" + path_ + "' for writing");
    }
  }
  bool is_file() const { return !path_.empty() && path_ != "-"; }
  const std::string& path() const { return path_; }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }
  void finish() {
    if (file_ && !file_->flush()) throw IoError("failed writing '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
};

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError(what + ": not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

// "m1..m2" or a single "m".
std::pair<int, int> parse_decades(const std::string& text) {
  const auto dots = text.find("..");
  const std::string lo = text.substr(0, dots);
  const std::string hi = dots == std::string::npos ? lo : text.substr(dots + 2);
  auto to_int = [&](const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw DomainError("--decades expects m1..m2, got '" + text + "'");
    }
    return v;
  };
  const int m1 = to_int(lo);
  const int m2 = to_int(hi);
  if (m1 < 0 || m2 < m1) throw DomainError("--decades needs 0 <= m1 <= m2, got '" + text + "'");
  return {m1, m2};
}

std::string csv_field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

json summary_json(const SpectralSummary& s) {
  json j;
  j["alpha"] = s.alpha;
  j["lambda_min"] = s.lambda_min;
  j["r_at_min"] = s.r_at_min;
  j["rho"] = s.rho;
  j["chi_lower_bound"] = s.chi_lower_bound;
  return j;
}

struct Common {
  std::string run_record;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--run-record", c.run_record, "Write a JSON run record to this path");
}

void finish_record(const Common& c, const std::string& command, const ParamMap& params,
                   std::vector<std::string> outputs, std::map<std::string, std::string> summary) {
  if (c.run_record.empty()) return;
  write_run_record(c.run_record,
                   make_run_record(command, params, std::move(outputs), std::move(summary)), params);
}

// ---- scan flags shared by bound and sweep

struct ScanFlags {
  double r_min = 0.5 * std::numbers::pi;
  double r_max = 60.0;
  std::optional<double> step;
  double refine_tol = 1e-6;
  bool no_spike_aware = false;
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  std::size_t max_subdivisions = 20000;
};

void add_scan_flags(CLI::App& sub, ScanFlags& f) {
  sub.add_option("--r-min", f.r_min, "Start of the r scan")->capture_default_str();
  sub.add_option("--r-max", f.r_max, "End of the r scan")->capture_default_str();
  sub.add_option("--step", f.step, "Coarse grid step (default min(0.05, 5(alpha-1)))");
  sub.add_option("--refine-tol", f.refine_tol, "Golden-section tolerance in r")->capture_default_str();
  sub.add_flag("--no-spike-aware", f.no_spike_aware,
               "Plain panels and no extra scan points near r = m pi");
  sub.add_option("--abs-tol", f.abs_tol, "Quadrature absolute tolerance")->capture_default_str();
  sub.add_option("--rel-tol", f.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  sub.add_option("--max-subdivisions", f.max_subdivisions, "Quadrature panel budget")
      ->capture_default_str();
}

ScanConfig to_scan_config(const ScanFlags& f) {
  ScanConfig c;
  c.r_min = f.r_min;
  c.r_max = f.r_max;
  c.coarse_step = f.step;
  c.refine_tol = f.refine_tol;
  c.spike_aware = !f.no_spike_aware;
  c.quad.abs_tol = f.abs_tol;
  c.quad.rel_tol = f.rel_tol;
  c.quad.max_subdivisions = f.max_subdivisions;
  c.validate();
  return c;
}

void add_scan_params(ParamMap& p, const ScanFlags& f) {
  p["r_min"] = format_double(f.r_min);
  p["r_max"] = format_double(f.r_max);
  p["step"] = f.step ? format_double(*f.step) : "auto";
  p["refine_tol"] = format_double(f.refine_tol);
  p["spike_aware"] = f.no_spike_aware ? "false" : "true";
  p["abs_tol"] = format_double(f.abs_tol);
  p["rel_tol"] = format_double(f.rel_tol);
  p["max_subdivisions"] = std::to_string(f.max_subdivisions);
}

// ---- lambda-curve

struct CurveOpts {
  Common common;
  double alpha = 0.0;
  double r_min = 0.0;
  double r_max = 20.0;
  int samples = 201;
  std::string method = "closed";
  double tol = 1e-10;
  std::string out = "-";
};

void add_curve(CLI::App& app, CurveOpts& o) {
  auto* sub = app.add_subcommand("lambda-curve", "Tabulate lambda(r; alpha) as CSV");
  sub->add_option("--alpha", o.alpha, "Decay parameter, 1 < alpha <= 2")->required();
  sub->add_option("--r-min", o.r_min, "First r")->capture_default_str();
  sub->add_option("--r-max", o.r_max, "Last r")->capture_default_str();
  sub->add_option("--samples", o.samples, "Number of equally spaced r values (>= 2)")
      ->check(CLI::Range(2, std::numeric_limits<int>::max()))
      ->capture_default_str();
  sub->add_option("--method", o.method, "closed, bessel, complex or all")
      ->check(CLI::IsMember({"closed", "bessel", "complex", "all"}))
      ->capture_default_str();
  sub->add_option("--tol", o.tol, "Quadrature tolerance and series tail bound")->capture_default_str();
  sub->add_option("--out", o.out, "CSV path, - for stdout")->capture_default_str();
  add_common(*sub, o.common);
}

int cmd_lambda_curve(const CurveOpts& o, std::ostream& out, std::ostream& err) {
  const Alpha alpha(o.alpha);
  if (o.samples < 2) throw DomainError("--samples must be at least 2");
  if (!(o.r_min >= 0.0) || !(o.r_max > o.r_min) || !std::isfinite(o.r_max)) {
    throw DomainError("need 0 <= r_min < r_max");
  }
  if (!(o.tol > 0.0)) throw DomainError("--tol must be positive");
  const quad::QuadratureConfig q{o.tol, o.tol, 20000, 1e-15};

  Output sink(o.out, out);
  auto& s = sink.stream();
  const bool all = o.method == "all";
  s << "r,lambda,method,error_estimate";
  if (all) s << ",lambda_closed_form,lambda_bessel_series,lambda_complex_form,max_disagreement";
  s << "\n";

  std::size_t unconverged = 0;
  for (int i = 0; i < o.samples; ++i) {
    const double r = i == o.samples - 1
                         ? o.r_max
                         : o.r_min + (o.r_max - o.r_min) * static_cast<double>(i) / (o.samples - 1);
    const RadialFrequency rf(r);
    if (all) {
      const auto c = lambda_closed_form(rf, alpha, q);
      const auto b = lambda_bessel_series(rf, alpha, o.tol);
      const auto z = lambda_complex_form(rf, alpha, q);
      if (!c.converged || !z.converged) ++unconverged;
      const double d = std::max({std::abs(c.lambda - b.lambda), std::abs(c.lambda - z.real),
                                 std::abs(b.lambda - z.real)});
      s << format_double(r) << ',' << format_double(c.lambda) << ',' << method_name(c.method) << ','
        << format_double(c.error_estimate) << ',' << format_double(c.lambda) << ','
        << format_double(b.lambda) << ',' << format_double(z.real) << ',' << format_double(d)
        << "\n";
      continue;
    }
    EigenvalueSample e;
    if (o.method == "closed") {
      e = lambda_closed_form(rf, alpha, q);
    } else if (o.method == "bessel") {
      e = lambda_bessel_series(rf, alpha, o.tol);
    } else {
      const auto z = lambda_complex_form(rf, alpha, q);
      e.lambda = z.real;
      e.error_estimate = z.error_estimate;
      e.converged = z.converged;
      e.method = Method::ComplexForm;
    }
    if (!e.converged) ++unconverged;
    s << format_double(r) << ',' << format_double(e.lambda) << ',' << method_name(e.method) << ','
      << format_double(e.error_estimate) << "\n";
  }
  sink.finish();
  if (unconverged) err << "warning: " << unconverged << " samples hit the quadrature budget\n";

  ParamMap p{{"alpha", format_double(o.alpha)}, {"r_min", format_double(o.r_min)},
             {"r_max", format_double(o.r_max)}, {"samples", std::to_string(o.samples)},
             {"method", o.method},               {"tol", format_double(o.tol)}};
  finish_record(o.common, "lambda-curve", p, {sink.is_file() ? o.out : "stdout"},
                {{"rows", std::to_string(o.samples)}, {"unconverged", std::to_string(unconverged)}});
  return kExitOk;
}

// ---- bound

struct BoundOpts {
  Common common;
  double alpha = 0.0;
  ScanFlags scan;
  int jobs = 1;
  std::string out = "-";
};

void add_bound(CLI::App& app, BoundOpts& o) {
  auto* sub = app.add_subcommand("bound", "Minimize lambda over r and print the chromatic bound");
  sub->add_option("--alpha", o.alpha, "Decay parameter, 1 < alpha <= 2")->required();
  add_scan_flags(*sub, o.scan);
  sub->add_option("--jobs", o.jobs, "Worker threads (one alpha: no fan-out)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out", o.out, "JSON path, - for stdout")->capture_default_str();
  add_common(*sub, o.common);
}

int cmd_bound(const BoundOpts& o, std::ostream& out) {
  const Alpha alpha(o.alpha);
  const ScanConfig cfg = to_scan_config(o.scan);
  Output sink(o.out, out);
  const SpectralSummary s = chi_lower_bound(alpha, cfg);
  sink.stream() << summary_json(s).dump(2) << "\n";
  sink.finish();

  ParamMap p{{"alpha", format_double(o.alpha)}};
  add_scan_params(p, o.scan);
  finish_record(o.common, "bound", p, {sink.is_file() ? o.out : "stdout"},
                {{"chi_lower_bound", format_double(s.chi_lower_bound)},
                 {"lambda_min", format_double(s.lambda_min)}});
  return kExitOk;
}

// ---- sweep

struct SweepOpts {
  Common common;
  std::string alphas;
  std::string decades;
  bool fit = false;
  std::string out = "-";
  std::string fit_out = "-";
  int jobs = 1;
  ScanFlags scan;
  std::optional<double> planted_beta;
  double planted_scale = 1.0;
};

void add_sweep(CLI::App& app, SweepOpts& o) {
  auto* sub = app.add_subcommand("sweep", "Bound for a list of alphas, optionally with a scaling fit");
  auto* list = sub->add_option("--alphas", o.alphas, "Comma-separated alphas");
  auto* dec = sub->add_option("--decades", o.decades, "m1..m2 meaning alpha = 1 + 10^-m");
  list->excludes(dec);
  sub->add_flag("--fit", o.fit, "Fit |lambda_min| ~ (alpha-1)^-beta");
  sub->add_option("--out", o.out, "CSV path, - for stdout")->capture_default_str();
  sub->add_option("--fit-out", o.fit_out, "Fit JSON path, - for stdout")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads across alphas")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_scan_flags(*sub, o.scan);
  // Test hook: replace the scan by |lambda_min| = scale (alpha-1)^-beta.
  sub->add_option("--planted-beta", o.planted_beta)->group("");
  sub->add_option("--planted-scale", o.planted_scale)->group("");
  add_common(*sub, o.common);
}

int cmd_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
  std::vector<double> alphas;
  if (!o.decades.empty()) {
    const auto [m1, m2] = parse_decades(o.decades);
    alphas = decade_alphas(m1, m2);
  } else if (!o.alphas.empty()) {
    for (const auto& item : split_list(o.alphas)) alphas.push_back(parse_double(item, "--alphas"));
  }
  if (alphas.empty()) throw DomainError("sweep needs --alphas or --decades");
  const ScanConfig cfg = to_scan_config(o.scan);

  Output csv(o.out, out);
  std::unique_ptr<Output> fit_sink;
  if (o.fit) fit_sink = std::make_unique<Output>(o.fit_out, out);

  std::vector<SweepEntry> entries;
  if (o.planted_beta) {
    for (double a : alphas) {
      SweepEntry e;
      e.alpha = a;
      try {
        const Alpha alpha(a);
        const double lambda = -o.planted_scale * std::pow(a - 1.0, -*o.planted_beta);
        e.summary = summarize_bound(alpha, lambda, 0.0);
      } catch (const std::exception& ex) {
        e.status = ex.what();
      }
      entries.push_back(std::move(e));
    }
  } else {
    entries = sweep_alpha(alphas, cfg, o.jobs);
  }

  auto& s = csv.stream();
  s << "alpha,lambda_min,r_at_min,rho,chi_lower_bound,status\n";
  std::vector<SpectralSummary> ok;
  for (const auto& e : entries) {
    s << format_double(e.alpha) << ',';
    if (e.summary) {
      const auto& v = *e.summary;
      s << format_double(v.lambda_min) << ',' << format_double(v.r_at_min) << ','
        << format_double(v.rho) << ',' << format_double(v.chi_lower_bound) << ",ok\n";
      ok.push_back(v);
    } else {
      s << ",,,," << csv_field(e.status) << "\n";
    }
  }
  csv.finish();
  const std::size_t failed = entries.size() - ok.size();
  if (failed) err << "sweep: " << failed << " of " << entries.size() << " alphas failed\n";

  std::map<std::string, std::string> summary{{"rows", std::to_string(entries.size())},
                                             {"failed", std::to_string(failed)}};
  std::vector<std::string> outputs{csv.is_file() ? o.out : "stdout"};
  if (o.fit) {
    const ScalingFit f = fit_scaling_exponent(ok);
    const ScalingFit c = fit_chi_exponent(ok);
    json j;
    j["beta"] = f.beta;
    j["r_squared"] = f.r_squared;
    j["log_intercept"] = f.log_intercept;
    j["points"] = f.points.size();
    j["consistent_with_upper_bound"] = f.consistent_with_upper_bound;
    j["chi_beta"] = c.beta;
    j["chi_r_squared"] = c.r_squared;
    fit_sink->stream() << j.dump(2) << "\n";
    fit_sink->finish();
    summary["beta"] = format_double(f.beta);
    outputs.push_back(fit_sink->is_file() ? o.fit_out : "stdout");
  }

  std::vector<std::string> alpha_text;
  for (double a : alphas) alpha_text.push_back(format_double(a));
  ParamMap p{{"alphas", join(alpha_text)}, {"fit", o.fit ? "true" : "false"}};
  if (o.planted_beta) {
    p["planted_beta"] = format_double(*o.planted_beta);
    p["planted_scale"] = format_double(o.planted_scale);
  }
  add_scan_params(p, o.scan);
  finish_record(o.common, "sweep", p, outputs, summary);
  return failed ? kExitFailure : kExitOk;
}

// ---- lattice

struct LatticeOpts {
  Common common;
  std::string kind = "triangular";
  std::int64_t radius_sq = 0;
  std::optional<double> decay;
  bool exact = false;
  std::string out;
  std::string summary_out = "-";
  std::size_t vertex_cap = kDefaultVertexCap;
  int jobs = 1;
};

void add_lattice(CLI::App& app, LatticeOpts& o) {
  auto* sub = app.add_subcommand("lattice", "Odd-distance graph on a finite lattice patch");
  sub->add_option("--kind", o.kind, "triangular or square")
      ->check(CLI::IsMember({"triangular", "square"}))
      ->capture_default_str();
  sub->add_option("--radius-sq", o.radius_sq, "Keep points with Q(a, b) <= radius_sq")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--alpha", o.decay, "Edge weights alpha^-k for length 2k+1 (default: unit)");
  sub->add_flag("--exact", o.exact, "Exact chromatic number (n <= 40)");
  sub->add_option("--out", o.out, "Edge-list path");
  sub->add_option("--summary-out", o.summary_out, "JSON path, - for stdout")->capture_default_str();
  sub->add_option("--vertex-cap", o.vertex_cap, "Refuse larger patches")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads (one instance: no fan-out)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(*sub, o.common);
}

int cmd_lattice(const LatticeOpts& o, std::ostream& out, std::ostream& err) {
  const LatticeSpec spec{parse_lattice_kind(o.kind), o.radius_sq};
  std::unique_ptr<Output> edges;
  if (!o.out.empty()) edges = std::make_unique<Output>(o.out, out);
  Output sink(o.summary_out, out);

  const auto points = generate_lattice_points(spec, o.vertex_cap);
  const auto graph = build_odd_graph(points, spec.kind, o.decay, o.vertex_cap);
  const auto h = hoffman_bound(graph);

  json j;
  j["kind"] = std::string(lattice_kind_name(spec.kind));
  j["radius_sq"] = o.radius_sq;
  if (o.decay) j["alpha"] = *o.decay;
  j["n"] = graph.vertex_count();
  j["m"] = graph.edges.size();
  j["lambda_max"] = h.lambda_max;
  j["lambda_min"] = h.lambda_min;
  j["hoffman_bound"] = h.bound;
  j["degenerate"] = h.degenerate;
  if (o.exact) {
    if (graph.vertex_count() <= kDefaultColoringCap) {
      j["chi_exact"] = exact_chromatic_number(graph);
    } else {
      j["chi_exact"] = nullptr;
      err << "lattice: --exact skipped, n = " << graph.vertex_count() << " exceeds "
          << kDefaultColoringCap << "\n";
    }
  }

  std::vector<std::string> outputs;
  if (edges) {
    write_edge_list(edges->stream(), graph);
    edges->finish();
    outputs.push_back(edges->is_file() ? o.out : "stdout");
  }
  sink.stream() << j.dump(2) << "\n";
  sink.finish();
  outputs.push_back(sink.is_file() ? o.summary_out : "stdout");

  ParamMap p{{"kind", o.kind},
             {"radius_sq", std::to_string(o.radius_sq)},
             {"alpha", o.decay ? format_double(*o.decay) : "unit"},
             {"exact", o.exact ? "true" : "false"},
             {"vertex_cap", std::to_string(o.vertex_cap)}};
  finish_record(o.common, "lattice", p, outputs,
                {{"n", std::to_string(graph.vertex_count())},
                 {"m", std::to_string(graph.edges.size())},
                 {"hoffman_bound", format_double(h.bound)}});
  return kExitOk;
}

// ---- verify

struct VerifyOpts {
  Common common;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::string report = "-";
  int jobs = 1;
};

void add_verify(CLI::App& app, VerifyOpts& o) {
  auto* sub = app.add_subcommand("verify", "Run numerical verification suites");
  std::string names = "all";
  for (const auto& n : suite_names()) names += ", " + n;
  sub->add_option("--suite", o.suite, "Comma-separated suites: " + names)->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
  sub->add_option("--report", o.report, "JSON report path, - for stdout")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads across checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(*sub, o.common);
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const auto suites = split_list(o.suite);
  Output sink(o.report, out);
  const json report = run_verify_suites(suites, o.seed, o.jobs);
  sink.stream() << report.dump(2) << "\n";
  sink.finish();
  const bool passed = report["passed"].get<bool>();
  const auto total = report["checks_total"].get<std::size_t>();
  const auto failed = report["checks_failed"].get<std::size_t>();
  if (sink.is_file()) out << "verify: " << total << " checks, " << failed << " failed\n";

  ParamMap p{{"suite", join(suites)}, {"seed", std::to_string(o.seed)}};
  finish_record(o.common, "verify", p, {sink.is_file() ? o.report : "stdout"},
                {{"checks", std::to_string(total)},
                 {"failed", std::to_string(failed)},
                 {"passed", passed ? "true" : "false"}});
  return passed ? kExitOk : kExitFailure;
}

// ---- config file

// Pulls --config out of the arguments (falling back to the environment) and
// inserts the file's key=value items as flags right after the subcommand
// name, so explicit flags, which come later, take precedence.
std::vector<std::string> apply_config(std::vector<std::string> args, CLI::App& app,
                                      std::ostream& err) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw DomainError("--config needs a path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (!path) {
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') path = env;
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw IoError("cannot read config file '" + *path + "'");
  const auto items = CLI::ConfigINI().from_config(in);

  auto pos = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return app.get_subcommand_no_throw(a) != nullptr;
  });
  if (pos == args.end()) return args;
  CLI::App* sub = app.get_subcommand(*pos);

  std::vector<std::string> injected;
  for (const auto& item : items) {
    if (item.name.empty() || item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() &&
        !(item.parents.size() == 1 && item.parents.front() == sub->get_name())) {
      continue;
    }
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      err << "config: ignoring '" << item.name << "' (not an option of " << sub->get_name() << ")\n";
      continue;
    }
    if (opt->get_expected_min() == 0) {
      injected.push_back("--" + key + "=" + (item.inputs.empty() ? "true" : item.inputs.front()));
    } else {
      injected.push_back("--" + key);
      injected.push_back(join(item.inputs));
    }
  }
  args.insert(pos + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral bounds for the odd-distance graph of the plane", "oddchi"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_help;
  app.add_option("--config", config_help,
                 std::string("key=value file, keys are long flag names; default $") + kConfigEnv);

  CurveOpts curve;
  BoundOpts bound;
  SweepOpts sweep;
  LatticeOpts lattice;
  VerifyOpts verify;
  add_curve(app, curve);
  add_bound(app, bound);
  add_sweep(app, sweep);
  add_lattice(app, lattice);
  add_verify(app, verify);

  try {
    auto argv = apply_config(args, app, err);
    std::reverse(argv.begin(), argv.end());
    try {
      app.parse(argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitFailure;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "lambda-curve") return cmd_lambda_curve(curve, out, err);
    if (name == "bound") return cmd_bound(bound, out);
    if (name == "sweep") return cmd_sweep(sweep, out, err);
    if (name == "lattice") return cmd_lattice(lattice, out, err);
    return cmd_verify(verify, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace oddchi::cli
