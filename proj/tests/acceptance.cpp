// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "oddchi/bound.hpp"
#include "oddchi/cli.hpp"
#include "oddchi/coloring.hpp"
#include "oddchi/format.hpp"
#include "oddchi/lattice_graph.hpp"
#include "oddchi/spectrum.hpp"
#include "oddchi/verify.hpp"

using namespace oddchi;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int hardware_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

const std::vector<double> kGridAlphas = {1.05, 1.2, 1.5, 2.0};
const std::vector<double> kSmallAlphas = {1.01, 1.001, 1.0001};
const std::vector<double> kRadii = {5.0, 10.0, 20.0, 50.0};

struct GridPoint {
  double alpha, r, closed, bessel, complex_re, complex_im;
};

// Shared by criteria 2 to 4.
const std::vector<GridPoint>& estimator_grid() {
  static const std::vector<GridPoint> grid = [] {
    std::vector<GridPoint> g;
    const quad::QuadratureConfig q;
    for (double a : kGridAlphas) {
      for (int i = 0; i <= 40; ++i) {
        const RadialFrequency r(0.5 * i);
        const auto z = lambda_complex_form(r, Alpha(a), q);
        g.push_back({a, r.value(), lambda_closed_form(r, Alpha(a), q).lambda,
                     lambda_bessel_series(r, Alpha(a), 1e-10).lambda, z.real, z.imag});
      }
    }
    return g;
  }();
  return grid;
}

Outcome anchor() {
  double worst = 0.0;
  const quad::QuadratureConfig q;
  for (double a : {1.1, 1.5, 2.0}) {
    const Alpha alpha(a);
    const double exact = 2 * kPi * a / (a - 1);
    const RadialFrequency zero(0.0);
    for (double v : {lambda_closed_form(zero, alpha, q).lambda,
                     lambda_bessel_series(zero, alpha, 1e-11).lambda,
                     lambda_complex_form(zero, alpha, q).real}) {
      worst = std::max(worst, std::abs(v - exact) / exact);
    }
  }
  return {worst <= 1e-10, "max relative error " + fmt(worst)};
}

Outcome cross_method() {
  double worst = 0.0;
  for (const auto& p : estimator_grid()) {
    const double s = 1 + std::abs(p.closed);
    worst = std::max({worst, std::abs(p.closed - p.bessel) / s, std::abs(p.closed - p.complex_re) / s,
                      std::abs(p.bessel - p.complex_re) / s});
  }
  return {worst <= 1e-6, "max disagreement / (1+|lambda|) = " + fmt(worst) + " over " +
                             std::to_string(estimator_grid().size()) + " points"};
}

Outcome positivity() {
  double lowest = std::numeric_limits<double>::infinity();
  int count = 0;
  for (const auto& p : estimator_grid()) {
    if (p.r > kPi / 2) continue;
    ++count;
    lowest = std::min({lowest, p.closed, p.bessel, p.complex_re});
  }
  return {count > 0 && lowest > 0.0,
          "min lambda over " + std::to_string(count) + " points with r <= pi/2: " + fmt(lowest)};
}

Outcome realness() {
  double worst = 0.0;
  for (const auto& p : estimator_grid()) worst = std::max(worst, std::abs(p.complex_im));
  return {worst <= 1e-8, "max |Im| = " + fmt(worst)};
}

// Shared by criteria 5 and 6.
const std::vector<SweepEntry>& decade_sweep() {
  static const std::vector<SweepEntry> entries = [] {
    const auto alphas = decade_alphas(1, 4);
    return sweep_alpha(alphas, ScanConfig{}, hardware_jobs());
  }();
  return entries;
}

std::vector<SpectralSummary> decade_summaries() {
  std::vector<SpectralSummary> out;
  for (const auto& e : decade_sweep()) {
    if (!e.summary) throw std::runtime_error("alpha " + format_double(e.alpha) + ": " + e.status);
    out.push_back(*e.summary);
  }
  return out;
}

Outcome divergence() {
  const auto s = decade_summaries();
  bool increasing = true;
  std::string chis;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && !(s[i].chi_lower_bound > s[i - 1].chi_lower_bound)) increasing = false;
    chis += (i ? ", " : "") + fmt(s[i].chi_lower_bound);
  }
  const double ratio = s.back().chi_lower_bound / s.front().chi_lower_bound;
  return {increasing && ratio >= 2.0,
          "chi = [" + chis + "], chi(1.0001)/chi(1.1) = " + fmt(ratio)};
}

Outcome scaling() {
  const auto s = decade_summaries();
  const auto fit = fit_scaling_exponent(s);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& v : s) {
    const double scaled = std::abs(v.lambda_min) * std::pow(v.alpha - 1, 0.75);
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  const double spread = hi / lo;
  return {fit.beta <= 0.85 && spread <= 20.0,
          "beta = " + fmt(fit.beta) + " (r^2 " + fmt(fit.r_squared) +
              "), |lambda_min| (alpha-1)^{3/4} spread " + fmt(spread) + "x"};
}

Outcome inequality() {
  int failed = 0;
  double margin = std::numeric_limits<double>::infinity();
  for (double a : kSmallAlphas) {
    for (double r : kRadii) {
      const auto c = check_inequality_12(Alpha(a), r, quad::QuadratureConfig{});
      if (!(c.holds && c.converged)) ++failed;
      margin = std::min(margin, c.lhs - c.rhs);
    }
  }
  return {failed == 0, std::to_string(12 - failed) + "/12 hold, smallest lhs - rhs " + fmt(margin)};
}

Outcome lemma1() {
  const quad::QuadratureConfig q;
  double worst = 0.0;
  for (double R : {0.1, 0.25, 0.4}) {
    for (double a : {1.2, 1.5}) {
      worst = std::max(worst, std::abs(verify::independent_disk_form(R, Alpha(a), 500.0, q).value));
    }
  }
  const double big = verify::independent_disk_form(2.0, Alpha(1.5), 500.0, q).value;
  return {worst <= 1e-3 && std::abs(big) > 1e-2,
          "max |form| on independent disks " + fmt(worst) + ", R = 2 form " + fmt(big)};
}

Outcome rayleigh() {
  std::vector<double> v;
  for (std::int64_t k : {10, 100, 1000, 10000}) v.push_back(verify::disk_rayleigh_direct_sum({k, Alpha(1.1)}));
  const bool monotone = std::is_sorted(v.begin(), v.end());
  return {monotone && v.back() >= 0.99, "k = 10..10^4: " + fmt(v[0]) + ", " + fmt(v[1]) + ", " +
                                            fmt(v[2]) + ", " + fmt(v[3])};
}

Outcome cosine_gap() {
  const auto s = verify::sample_cosine_gap(10000, 20240601);
  return {s.samples == 10000 && s.failures == 0,
          std::to_string(s.failures) + " failures in " + std::to_string(s.samples) +
              ", worst margin " + fmt(s.worst_margin)};
}

Outcome region() {
  int failed = 0;
  double worst_ratio = 0.0;
  for (double a : kSmallAlphas) {
    for (double r : kRadii) {
      const auto res = verify::region_measure_check({Alpha(a), r}, 1'000'000);
      if (!res.holds) ++failed;
      worst_ratio = std::max(worst_ratio, res.measured / res.bound);
    }
  }
  return {failed == 0, std::to_string(12 - failed) + "/12 hold, max measured/bound " + fmt(worst_ratio)};
}

Outcome hoffman_soundness() {
  std::string detail;
  bool ok = true;
  for (std::int64_t rsq : {1, 3, 4, 9}) {
    const auto pts = generate_lattice_points({LatticeKind::Triangular, rsq});
    const auto g = build_odd_graph(pts, LatticeKind::Triangular);
    const auto h = hoffman_bound(g);
    const int chi = exact_chromatic_number(g);
    const bool sound = pts.size() <= 40 && std::ceil(h.bound - 1e-9) <= chi;
    ok = ok && sound;
    detail += "Q<=" + std::to_string(rsq) + ": n " + std::to_string(pts.size()) + " hoffman " +
              fmt(h.bound) + " chi " + std::to_string(chi) + "; ";
  }
  // K2, K3, C5.
  const std::vector<std::tuple<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>, int>> fixtures = {
      {2, {{0, 1}}, 2},
      {3, {{0, 1}, {1, 2}, {0, 2}}, 3},
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, 3}};
  for (const auto& [n, edges, expected] : fixtures) {
    const auto g = SimpleGraph::from_edges(n, edges);
    SymmetricMatrix m(n);
    for (const auto& [u, v] : edges) m.set_pair(u, v, 1.0);
    const int chi = exact_chromatic_number(g);
    ok = ok && chi == expected && std::ceil(hoffman_bound(m).bound - 1e-9) <= chi;
  }
  return {ok, detail + "K2/K3/C5 exact values 2/3/3"};
}

Outcome rotation() {
  bool ok = true;
  std::string detail;
  for (std::int64_t rsq : {1, 4, 9}) {
    const auto pts = generate_lattice_points({LatticeKind::Triangular, rsq});
    const auto g = build_odd_graph(pts, LatticeKind::Triangular);
    std::set<std::tuple<LatticePoint, LatticePoint, std::int64_t>> original, rotated;
    for (const auto& e : g.edges) {
      const auto& p = g.vertices[e.u];
      const auto& q = g.vertices[e.v];
      original.insert({std::min(p, q), std::max(p, q), e.length});
      const auto rp = rotate60(p), rq = rotate60(q);
      rotated.insert({std::min(rp, rq), std::max(rp, rq), e.length});
    }
    const bool same = original == rotated && original.size() == g.edges.size();
    ok = ok && same;
    detail += "Q<=" + std::to_string(rsq) + ": " + std::to_string(g.edges.size()) + " edges " +
              (same ? "invariant" : "CHANGED") + (rsq == 9 ? "" : "; ");
  }
  return {ok, detail};
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  bool ok = true;
  std::string detail;
  for (const std::string alpha : {"1.5", "1.01"}) {
    int c1 = 0, c2 = 0, c3 = 0;
    const auto a = cli_output({"bound", "--alpha", alpha, "--jobs", "1"}, c1);
    const auto b = cli_output({"bound", "--alpha", alpha, "--jobs", "1"}, c2);
    const auto c = cli_output({"bound", "--alpha", alpha, "--jobs", "4"}, c3);
    const bool same = c1 == 0 && c2 == 0 && c3 == 0 && a == b && a == c && !a.empty();
    ok = ok && same;
    detail += "bound " + alpha + (same ? " identical; " : " DIFFERS; ");
  }
  int c1 = 0, c2 = 0, c3 = 0;
  const auto a = cli_output({"verify", "--suite", "all", "--seed", "11", "--jobs", "1"}, c1);
  const auto b = cli_output({"verify", "--suite", "all", "--seed", "11", "--jobs", "1"}, c2);
  const auto c = cli_output({"verify", "--suite", "all", "--seed", "11", "--jobs", "4"}, c3);
  const bool same = a == b && a == c && !a.empty();
  ok = ok && same;
  detail += std::string("verify all ") + (same ? "identical" : "DIFFERS") + " (exit codes " +
            std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3) + ")";
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form anchor lambda(0) = 2 pi alpha/(alpha-1)", anchor},
      {"cross-method agreement", cross_method},
      {"positivity for r <= pi/2", positivity},
      {"realness of the complex form", realness},
      {"divergence witness over alpha = 1 + 10^-m", divergence},
      {"scaling exponent consistency", scaling},
      {"central inequality", inequality},
      {"spectral vanishing on independent disks", lemma1},
      {"disk Rayleigh limit", rayleigh},
      {"cosine-gap lemma", cosine_gap},
      {"region-measure bound", region},
      {"Hoffman soundness on lattice patches", hoffman_soundness},
      {"exact adjacency under 60 degree rotation", rotation},
      {"determinism of bound and verify", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
