#include "oddchi/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "oddchi/bound.hpp"
#include "oddchi/errors.hpp"
#include "oddchi/format.hpp"
#include "oddchi/parallel.hpp"
#include "oddchi/spectrum.hpp"
#include "oddchi/verify.hpp"

namespace oddchi::cli {

namespace {

using json = nlohmann::ordered_json;
using Thunk = std::function<json()>;

constexpr double kPi = std::numbers::pi;

struct PendingCheck {
  std::string suite;
  Thunk run;
};

json check(std::string name, bool passed) {
  json j;
  j["name"] = std::move(name);
  j["passed"] = passed;
  return j;
}

void lemma1_checks(std::vector<PendingCheck>& out) {
  constexpr double kCutoff = 500.0;
  for (double R : {0.1, 0.25, 0.4}) {
    for (double a : {1.2, 1.5}) {
      out.push_back({"lemma1", [R, a] {
                       const auto res =
                           verify::independent_disk_form(R, Alpha(a), kCutoff, quad::QuadratureConfig{});
                       json j = check("independent_disk_R" + format_double(R) + "_alpha" + format_double(a),
                                      std::abs(res.value) <= 1e-3 && res.converged);
                       j["R"] = R;
                       j["alpha"] = a;
                       j["value"] = res.value;
                       j["limit"] = 1e-3;
                       j["converged"] = res.converged;
                       return j;
                     }});
    }
  }
  out.push_back({"lemma1", [] {
                   const auto res =
                       verify::independent_disk_form(2.0, Alpha(1.5), kCutoff, quad::QuadratureConfig{});
                   json j = check("non_independent_disk_R2_alpha1.5", std::abs(res.value) > 1e-2);
                   j["R"] = 2.0;
                   j["alpha"] = 1.5;
                   j["value"] = res.value;
                   j["min_magnitude"] = 1e-2;
                   return j;
                 }});
}

void rayleigh_checks(std::vector<PendingCheck>& out) {
  out.push_back({"rayleigh", [] {
                   const double v = verify::disk_rayleigh_direct_sum({1, Alpha(2.0)});
                   json j = check("direct_sum_k1_alpha2", std::abs(v - 2.0 / 9.0) <= 1e-14);
                   j["value"] = v;
                   j["expected"] = 2.0 / 9.0;
                   return j;
                 }});
  out.push_back({"rayleigh", [] {
                   const double v = verify::disk_rayleigh_no_decay_limit(10);
                   json j = check("no_decay_limit_k10", std::abs(v - 400.0 / 441.0) <= 1e-14);
                   j["value"] = v;
                   j["expected"] = 400.0 / 441.0;
                   return j;
                 }});
  out.push_back({"rayleigh", [] {
                   std::vector<double> values;
                   for (std::int64_t k : {10, 100, 1000, 10000}) {
                     values.push_back(verify::disk_rayleigh_direct_sum({k, Alpha(1.1)}));
                   }
                   const bool monotone = std::is_sorted(values.begin(), values.end());
                   json j = check("limit_alpha1.1", monotone && values.back() >= 0.99);
                   j["k"] = {10, 100, 1000, 10000};
                   j["values"] = values;
                   j["nondecreasing"] = monotone;
                   j["min_final"] = 0.99;
                   return j;
                 }});
  // The printed sum and printed closed form disagree at k = 1; both values
  // are reported and checked against hand substitution.
  out.push_back({"rayleigh", [] {
                   const double closed = verify::disk_rayleigh_printed_closed_form(1, 1.5);
                   const double printed = verify::disk_rayleigh_printed_sum(1, 1.5);
                   json j = check("printed_forms_k1_alpha1.5",
                                  std::abs(closed + 2.0 / 9.0) <= 1e-12 &&
                                      std::abs(printed + 5.0 / 9.0) <= 1e-12);
                   j["closed_form"] = closed;
                   j["printed_sum"] = printed;
                   j["decay_sum"] = verify::disk_rayleigh_direct_sum({1, Alpha(1.5)});
                   return j;
                 }});
}

void cosine_gap_checks(std::vector<PendingCheck>& out, std::uint64_t seed) {
  out.push_back({"cosine-gap", [] {
                   const auto g = verify::cosine_gap(0.0, kPi / 2);
                   json j = check("extremal_theta0", g.holds && std::abs(g.gap - g.bound) <= 1e-12);
                   j["gap"] = g.gap;
                   j["bound"] = g.bound;
                   return j;
                 }});
  out.push_back({"cosine-gap", [] {
                   const auto g = verify::cosine_gap(kPi / 4, kPi / 4);
                   json j = check("quarter_pi", g.holds);
                   j["gap"] = g.gap;
                   j["bound"] = g.bound;
                   return j;
                 }});
  out.push_back({"cosine-gap", [seed] {
                   const auto s = verify::sample_cosine_gap(10000, seed);
                   json j = check("random_samples", s.failures == 0);
                   j["seed"] = seed;
                   j["samples"] = s.samples;
                   j["failures"] = s.failures;
                   j["worst_margin"] = s.worst_margin;
                   return j;
                 }});
}

const std::vector<double> kSmallAlphas = {1.01, 1.001, 1.0001};
const std::vector<double> kRadii = {5.0, 10.0, 20.0, 50.0};

void region_checks(std::vector<PendingCheck>& out) {
  for (double a : kSmallAlphas) {
    for (double r : kRadii) {
      out.push_back({"region", [a, r] {
                       const auto res = verify::region_measure_check({Alpha(a), r}, 1'000'000);
                       json j = check("alpha" + format_double(a) + "_r" + format_double(r), res.holds);
                       j["alpha"] = a;
                       j["r"] = r;
                       j["measured"] = res.measured;
                       j["bound"] = res.bound;
                       j["spike_index"] = res.spike_index;
                       return j;
                     }});
    }
  }
}

void inequality_checks(std::vector<PendingCheck>& out) {
  for (double a : kSmallAlphas) {
    for (double r : kRadii) {
      out.push_back({"inequality12", [a, r] {
                       const auto res = check_inequality_12(Alpha(a), r, quad::QuadratureConfig{});
                       json j = check("alpha" + format_double(a) + "_r" + format_double(r),
                                      res.holds && res.converged);
                       j["alpha"] = a;
                       j["r"] = r;
                       j["lhs"] = res.lhs;
                       j["rhs"] = res.rhs;
                       j["converged"] = res.converged;
                       return j;
                     }});
    }
  }
}

void cross_method_checks(std::vector<PendingCheck>& out) {
  const quad::QuadratureConfig qcfg;
  constexpr double kSeriesTol = 1e-10;
  for (double a : {1.1, 1.5, 2.0}) {
    out.push_back({"cross-method", [a, qcfg] {
                     const Alpha alpha(a);
                     const double exact = lambda_at_zero(alpha);
                     const RadialFrequency zero(0.0);
                     const double vals[3] = {lambda_closed_form(zero, alpha, qcfg).lambda,
                                             lambda_bessel_series(zero, alpha, kSeriesTol).lambda,
                                             lambda_complex_form(zero, alpha, qcfg).real};
                     double worst = 0.0;
                     for (double v : vals) worst = std::max(worst, std::abs(v - exact) / exact);
                     json j = check("anchor_alpha" + format_double(a), worst <= 1e-10);
                     j["alpha"] = a;
                     j["lambda_0"] = exact;
                     j["max_relative_error"] = worst;
                     return j;
                   }});
  }
  for (double a : {1.05, 1.2, 1.5, 2.0}) {
    out.push_back({"cross-method", [a, qcfg] {
                     const Alpha alpha(a);
                     double disagreement = 0.0;
                     double imag = 0.0;
                     double min_low = std::numeric_limits<double>::infinity();
                     bool converged = true;
                     for (int i = 0; i <= 40; ++i) {
                       const RadialFrequency r(0.5 * i);
                       const auto c = lambda_closed_form(r, alpha, qcfg);
                       const auto b = lambda_bessel_series(r, alpha, kSeriesTol);
                       const auto z = lambda_complex_form(r, alpha, qcfg);
                       converged = converged && c.converged && z.converged;
                       const double scale = 1.0 + std::abs(c.lambda);
                       disagreement = std::max({disagreement, std::abs(c.lambda - b.lambda) / scale,
                                                std::abs(c.lambda - z.real) / scale,
                                                std::abs(b.lambda - z.real) / scale});
                       imag = std::max(imag, std::abs(z.imag));
                       if (r.value() <= kPi / 2) min_low = std::min({min_low, c.lambda, b.lambda, z.real});
                     }
                     json j = check("grid_alpha" + format_double(a),
                                    converged && disagreement <= 1e-6 && imag <= 1e-8 && min_low > 0.0);
                     j["alpha"] = a;
                     j["r_values"] = "0:0.5:20";
                     j["max_scaled_disagreement"] = disagreement;
                     j["max_abs_imag"] = imag;
                     j["min_lambda_r_le_half_pi"] = min_low;
                     j["converged"] = converged;
                     return j;
                   }});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma1", "rayleigh",     "cosine-gap",
                                                 "region", "inequality12", "cross-method"};
  return names;
}

json run_verify_suites(const std::vector<std::string>& suites, std::uint64_t seed, int jobs) {
  std::vector<std::string> selected;
  for (const auto& s : suites) {
    if (s == "all") {
      selected = suite_names();
      break;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw DomainError("unknown verification suite '" + s + "'");
    }
    if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
  }
  if (selected.empty()) throw DomainError("no verification suite selected");

  std::vector<PendingCheck> pending;
  for (const auto& s : selected) {
    if (s == "lemma1") lemma1_checks(pending);
    if (s == "rayleigh") rayleigh_checks(pending);
    if (s == "cosine-gap") cosine_gap_checks(pending, seed);
    if (s == "region") region_checks(pending);
    if (s == "inequality12") inequality_checks(pending);
    if (s == "cross-method") cross_method_checks(pending);
  }

  std::vector<json> results(pending.size());
  parallel_for_index(pending.size(), jobs, [&](std::size_t i) {
    try {
      results[i] = pending[i].run();
    } catch (const std::exception& ex) {
      json j = check("check_" + std::to_string(i), false);
      j["error"] = ex.what();
      results[i] = j;
    }
  });

  json report;
  report["seed"] = seed;
  json suite_list = json::array();
  std::size_t failed = 0;
  for (const auto& s : selected) {
    json entry;
    entry["name"] = s;
    json checks = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].suite != s) continue;
      const bool passed = results[i]["passed"].get<bool>();
      ok = ok && passed;
      if (!passed) ++failed;
      checks.push_back(results[i]);
    }
    entry["passed"] = ok;
    entry["checks"] = std::move(checks);
    suite_list.push_back(std::move(entry));
  }
  report["checks_total"] = pending.size();
  report["checks_failed"] = failed;
  report["passed"] = failed == 0;
  report["suites"] = std::move(suite_list);
  return report;
}

}  // namespace oddchi::cli
