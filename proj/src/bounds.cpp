#include "acq/bounds.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

#include <json.hpp>

namespace acq::bounds {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw BoundsError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t Rational::ceil() const {
  // Floor division for negative numerators.
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

Rational trivial_lower(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw ZeroEdges();
  const auto pairs = static_cast<std::int64_t>(n * (n - 1) / 2);
  const auto edges = static_cast<std::int64_t>(m);
  return Rational::of(pairs - edges, edges);
}

double log_one_over_q(double n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DegenerateP();
  return std::log(n) / -std::log1p(-p);
}

double gnp_lower_threshold(double n, double p, double eps) {
  return eps / 2.0 * log_one_over_q(n, p);
}

double team_k(double n, double p) { return 2.5 * log_one_over_q(n, p); }

ExposureSplit exposure_split(double n, double p, double eps) {
  if (!(p > 0.0 && p < 1.0)) throw DegenerateP();
  const double ln_n = std::log(n);
  if (p < (1.0 + eps) * ln_n / n) throw PBelowThreshold();
  ExposureSplit s;
  s.p1 = (1.0 + eps / 2.0) * ln_n / n;
  s.p2 = (p - s.p1) / (1.0 - s.p1);
  return s;
}

std::pair<double, double> reference_uppers(double n) {
  const double lg = std::log2(n);
  return {n * n / lg, n * n / (lg / std::log2(lg))};
}

Report evaluate(std::uint64_t n, double p, double eps, std::optional<std::uint64_t> edges) {
  Report r;
  r.n = n;
  r.p = p;
  r.eps = eps;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  r.edges = edges ? *edges : static_cast<std::uint64_t>(std::llround(p * pairs));
  if (r.edges > 0) r.trivial_lower = trivial_lower(n, r.edges);
  const double nn = static_cast<double>(n);
  const double base = log_one_over_q(nn, p);
  r.k_lower = eps / 2.0 * base;
  r.team_k = 2.5 * base;
  try {
    r.split = exposure_split(nn, p, eps);
  } catch (const PBelowThreshold&) {
  }
  if (n >= 4) std::tie(r.reference_upper_n2_logn, r.reference_upper_bst) = reference_uppers(nn);
  return r;
}

void write_report_json(std::ostream& out, const Report& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["eps"] = r.eps;
  j["edges"] = r.edges;
  if (r.trivial_lower) {
    j["trivial_lower"] = {{"num", r.trivial_lower->num},
                          {"den", r.trivial_lower->den},
                          {"value", r.trivial_lower->value()}};
  } else {
    j["trivial_lower"] = nullptr;
  }
  j["k_lower"] = r.k_lower;
  j["team_k"] = r.team_k;
  j["p1"] = r.split ? nlohmann::ordered_json(r.split->p1) : nlohmann::ordered_json(nullptr);
  j["p2"] = r.split ? nlohmann::ordered_json(r.split->p2) : nlohmann::ordered_json(nullptr);
  j["reference_upper_n2_logn"] = r.reference_upper_n2_logn;
  j["reference_upper_bst"] = r.reference_upper_bst;
  out << j.dump(2) << '\n';
}

}  // namespace acq::bounds
