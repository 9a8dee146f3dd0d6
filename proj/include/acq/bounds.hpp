#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>

namespace acq::bounds {

class BoundsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
struct ZeroEdges : BoundsError {
  ZeroEdges() : BoundsError("bound needs at least one edge") {}
};
struct DegenerateP : BoundsError {
  DegenerateP() : BoundsError("p must lie strictly between 0 and 1") {}
};
struct PBelowThreshold : BoundsError {
  PBelowThreshold() : BoundsError("p is below (1+eps) ln n / n") {}
};

/// Exact non-negative-denominator fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Smallest integer >= the value.
  std::int64_t ceil() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// C(n,2)/m - 1: no schedule on an m-edge graph finishes sooner, since each
/// round can acquaint at most m new pairs.
Rational trivial_lower(std::uint64_t n, std::uint64_t m);

/// log base 1/(1-p) of n, i.e. ln n / -ln(1-p).
double log_one_over_q(double n, double p);

/// (eps/2) * log_{1/(1-p)} n, the dense-regime lower bound on the helicopter time.
double gnp_lower_threshold(double n, double p, double eps);

/// 2.5 * log_{1/(1-p)} n, the team size of the upper-bound strategy.
double team_k(double n, double p);

struct ExposureSplit {
  double p1 = 0;
  double p2 = 0;
};
/// p1 = (1+eps/2) ln n / n and p2 = (p-p1)/(1-p1), so that
/// p = p1 + p2 - p1 p2. Requires p >= (1+eps) ln n / n.
ExposureSplit exposure_split(double n, double p, double eps);

/// n^2/log2 n and n^2/(log2 n / log2 log2 n).
std::pair<double, double> reference_uppers(double n);

struct Report {
  std::uint64_t n = 0;
  double p = 0;
  double eps = 0;
  std::uint64_t edges = 0;  // edge count used for trivial_lower
  std::optional<Rational> trivial_lower;
  double k_lower = 0;
  double team_k = 0;
  std::optional<ExposureSplit> split;
  double reference_upper_n2_logn = 0;
  double reference_upper_bst = 0;
};

/// Evaluates every formula for (n, p, eps). edges defaults to the expected
/// edge count round(p * C(n,2)).
Report evaluate(std::uint64_t n, double p, double eps, std::optional<std::uint64_t> edges = {});
void write_report_json(std::ostream& out, const Report& r);

}  // namespace acq::bounds
