#pragma once

// Real-valued constants and bound coefficients for T(k+1, k, n).
//
//   c0(k)  = integral over [1, ln k] of (1 - e^-x)^k
//   c1(k)  = sum_{i=1..k} (-1)^(i-1) C(k,i) k^-i / i
//   tau(k) = ln k - 1 + c1(k) - c0(k)
//
// The constructive bound is T(k+1, k, n) <= (1 + tau(k)) / (k - 1) * C(n, k).
// Logarithms are natural throughout.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "turan/exact_count.hpp"

namespace turan {

enum class QuadratureRule {
  /// Adaptive Simpson to an absolute tolerance.
  adaptive_simpson,
  /// Left-endpoint Riemann sum on a fixed grid starting at the lower limit.
  /// With the default step this is the rule behind the published c0 table.
  left_riemann,
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_depth = 60;
  QuadratureRule rule = QuadratureRule::adaptive_simpson;
  double riemann_step = 1e-4;

  /// Throws std::invalid_argument on non-positive tolerance, depth or step.
  void validate() const;
};

/// The fixed-grid rule that reproduces the published c0 values digit for digit.
QuadratureConfig tabulation_quadrature();

/// Integral of f over [a, b]; zero when b <= a. Throws QuadratureError when
/// adaptive refinement exceeds max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

double c0(int k, const QuadratureConfig& cfg = {});
double c1(int k);
double tau_integral(double t, const QuadratureConfig& cfg = {});
double tau_closed(int k, const QuadratureConfig& cfg = {});
double tau1(double t, const QuadratureConfig& cfg = {});

struct BoundValue {
  double coefficient = 0.0;  // multiple of C(n, k)
  double absolute = 0.0;
};

struct TheoremBound : BoundValue {
  /// Set when the coefficient is above the trivial bound 1 (happens at k = 2).
  bool exceeds_trivial = false;
};

/// (ln k + c1(k) - c0(k)) / (k - 1) times C(n, k). Not capped at 1.
TheoremBound bound_theorem1(int n, int k, const QuadratureConfig& cfg = {});

/// C(n, k) / C(r, k).
BoundValue bound_lower(int n, int k, int r);

struct PartitionBound {
  int parts = 0;
  double total = 0.0;                   // sum of C(|S_i|, k)
  double coefficient = 0.0;             // total / C(n, k)
  double simplified_coefficient = 0.0;  // 1 / parts^(k-1)
};

PartitionBound bound_partition(int n, int k, int r);

/// (1 / ceil(k / (2 ln k)) + 1 / (2 k ln k)) * C(n, k), as printed.
BoundValue bound_kim_roush(int n, int k);

/// (1 / ceil(k / ln k)) * ln k / (ln k - 1) * C(n, k), as printed.
/// Throws DomainError for k <= 2.
BoundValue bound_frankl_rodl(int n, int k);

/// Slack allowed when comparing quadrature results against bounds.
inline constexpr double kInequalitySlack = 1e-8;

struct Lemma4Row {
  int t = 0;
  double tau_integral = 0.0;
  double tau_bound = 0.0;  // ln t - 1 + c1(t) - c0(t)
  double tau1 = 0.0;
  double tau1_bound = 0.0;  // (1 + tau_integral) / t
  bool tau_holds = false;
  bool tau1_holds = false;

  bool holds() const { return tau_holds && tau1_holds; }
};

/// Evaluates tau(t) <= tau_closed(t) and tau1(t) <= (1 + tau(t)) / t.
/// Each t must be >= 2.
std::vector<Lemma4Row> check_lemma4(std::span<const int> t_values,
                                    const QuadratureConfig& cfg = {});

struct Lemma6Check {
  Rational lhs_exact;  // weighted_gap_sum / C(n, k)
  double lhs = 0.0;
  double rhs = 0.0;  // n / (k - 1) * (1 + tau(k))
  bool holds = false;
};

/// Requires k >= 3 and n > k.
Lemma6Check check_lemma6(int n, int k, const QuadratureConfig& cfg = {});

struct Lemma5Diagnostic {
  CountValue lhs_exact;  // sum of mu(s, k, h) for ceil(s/k) <= h < n - k
  double lhs = 0.0;
  double rhs = 0.0;  // (n - k - n/(k-1) * (1 + tau(k))) * C(n, k)
  double gap = 0.0;  // lhs - rhs
  /// n <= 3k: too small for the large-n regime the inequality targets.
  bool outside_regime = false;
};

/// Reports both sides; asserts nothing. Requires k >= 3 and n >= 3k.
Lemma5Diagnostic check_lemma5_diagnostic(int n, int k, const QuadratureConfig& cfg = {});

/// Per-k comparison of the bound coefficients (all relative to C(n, k)).
struct BoundRow {
  int k = 0;
  double c0 = 0.0;
  double c1 = 0.0;
  double tau_closed = 0.0;
  double tau_integral = 0.0;
  double bound_16 = 0.0;  // constructive bound
  bool bound_16_exceeds_trivial = false;
  double bound_11 = 0.0;  // counting lower bound, r = k + 1
  double bound_12 = 0.0;  // block partition, r = k + 1
  double bound_12_simplified = 0.0;
  double bound_14 = 0.0;  // Kim-Roush
  std::optional<double> bound_15;  // Frankl-Rodl; empty for k = 2
};

BoundRow bound_row(int n, int k, const QuadratureConfig& cfg = {});

}  // namespace turan
