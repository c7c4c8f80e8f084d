#include "turan/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "turan/cyclic.hpp"
#include "turan/errors.hpp"

namespace turan {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("quadrature abs_tol must be > 0");
  if (max_depth < 1) throw std::invalid_argument("quadrature max_depth must be >= 1");
  if (!(riemann_step > 0.0)) throw std::invalid_argument("riemann_step must be > 0");
}

QuadratureConfig tabulation_quadrature() {
  QuadratureConfig cfg;
  cfg.rule = QuadratureRule::left_riemann;
  cfg.riemann_step = 1e-4;
  return cfg;
}

namespace {

constexpr int kMinSimpsonDepth = 3;

struct SimpsonPanel {
  double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, const SimpsonPanel& p, double eps,
                int depth, int remaining) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, m, p.fa, flm, p.fm);
  const double right = simpson(m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth >= kMinSimpsonDepth && std::fabs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  if (remaining == 0) {
    throw QuadratureError("adaptive Simpson did not reach tolerance on [" +
                          std::to_string(p.a) + ", " + std::to_string(p.b) + "]");
  }
  return adaptive(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * eps, depth + 1, remaining - 1) +
         adaptive(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * eps, depth + 1, remaining - 1);
}

double left_riemann(const std::function<double(double)>& f, double a, double b, double step) {
  const auto steps = static_cast<long long>(std::ceil((b - a) / step));
  double sum = 0.0;
  for (long long i = 0; i < steps; ++i) sum += f(a + static_cast<double>(i) * step);
  return sum * step;
}

double one_minus_exp_pow(double x, double power) {
  return std::pow(-std::expm1(-x), power);
}

double choose_real(int n, int k) { return binomial(n, k).convert_to<double>(); }

void require_k_at_least(int k, int minimum, const char* what) {
  if (k < minimum) {
    throw std::invalid_argument(std::string(what) + " needs k >= " + std::to_string(minimum) +
                                " (got " + std::to_string(k) + ")");
  }
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(b > a)) return 0.0;
  if (cfg.rule == QuadratureRule::left_riemann) return left_riemann(f, a, b, cfg.riemann_step);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return adaptive(f, {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, cfg.abs_tol, 0,
                  cfg.max_depth);
}

double c0(int k, const QuadratureConfig& cfg) {
  require_k_at_least(k, 2, "c0");
  const double upper = std::log(static_cast<double>(k));
  // ln k <= 1 for k = 2: empty interval.
  return integrate([k](double x) { return one_minus_exp_pow(x, k); }, 1.0, upper, cfg);
}

double c1(int k) {
  require_k_at_least(k, 2, "c1");
  // term_i = C(k, i) / k^i, built by ratio to stay in range; Neumaier sum.
  double ratio_term = 1.0;
  double sum = 0.0;
  double compensation = 0.0;
  for (int i = 1; i <= k; ++i) {
    ratio_term *= static_cast<double>(k - i + 1) / (static_cast<double>(i) * k);
    const double value = (i % 2 == 1 ? 1.0 : -1.0) * ratio_term / i;
    const double next = sum + value;
    if (std::fabs(sum) >= std::fabs(value)) {
      compensation += (sum - next) + value;
    } else {
      compensation += (value - next) + sum;
    }
    sum = next;
  }
  return sum + compensation;
}

double tau_integral(double t, const QuadratureConfig& cfg) {
  if (!(t >= 1.0)) throw std::invalid_argument("tau_integral needs t >= 1");
  return integrate([t](double x) { return 1.0 - one_minus_exp_pow(x, t); }, 1.0, t, cfg);
}

double tau_closed(int k, const QuadratureConfig& cfg) {
  require_k_at_least(k, 2, "tau_closed");
  return std::log(static_cast<double>(k)) - 1.0 + c1(k) - c0(k, cfg);
}

double tau1(double t, const QuadratureConfig& cfg) {
  if (!(t >= 1.0)) throw std::invalid_argument("tau1 needs t >= 1");
  return integrate(
      [t](double x) { return one_minus_exp_pow(x, t - 1.0) * x * std::exp(-x); }, 1.0, t,
      cfg);
}

TheoremBound bound_theorem1(int n, int k, const QuadratureConfig& cfg) {
  require_k_at_least(k, 2, "bound_theorem1");
  if (n <= k) throw std::invalid_argument("bound_theorem1 needs n > k");
  TheoremBound out;
  out.coefficient = (1.0 + tau_closed(k, cfg)) / (k - 1);
  out.absolute = out.coefficient * choose_real(n, k);
  out.exceeds_trivial = out.coefficient > 1.0;
  return out;
}

BoundValue bound_lower(int n, int k, int r) {
  if (k < 0 || k > r || r > n) throw std::invalid_argument("bound_lower needs k <= r <= n");
  const double coefficient = 1.0 / choose_real(r, k);
  return {coefficient, choose_real(n, k) * coefficient};
}

PartitionBound bound_partition(int n, int k, int r) {
  const std::vector<int> sizes = partition_part_sizes(n, k, r);
  CountValue total = 0;
  for (int size : sizes) total += binomial(size, k);
  PartitionBound out;
  out.parts = static_cast<int>(sizes.size());
  out.total = total.convert_to<double>();
  out.coefficient = out.total / choose_real(n, k);
  out.simplified_coefficient = 1.0 / std::pow(static_cast<double>(out.parts), k - 1);
  return out;
}

BoundValue bound_kim_roush(int n, int k) {
  require_k_at_least(k, 2, "bound_kim_roush");
  const double ln_k = std::log(static_cast<double>(k));
  const double coefficient = 1.0 / std::ceil(k / (2.0 * ln_k)) + 1.0 / (2.0 * k * ln_k);
  return {coefficient, coefficient * choose_real(n, k)};
}

BoundValue bound_frankl_rodl(int n, int k) {
  if (k <= 2) {
    throw DomainError("Frankl-Rodl bound needs ln k > 1, i.e. k >= 3 (got k=" +
                      std::to_string(k) + ")");
  }
  const double ln_k = std::log(static_cast<double>(k));
  const double coefficient = 1.0 / std::ceil(k / ln_k) * ln_k / (ln_k - 1.0);
  return {coefficient, coefficient * choose_real(n, k)};
}

std::vector<Lemma4Row> check_lemma4(std::span<const int> t_values, const QuadratureConfig& cfg) {
  std::vector<Lemma4Row> rows;
  rows.reserve(t_values.size());
  for (int t : t_values) {
    if (t < 2) throw std::invalid_argument("check_lemma4 needs t >= 2");
    Lemma4Row row;
    row.t = t;
    row.tau_integral = tau_integral(t, cfg);
    row.tau_bound = tau_closed(t, cfg);
    row.tau1 = tau1(t, cfg);
    row.tau1_bound = (1.0 + row.tau_integral) / t;
    row.tau_holds = row.tau_integral <= row.tau_bound + kInequalitySlack;
    row.tau1_holds = row.tau1 <= row.tau1_bound + kInequalitySlack;
    rows.push_back(row);
  }
  return rows;
}

Lemma6Check check_lemma6(int n, int k, const QuadratureConfig& cfg) {
  require_k_at_least(k, 3, "check_lemma6");
  if (n <= k) throw std::invalid_argument("check_lemma6 needs n > k");
  Lemma6Check out;
  out.lhs_exact = Rational(weighted_gap_sum(n, k), binomial(n, k));
  out.lhs = out.lhs_exact.convert_to<double>();
  out.rhs = static_cast<double>(n) / (k - 1) * (1.0 + tau_closed(k, cfg));
  out.holds = out.lhs <= out.rhs;
  return out;
}

Lemma5Diagnostic check_lemma5_diagnostic(int n, int k, const QuadratureConfig& cfg) {
  require_k_at_least(k, 3, "check_lemma5_diagnostic");
  if (n < 3 * k) throw std::invalid_argument("check_lemma5_diagnostic needs n >= 3k");
  const int s = n - k;
  Lemma5Diagnostic out;
  for (int h = (s + k - 1) / k; h < n - k; ++h) out.lhs_exact += mu_closed({s, k, h});
  out.lhs = out.lhs_exact.convert_to<double>();
  out.rhs = (n - k - static_cast<double>(n) / (k - 1) * (1.0 + tau_closed(k, cfg))) *
            choose_real(n, k);
  out.gap = out.lhs - out.rhs;
  out.outside_regime = n <= 3 * k;
  return out;
}

BoundRow bound_row(int n, int k, const QuadratureConfig& cfg) {
  BoundRow row;
  row.k = k;
  row.c0 = c0(k, cfg);
  row.c1 = c1(k);
  row.tau_closed = std::log(static_cast<double>(k)) - 1.0 + row.c1 - row.c0;
  row.tau_integral = tau_integral(k, cfg);
  const TheoremBound constructive = bound_theorem1(n, k, cfg);
  row.bound_16 = constructive.coefficient;
  row.bound_16_exceeds_trivial = constructive.exceeds_trivial;
  row.bound_11 = bound_lower(n, k, k + 1).coefficient;
  const PartitionBound partition = bound_partition(n, k, k + 1);
  row.bound_12 = partition.coefficient;
  row.bound_12_simplified = partition.simplified_coefficient;
  row.bound_14 = bound_kim_roush(n, k).coefficient;
  if (k >= 3) row.bound_15 = bound_frankl_rodl(n, k).coefficient;
  return row;
}

}  // namespace turan
