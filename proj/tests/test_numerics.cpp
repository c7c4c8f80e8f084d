#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <vector>

#include "turan/errors.hpp"
#include "turan/exact_count.hpp"
#include "turan/numerics.hpp"

using Catch::Approx;

namespace {

// Composite Simpson on a fixed fine grid; independent of the adaptive code.
template <class F>
double composite_simpson(F f, double a, double b, int panels = 200'000) {
  if (!(b > a)) return 0.0;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double c0_reference(int k) {
  return composite_simpson([k](double x) { return std::pow(1.0 - std::exp(-x), k); }, 1.0,
                           std::log(static_cast<double>(k)));
}

// Exact rational evaluation of the alternating sum.
double c1_reference(int k) {
  turan::Rational sum = 0;
  for (int i = 1; i <= k; ++i) {
    turan::Rational term(turan::binomial(k, i),
                         turan::CountValue(i) * boost::multiprecision::pow(turan::CountValue(k), i));
    if (i % 2) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum.convert_to<double>();
}

}  // namespace

TEST_CASE("adaptive integration against fixed-grid Simpson") {
  for (int k : {3, 4, 5, 10, 20, 40, 64}) {
    INFO("k=" << k);
    CHECK(std::fabs(turan::c0(k) - c0_reference(k)) < 1e-9);
  }
  // values from an independent adaptive Gauss-Kronrod run
  CHECK(turan::c0(3) == Approx(0.0270602128984).margin(1e-9));
  CHECK(turan::c0(20) == Approx(0.2012905293147).margin(1e-9));
  CHECK(turan::c0(40) == Approx(0.2102638285254).margin(1e-9));
}

TEST_CASE("c0 boundary and published spot values") {
  CHECK(turan::c0(2) == 0.0);
  CHECK(turan::c0(5) == Approx(0.127047).margin(1e-5));
  CHECK_THROWS_AS(turan::c0(1), std::invalid_argument);

  const auto table_rule = turan::tabulation_quadrature();
  CHECK(turan::c0(2, table_rule) == 0.0);
  CHECK(turan::c0(3, table_rule) == Approx(0.027084).margin(5e-7));
  CHECK(turan::c0(40, table_rule) == Approx(0.210253).margin(5e-7));
}

TEST_CASE("left Riemann rule") {
  turan::QuadratureConfig cfg;
  cfg.rule = turan::QuadratureRule::left_riemann;
  cfg.riemann_step = 0.25;
  CHECK(turan::integrate([](double x) { return x; }, 0.0, 1.0, cfg) == Approx(0.375));
  CHECK(turan::integrate([](double x) { return x; }, 1.0, 1.0, cfg) == 0.0);
}

TEST_CASE("quadrature depth limit raises") {
  turan::QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.max_depth = 2;
  CHECK_THROWS_AS(turan::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg),
                  turan::QuadratureError);
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(turan::integrate([](double x) { return x; }, 0.0, 1.0, cfg),
                  std::invalid_argument);
}

TEST_CASE("c1 values") {
  CHECK(turan::c1(2) == 0.875);
  CHECK(turan::c1(10) == Approx(0.810221).margin(1e-6));
  CHECK(turan::c1(40) == Approx(0.799927).margin(1e-6));
  for (int k = 2; k <= 64; ++k) CHECK(turan::c1(k) == Approx(c1_reference(k)).margin(1e-14));
}

TEST_CASE("stated ranges and monotonicity of c0 and c1") {
  double previous_c0 = turan::c0(3);
  double previous_c1 = turan::c1(2);
  for (int k = 2; k <= 64; ++k) {
    const double a = turan::c0(k);
    const double b = turan::c1(k);
    CHECK(a >= 0.0);
    CHECK(b <= 1.0);
    if (k >= 4) CHECK(a >= previous_c0);
    if (k >= 3) CHECK(b <= previous_c1);
    if (k >= 3) previous_c0 = a;
    previous_c1 = b;
  }
}

TEST_CASE("tau functions") {
  CHECK(turan::tau_integral(1.0) == 0.0);
  const double t2 = turan::tau_integral(2.0);
  CHECK(t2 > 0.0);
  CHECK(t2 < 1.0);
  CHECK(turan::tau_closed(2) == Approx(0.568147).margin(1e-5));
  CHECK(t2 <= turan::tau_closed(2));
  CHECK(turan::tau_integral(10.0) <= 1.930388 + 2e-5);

  const auto table_rule = turan::tabulation_quadrature();
  CHECK(2.0 / (1.0 + turan::tau_closed(3, table_rule)) == Approx(1.043184).margin(1e-5));
  CHECK(9.0 / (1.0 + turan::tau_closed(10, table_rule)) == Approx(3.071266).margin(1e-5));

  CHECK(turan::tau1(1.0) == 0.0);
  CHECK(turan::tau1(5.0) <= (1.0 + turan::tau_integral(5.0)) / 5.0);
  CHECK(turan::tau1(20.0) <= (1.0 + turan::tau_integral(20.0)) / 20.0);
  CHECK_THROWS_AS(turan::tau_integral(0.5), std::invalid_argument);
}

TEST_CASE("integration by parts identity") {
  // tau(t) = (t-1) - t(1-e^-t)^t + (1-e^-1)^t + t tau1(t)
  for (int t = 2; t <= 30; ++t) {
    const double rhs = (t - 1) - t * std::pow(1 - std::exp(-t), t) +
                       std::pow(1 - std::exp(-1.0), t) + t * turan::tau1(t);
    CHECK(turan::tau_integral(t) == Approx(rhs).margin(1e-8));
  }
}

TEST_CASE("quadrature inequalities on the integer grid") {
  for (int t = 2; t <= 64; ++t) {
    INFO("t=" << t);
    const double tau = turan::tau_integral(t);
    CHECK(tau <= turan::tau_closed(t) + 1e-8);
    CHECK(t * turan::tau1(t) - 1.0 <= tau + 1e-8);
  }
}

TEST_CASE("halving the tolerance moves results by less than the tolerance") {
  turan::QuadratureConfig loose;
  loose.abs_tol = 1e-8;
  turan::QuadratureConfig tight;
  tight.abs_tol = 5e-9;
  for (int k = 3; k <= 64; k += 7) {
    CHECK(std::fabs(turan::c0(k, loose) - turan::c0(k, tight)) < loose.abs_tol);
    CHECK(std::fabs(turan::tau_integral(k, loose) - turan::tau_integral(k, tight)) < loose.abs_tol);
    CHECK(std::fabs(turan::tau1(k, loose) - turan::tau1(k, tight)) < loose.abs_tol);
  }
}

TEST_CASE("constructive bound coefficient") {
  CHECK(turan::bound_theorem1(32, 10).coefficient == Approx(0.325599).margin(2e-5));
  CHECK(turan::bound_theorem1(32, 3).coefficient == Approx(0.958603).margin(2e-5));
  const auto k2 = turan::bound_theorem1(32, 2);
  CHECK(k2.coefficient == Approx(1.568147).margin(2e-5));
  CHECK(k2.exceeds_trivial);
  CHECK_FALSE(turan::bound_theorem1(32, 3).exceeds_trivial);
  CHECK(turan::bound_theorem1(32, 3).absolute == Approx(4960 * turan::bound_theorem1(32, 3).coefficient));
}

TEST_CASE("prior bounds") {
  CHECK(turan::bound_lower(10, 3, 4).absolute == Approx(30.0));
  CHECK(turan::bound_lower(32, 2, 3).absolute == Approx(496.0 / 3.0));
  CHECK(turan::bound_lower(32, 2, 3).absolute <= 345.0);
  CHECK(turan::bound_lower(12, 5, 5).absolute == Approx(792.0));

  const auto p = turan::bound_partition(10, 3, 5);
  CHECK(p.parts == 2);
  CHECK(p.total == 20.0);
  CHECK(p.simplified_coefficient == Approx(0.25));
  CHECK(turan::bound_partition(10, 3, 4).total == 120.0);
  CHECK(turan::bound_partition(12, 2, 5).parts == 4);
  CHECK(turan::bound_partition(12, 2, 5).total == 12.0);

  CHECK(turan::bound_kim_roush(32, 2).coefficient ==
        Approx(0.5 + 1.0 / (4.0 * std::log(2.0))));
  CHECK(turan::bound_kim_roush(32, 3).coefficient > 0.0);
  CHECK(turan::bound_kim_roush(32, 8).coefficient > turan::bound_theorem1(32, 8).coefficient);

  CHECK(turan::bound_frankl_rodl(32, 3).coefficient ==
        Approx(std::log(3.0) / (3.0 * (std::log(3.0) - 1.0))));
  CHECK(turan::bound_frankl_rodl(32, 3).coefficient == Approx(3.713).margin(1e-3));
  CHECK(turan::bound_frankl_rodl(32, 10).coefficient == Approx(0.3536).margin(1e-4));
  CHECK_THROWS_AS(turan::bound_frankl_rodl(32, 2), turan::DomainError);

  for (int k = 3; k <= 10; ++k) {
    CHECK(turan::bound_theorem1(32, k).coefficient < turan::bound_frankl_rodl(32, k).coefficient);
  }
}

TEST_CASE("lemma checks") {
  std::vector<int> grid(39);
  std::iota(grid.begin(), grid.end(), 2);
  const auto rows = turan::check_lemma4(grid);
  for (const auto& row : rows) {
    INFO("t=" << row.t);
    CHECK(row.holds());
  }
  CHECK(rows.front().tau_bound - rows.front().tau_integral > 0.1);  // slack at t = 2
  const int bad[] = {1};
  CHECK_THROWS_AS(turan::check_lemma4(bad), std::invalid_argument);

  for (auto [n, k] : {std::pair{32, 3}, std::pair{32, 10}, std::pair{20, 4}}) {
    const auto check = turan::check_lemma6(n, k);
    CHECK(check.holds);
    CHECK(check.lhs_exact ==
          turan::Rational(turan::weighted_gap_sum(n, k), turan::binomial(n, k)));
  }

  const auto d1 = turan::check_lemma5_diagnostic(32, 4);
  CHECK(d1.gap == Approx(d1.lhs - d1.rhs));
  CHECK_FALSE(d1.outside_regime);
  CHECK_FALSE(turan::check_lemma5_diagnostic(40, 5).outside_regime);
  CHECK(turan::check_lemma5_diagnostic(9, 3).outside_regime);
  CHECK_THROWS_AS(turan::check_lemma5_diagnostic(8, 3), std::invalid_argument);
}

TEST_CASE("bound row invariants") {
  for (int k = 2; k <= 20; ++k) {
    const auto row = turan::bound_row(40, k);
    CHECK(row.c0 >= 0.0);
    CHECK(row.c1 <= 1.0);
    CHECK(row.bound_11 == Approx(1.0 / (k + 1)));
    CHECK(row.bound_15.has_value() == (k >= 3));
    CHECK(row.bound_16_exceeds_trivial == (k == 2));
  }
}
