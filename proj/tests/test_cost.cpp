#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mevcost/cost.hpp"

using namespace mevcost;

namespace {

TransactionList<double> distinct_list(int n) {
  TransactionList<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i;
  return x;
}

PairMetric<double> l1_metric() {
  return [](const TransactionList<double>& a, const TransactionList<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
  };
}

}  // namespace

TEST_CASE("liquidation cost is 11/12 at n = 4") {
  auto x = basic_liquidation_list(4);
  auto rep = cost(liquidation_payoff(2.0), x);
  CHECK(std::abs(rep.cost - 11.0 / 12.0) < 1e-12);
  CHECK(rep.max_value == 1.0);
}

TEST_CASE("indicator cost is 1 - 1/n! on a distinct list") {
  auto x = distinct_list(5);
  auto rep = cost(indicator_payoff(x), x);
  CHECK(std::abs(rep.cost - (1.0 - 1.0 / 120.0)) < 1e-12);
  CHECK(rep.argmax_rank == 0);  // identity attains the indicator
  CHECK(rep.stabilizer_size == 1);
}

TEST_CASE("argmax tie-break: lowest lexicographic rank wins") {
  // constant payoff: every rank attains the max; rank 0 must be reported
  TransactionList<double> x = {1, 2, 3};
  PayoffFn<double> c{[](const TransactionList<double>&) { return 4.0; }, "c"};
  auto rep = cost(c, x);
  CHECK(rep.argmax_rank == 0);
  CHECK(rep.cost == 0.0);
}

TEST_CASE("linear tightness cost 2(1 - 1/n) on e1, 0 on the zero list") {
  auto f = linear_tightness_payoff();
  for (int n = 3; n <= 6; ++n) {
    TransactionList<double> e1(static_cast<std::size_t>(n), 0.0);
    e1[0] = 1.0;
    CHECK(std::abs(cost(f, e1).cost - 2.0 * (1.0 - 1.0 / n)) < 1e-12);
    TransactionList<double> zero(static_cast<std::size_t>(n), 0.0);
    CHECK(cost(f, zero).cost == 0.0);
  }
}

TEST_CASE("algebraic properties of the cost functional") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto x = distinct_list(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> values(24);
    for (auto& v : values) v = unif(rng);
    auto f = table_payoff(values, x);
    double c = cost(f, x).cost;
    // positive homogeneity
    double a = 0.5 + unif(rng) * 0.4;
    PayoffFn<double> af{[f, a](const TransactionList<double>& z) {
                          return a * f(z);
                        },
                        "af"};
    CHECK(cost(af, x).cost == doctest::Approx(a * c).epsilon(1e-12));
    // translation invariance
    double b = unif(rng);
    PayoffFn<double> fb{[f, b](const TransactionList<double>& z) {
                          return f(z) + b;
                        },
                        "fb"};
    CHECK(cost(fb, x).cost == doctest::Approx(c).epsilon(1e-12));
    // permutation invariance of the argument
    auto p = Permutation::unrank(4, rng() % 24);
    CHECK(cost(f, mevcost::apply(p, x)).cost == doctest::Approx(c).epsilon(1e-12));
    // subadditivity against a second payoff
    std::vector<double> values2(24);
    for (auto& v : values2) v = unif(rng);
    auto g = table_payoff(values2, x);
    PayoffFn<double> fg{[f, g](const TransactionList<double>& z) {
                          return f(z) + g(z);
                        },
                        "fg"};
    CHECK(cost(fg, x).cost <= c + cost(g, x).cost + 1e-12);
  }
}

TEST_CASE("normalize maps the orbit range onto [0, 1]") {
  auto x = distinct_list(4);
  auto f = linear_tightness_payoff();
  auto [tilde, scale, offset] = normalize(f, x);
  auto rep = cost(tilde, x);
  CHECK(rep.max_value == doctest::Approx(1.0).epsilon(1e-12));
  auto values = payoff_signal(tilde, x);
  double lo = *std::min_element(values.begin(), values.end());
  CHECK(lo == doctest::Approx(0.0).epsilon(1e-12));
  // reconstruction
  CHECK(scale * tilde(x) + offset == doctest::Approx(f(x)).epsilon(1e-12));
  // constant payoff normalizes to the constant 1 with scale 0
  PayoffFn<double> c{[](const TransactionList<double>&) { return 7.0; }, "c"};
  auto [unit, s0, o0] = normalize(c, x);
  CHECK(unit(x) == 1.0);
  CHECK(s0 == 0.0);
  CHECK(o0 == 7.0);
}

TEST_CASE("ratio cost") {
  auto x = distinct_list(4);
  CHECK(ratio_cost(indicator_payoff(x), x) ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  PayoffFn<double> zero{[](const TransactionList<double>&) { return 0.0; },
                        "zero"};
  CHECK_THROWS_AS(ratio_cost(zero, x), std::domain_error);
}

TEST_CASE("stabilizer bound: normalized, scaled, and precondition") {
  auto x = distinct_list(4);
  auto cert = stabilizer_bound(indicator_payoff(x), x);
  CHECK(cert.satisfied);
  CHECK(cert.rhs == doctest::Approx(1.0 - 1.0 / 24.0).epsilon(1e-12));
  CHECK(std::abs(cert.slack) < 1e-12);  // indicators saturate the bound

  // repeated entries: |F| = 2
  TransactionList<double> y = {0, 0, 1, 2};
  auto cert2 = stabilizer_bound(indicator_payoff(y), y);
  CHECK(cert2.satisfied);
  CHECK(cert2.rhs == doctest::Approx(1.0 - 2.0 / 24.0).epsilon(1e-12));

  // scaled variant for a non-normalized payoff
  PayoffFn<double> f3{[](const TransactionList<double>& z) {
                        return z[0] == 3.0 ? 3.0 : 0.0;
                      },
                      "f3"};
  auto cert3 = stabilizer_bound(f3, x);
  CHECK(cert3.note == "scaled");
  CHECK(cert3.satisfied);

  PayoffFn<double> neg{[](const TransactionList<double>& z) { return -z[0]; },
                       "neg"};
  CHECK_THROWS_AS(stabilizer_bound(neg, x), std::invalid_argument);
}

TEST_CASE("spiky bound: tight for the indicator, preconditions enforced") {
  auto x = distinct_list(4);
  auto f = indicator_payoff(x);
  auto cert = spiky_bound(f, x, {0}, 0.0, 1.0);
  CHECK(cert.satisfied);
  // lower = 1 - 1/24 equals the exact cost
  CHECK(std::abs(cert.slack) < 1e-12);
  CHECK_THROWS_AS(spiky_bound(f, x, {0}, 0.5, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(spiky_bound(f, x, {1}, 0.0, 1.0), std::invalid_argument);
  PayoffFn<double> big{[](const TransactionList<double>&) { return 2.0; },
                       "big"};
  CHECK_THROWS_AS(spiky_bound(big, x, {0}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("converse support bound") {
  auto x = distinct_list(4);
  auto f = indicator_payoff(x);
  std::vector<TransactionList<double>> T = {x};
  auto res = converse_support_bound(f, x, 1.0 - 1.0 / 24.0, 1.0, T);
  CHECK(res.certificate.satisfied);
  CHECK(res.certificate.lhs == 1.0);
  CHECK(res.certificate.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.witness == x);  // argmax image is the indicator target
  CHECK_THROWS_AS(converse_support_bound(f, x, 1.0, 1.0, T),
                  std::invalid_argument);  // C < alpha
  CHECK_THROWS_AS(converse_support_bound(f, x, 0.5, 0.0, T),
                  std::invalid_argument);  // eta <= 0
}

TEST_CASE("lipschitz cost bound with the lifted metric") {
  auto f = linear_tightness_payoff();
  TransactionList<double> x = {1, 0, 0, 0};
  TransactionList<double> y = {0.5, 0.25, 0, 0};
  auto d = lift_metric(l1_metric());
  auto cert = lipschitz_cost_bound(f, 1.0, d, x, y, 123);
  CHECK(cert.satisfied);
  // permutation-dependent metric is rejected by the spot check
  PairMetric<double> bad = [](const TransactionList<double>& a,
                              const TransactionList<double>& b) {
    return std::abs(a[0] - b[0]);
  };
  CHECK_THROWS_AS(lipschitz_cost_bound(f, 1.0, bad, x, y, 123),
                  std::invalid_argument);
}

TEST_CASE("global smooth bound envelope") {
  auto c = global_smooth_bound(3.0, 1.0, 2.0, 0.5, "demo");
  CHECK(c.rhs == 4.5);
  CHECK(c.satisfied);
  CHECK_FALSE(global_smooth_bound(10.0, 1.0, 2.0, 0.0).satisfied);
}
