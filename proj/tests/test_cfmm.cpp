#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mevcost/cfmm.hpp"

using namespace mevcost;

TEST_CASE("forward exchange families validate and evaluate") {
  auto g = ForwardExchangeFn::power(2.0, 0.5);
  CHECK(g(0.0) == 0.0);
  CHECK(g(3.0) == doctest::Approx(2.0 * (2.0 - 1.0) / 0.5));  // 4(sqrt(4)-1)/...
  CHECK(g.derivative_at_zero() == 2.0);
  g.validate_on_grid(100.0);

  auto pw = ForwardExchangeFn::piecewise_linear({0.0, 1.0, 3.0}, {2.0, 1.0, 0.5});
  CHECK(pw(0.5) == doctest::Approx(1.0));
  CHECK(pw(2.0) == doctest::Approx(3.0));
  CHECK(pw(4.0) == doctest::Approx(4.5));
  pw.validate_on_grid(10.0);

  CHECK_THROWS_AS(ForwardExchangeFn::power(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ForwardExchangeFn::power(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ForwardExchangeFn::piecewise_linear({0.0, 1.0}, {1.0, 2.0}),
                  std::invalid_argument);  // increasing slopes: not concave
}

TEST_CASE("inverse round trip") {
  auto g = ForwardExchangeFn::power(1.5, 0.7);
  for (double t : {0.0, 0.3, 2.0, 17.5}) {
    CHECK(g.inverse(g(t)) == doctest::Approx(t).epsilon(1e-8));
  }
  CHECK_THROWS_AS(g.inverse(-1.0), std::domain_error);
}

TEST_CASE("frontrun list validation and payoff") {
  auto g = ForwardExchangeFn::power(1.0, 0.5);
  double delta = 2.0;
  CfmmList z = {{1.0, 0.0}, {0.0, delta}, {3.0, 0.0}};
  validate_frontrun_list(z, 10.0, delta);
  auto f = frontrun_payoff(g, delta);
  CHECK(f(z) == doctest::Approx(g(1.0 + delta) - g(1.0)).epsilon(1e-14));
  // moving the validator first maximizes the payoff (concavity)
  CfmmList first = {{0.0, delta}, {1.0, 0.0}, {3.0, 0.0}};
  CHECK(f(first) == doctest::Approx(g(delta)).epsilon(1e-14));
  CHECK(f(first) >= f(z));

  CHECK_THROWS_AS(validate_frontrun_list({{1.0, 0.0}}, 10.0, delta),
                  std::invalid_argument);  // no validator
  CHECK_THROWS_AS(
      validate_frontrun_list({{0.0, delta}, {0.0, delta}}, 10.0, delta),
      std::invalid_argument);  // two validators
  CHECK_THROWS_AS(validate_frontrun_list({{20.0, 0.0}, {0.0, delta}}, 10.0,
                                         delta),
                  std::invalid_argument);  // volume cap
  CHECK_THROWS_AS(validate_frontrun_list({{1.0, delta}}, 10.0, delta),
                  std::invalid_argument);  // both coordinates nonzero
}

TEST_CASE("frontrun pseudo-metric") {
  CfmmList z = {{1.0, 0.0}, {0.0, 2.0}, {3.0, 0.0}};
  CfmmList zp = {{2.0, 0.0}, {0.0, 2.0}, {1.0, 0.0}};
  // per-coordinate max{|x|,|x'|,|x-x'|}: max{1,2,1} + 0 + max{3,1,2} = 5
  CHECK(frontrun_metric(z, zp) == doctest::Approx(5.0));
  // not a true metric: d(z, z) = sum |x_i|
  CHECK(frontrun_metric(z, z) == doctest::Approx(4.0));
  // permutation independence: value depends only on the multiset of pairs
  CfmmList za = {{0.0, 2.0}, {1.0, 0.0}, {3.0, 0.0}};
  CfmmList zpa = {{0.0, 2.0}, {2.0, 0.0}, {1.0, 0.0}};
  CHECK(frontrun_metric(za, zpa) == doctest::Approx(5.0));
}

TEST_CASE("frontrun payoff is Lipschitz with constant 2 G'(0)") {
  auto g = ForwardExchangeFn::power(1.3, 0.6);
  auto f = frontrun_payoff(g, 1.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    // validator fixed at a common position so the lists differ only in trades
    CfmmList z = {{unif(rng), 0.0}, {0.0, 1.0}, {unif(rng), 0.0}, {unif(rng), 0.0}};
    CfmmList zp = {{unif(rng), 0.0}, {0.0, 1.0}, {unif(rng), 0.0}, {unif(rng), 0.0}};
    double lhs = std::abs(f(z) - f(zp));
    CHECK(lhs <= 2.0 * g.derivative_at_zero() * frontrun_metric(z, zp) + 1e-9);
  }
}

TEST_CASE("sandwich feasibility and binding sell amount") {
  auto g = ForwardExchangeFn::power(1.0, 0.5);
  double t = 3.0, delta = 2.0;
  double gamma = sandwich_binding_sell(g, t, delta);
  CHECK(gamma > delta);  // strictly concave G lets the validator profit
  // binding: constraint holds with equality
  CfmmList z = {{0.0, delta}, {t, 0.0}, {0.0, -gamma}};
  CHECK(sandwich_feasible(z, g));
  CfmmList too_much = {{0.0, delta}, {t, 0.0}, {0.0, -(gamma + 1e-3)}};
  CHECK_FALSE(sandwich_feasible(too_much, g));
  // root-find oracle: G(t + delta - gamma) = G(t + delta) - G(delta)
  CHECK(g(t + delta - gamma) ==
        doctest::Approx(g(t + delta) - g(delta)).epsilon(1e-8));
  // payoff at the binding sell
  auto f = sandwich_payoff();
  CHECK(f(z) == doctest::Approx(gamma - delta).epsilon(1e-12));
}

TEST_CASE("sandwich validation and metric") {
  CfmmList z = {{0.0, 1.0}, {2.0, 0.0}, {0.0, -1.5}};
  validate_sandwich_list(z, 10.0);
  CHECK_THROWS_AS(validate_sandwich_list({{0.0, 1.0}, {2.0, 0.0}}, 10.0),
                  std::invalid_argument);  // no sell
  CfmmList zp = {{0.0, 1.0}, {5.0, 0.0}, {0.0, -1.5}};
  CHECK(sandwich_metric(z, zp) == 5.0);
}

TEST_CASE("sampled sup-cost estimates respect the analytic bounds") {
  auto g = ForwardExchangeFn::power(1.0, 0.5);
  double M = 10.0, delta = 5.0;
  auto cs = sampled_cs_frontrun(g, delta, M, 4, 300, 42);
  CHECK(cs.value >= 0.0);
  CHECK(cs.value <= 8.0 * g.derivative_at_zero() * M);
  CHECK(cs.method == "monte-carlo+coordinate-ascent");
  // determinism
  CHECK(sampled_cs_frontrun(g, delta, M, 4, 300, 42).value == cs.value);

  auto ss = sampled_cs_sandwich(g, M, 4, 300, 42);
  CHECK(ss.value >= 0.0);
  CHECK(ss.value <= M);

  // sandwich payoff never exceeds trader volume on feasible samples
  std::mt19937_64 rng(9);
  auto f = sandwich_payoff();
  for (int s = 0; s < 500; ++s) {
    auto z = sample_sandwich_list(rng, 4, M, g);
    REQUIRE(sandwich_feasible(z, g));
    double t = 0.0;
    for (const auto& a : z) t += a.trader;
    CHECK(f(z) <= t + 1e-9);
  }
}
