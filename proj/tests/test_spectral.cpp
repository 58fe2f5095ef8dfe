#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mevcost/cost.hpp"
#include "mevcost/spectral.hpp"

using namespace mevcost;

namespace {

GraphSignal random_signal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  GraphSignal f(n);
  for (auto& v : f) v = unif(rng);
  return f;
}

}  // namespace

TEST_CASE("graph construction: sizes, degrees, diameters") {
  for (int n = 2; n <= 5; ++n) {
    auto gt = build_graph(n, GraphKind::transposition);
    auto nf = factorial(n);
    CHECK(gt.num_vertices == nf);
    CHECK(gt.edges.size() == nf * (n * (n - 1) / 2) / 2);
    for (auto d : gt.degree) CHECK(d == n * (n - 1) / 2);
    CHECK(gt.diameter == n - 1);  // an n-cycle needs n-1 transpositions

    auto gc = build_graph(n, GraphKind::complete);
    CHECK(gc.edges.size() == nf * (nf - 1) / 2);
    CHECK(gc.diameter == 1);
  }
  // n = 1: a single vertex, no edges, diameter 0
  auto g1 = build_graph(1, GraphKind::transposition);
  CHECK(g1.num_vertices == 1);
  CHECK(g1.edges.empty());
  CHECK(g1.diameter == 0);

  CHECK_THROWS(build_graph(8, GraphKind::transposition));  // needs allow_large
}

TEST_CASE("transposition graph edges agree with adjacency predicate") {
  int n = 4;
  auto g = build_graph(n, GraphKind::transposition);
  auto group = enumerate_group(n);
  for (const auto& [a, b] : g.edges)
    CHECK(transposition_adjacent(group[a], group[b]));
}

TEST_CASE("custom graphs: validation and diameter") {
  // 6-cycle over S_3
  std::vector<Edge> cyc = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  auto g = build_graph(3, GraphKind::custom, cyc);
  CHECK(g.diameter == 3);
  // disconnected graph is rejected
  std::vector<Edge> disc = {{0, 1}, {2, 3}, {4, 5}};
  CHECK_THROWS(build_graph(3, GraphKind::custom, disc));
  // self loops / out-of-range rejected
  CHECK_THROWS(build_graph(3, GraphKind::custom,
                           std::vector<Edge>{{0, 0}, {0, 1}}));
  CHECK_THROWS(build_graph(3, GraphKind::custom, std::vector<Edge>{{0, 9}}));
}

TEST_CASE("complete graph spectrum at n = 3: {0, 6 x 5}") {
  auto g = build_graph(3, GraphKind::complete);
  auto s = decompose(g);
  CHECK(std::abs(s.eigenvalues[0]) < 1e-8);
  for (int i = 1; i < 6; ++i)
    CHECK(s.eigenvalues[i] == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(s.degenerate);
  CHECK(s.max_residual < 1e-8);
  // coherence formula sqrt(1 - 1/n!)
  CHECK(coherence(s) == doctest::Approx(std::sqrt(1.0 - 1.0 / 6.0)).epsilon(1e-10));
}

TEST_CASE("transposition spectrum: lambda_1 = 0, lambda_max = n(n-1)") {
  for (int n = 2; n <= 5; ++n) {
    auto g = build_graph(n, GraphKind::transposition);
    auto s = decompose(g);
    CHECK(std::abs(s.eigenvalues.front()) < 1e-8);
    CHECK(s.eigenvalues.back() ==
          doctest::Approx(static_cast<double>(n * (n - 1))).epsilon(1e-8));
    // parity signal is the top eigenvector: residual check
    auto parity = parity_signal(n);
    auto L = laplacian(g);
    auto nf = factorial(n);
    double lam = static_cast<double>(n * (n - 1));
    double worst = 0.0;
    for (std::uint64_t v = 0; v < nf; ++v) {
      double acc = 0.0;
      for (std::uint64_t w = 0; w < nf; ++w) acc += L[w * nf + v] * parity[w];
      worst = std::max(worst, std::abs(acc - lam * parity[v]));
    }
    CHECK(worst < 1e-8);
    // bipartite regular graph: coherence within the universal interval
    double mu = coherence(s);
    CHECK(mu >= 1.0 / std::sqrt(static_cast<double>(nf)) - 1e-12);
    CHECK(mu <= std::sqrt(1.0 - 1.0 / static_cast<double>(nf)) + 1e-12);
  }
}

TEST_CASE("decomposition is deterministic") {
  auto g = build_graph(4, GraphKind::transposition);
  auto s1 = decompose(g);
  auto s2 = decompose(g);
  CHECK(s1.U == s2.U);
  CHECK(s1.eigenvalues == s2.eigenvalues);
}

TEST_CASE("Parseval and round trip on random signals") {
  std::mt19937_64 rng(21);
  for (int n : {3, 4}) {
    for (auto kind : {GraphKind::transposition, GraphKind::complete}) {
      auto g = build_graph(n, kind);
      auto s = decompose(g);
      for (int trial = 0; trial < 25; ++trial) {
        auto f = random_signal(rng, factorial(n));
        auto fhat = fourier(f, s);
        double n2 = std::sqrt(kernels::dot(f.data(), f.data(), f.size()));
        double n2h = std::sqrt(kernels::dot(fhat.data(), fhat.data(), fhat.size()));
        CHECK(std::abs(n2 - n2h) < 1e-10);
        auto back = inverse_fourier(fhat, s);
        for (std::size_t i = 0; i < f.size(); ++i)
          CHECK(std::abs(back[i] - f[i]) < 1e-8);
      }
    }
  }
}

TEST_CASE("smoothness functional C_G") {
  // parity signal on the transposition graph: every edge flips sign, gap 2
  int n = 4;
  auto g = build_graph(n, GraphKind::transposition);
  auto parity = parity_signal(n);
  CHECK(smoothness_cg(parity, g) ==
        doctest::Approx(4.0 * static_cast<double>(g.edges.size())).epsilon(1e-12));
  CHECK_THROWS(smoothness_cg(GraphSignal(5, 0.0), g));
}

TEST_CASE("cost_from_signal agrees with enumeration on table payoffs") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  TransactionList<double> x = {0, 1, 2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(24);
    for (auto& v : values) v = unif(rng);
    auto direct = cost_from_signal(values);
    // auto-translation handles max < -min; enumeration sees the shifted table
    std::vector<double> shifted = values;
    for (auto& v : shifted) v += direct.shift;
    auto rep = cost(table_payoff(shifted, x), x);
    CHECK(std::abs(direct.cost - rep.cost) < 1e-10);
  }
  // explicit translation case
  GraphSignal neg = {-5.0, -1.0, -3.0, -2.0, -4.0, -1.5};
  auto sc = cost_from_signal(neg);
  CHECK(sc.shift == doctest::Approx(3.0));
  CHECK(sc.cost ==
        doctest::Approx(2.0 - (-5.0 - 1.0 - 3.0 - 2.0 - 4.0 - 1.5 + 18.0) / 6.0));
}

TEST_CASE("spectral bound certificates hold on random signals") {
  std::mt19937_64 rng(55);
  for (int n : {3, 4}) {
    for (auto kind : {GraphKind::transposition, GraphKind::complete}) {
      auto g = build_graph(n, kind);
      auto s = decompose(g);
      for (int trial = 0; trial < 20; ++trial) {
        auto f = random_signal(rng, factorial(n));
        for (const auto& c : path_bound(f, g)) CHECK(c.satisfied);
        auto [lower, upper] = fourier_bounds(f, s);
        CHECK(lower.satisfied);
        CHECK(upper.satisfied);
        for (const auto& c : cg_sandwich(f, g, s)) CHECK(c.satisfied);
      }
    }
  }
}

TEST_CASE("single-vertex graph: all costs zero") {
  auto g = build_graph(1, GraphKind::complete);
  auto s = decompose(g);
  CHECK(coherence(s) == doctest::Approx(1.0));
  GraphSignal f = {0.7};
  for (const auto& c : cg_sandwich(f, g, s)) CHECK(c.satisfied);
}
