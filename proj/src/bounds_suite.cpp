#include "mevcost/bounds_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mevcost/cfmm.hpp"
#include "mevcost/cost.hpp"
#include "mevcost/spectral.hpp"

namespace mevcost {

namespace {

void add(SuiteResult& out, BoundCertificate cert, std::string context) {
  if (!cert.satisfied) ++out.failures;
  out.records.push_back({std::move(cert), std::move(context)});
}

TransactionList<double> distinct_list(int n) {
  TransactionList<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i;
  return x;
}

void spectral_certificates(SuiteResult& out, const GraphSignal& signal,
                           const PermutationGraph& g, const Spectrum& s,
                           const std::string& ctx) {
  for (auto& c : path_bound(signal, g)) add(out, std::move(c), ctx);
  auto [lower, upper] = fourier_bounds(signal, s);
  add(out, std::move(lower), ctx);
  add(out, std::move(upper), ctx);
  for (auto& c : cg_sandwich(signal, g, s)) add(out, std::move(c), ctx);
}

void fixtures(SuiteResult& out, int n, const PermutationGraph& transposition,
              const PermutationGraph& complete, const Spectrum& st,
              const Spectrum& sc) {
  // Liquidation example at n = 4: C = 11/12 saturating the stabilizer bound.
  {
    auto x = basic_liquidation_list(4);
    auto f = liquidation_payoff(2.0);
    auto cert = stabilizer_bound(f, x);
    add(out, cert, "fixture:liquidation(n=4)");
    double exact = 1.0 - (2.0 / 4.0) / 6.0;  // 11/12
    add(out,
        make_certificate("liquidation_exact",
                         std::abs(cost(f, x).cost - exact), 1e-12, "", 0.0),
        "fixture:liquidation(n=4)");
  }
  // Worst-cost indicator on a distinct-entry list saturates the bound.
  {
    auto x = distinct_list(n);
    auto f = indicator_payoff(x);
    auto cert = stabilizer_bound(f, x);
    out.worst_indicator_saturation_slack =
        std::max(out.worst_indicator_saturation_slack, std::abs(cert.slack));
    add(out, cert, "fixture:indicator");
    // Support of the indicator: the identity rank only (x has distinct
    // entries), so the spiky bound is tight.
    add(out, spiky_bound(f, x, {0}, 0.0, 1.0), "fixture:indicator-spiky");
  }
  // Parity signal on both graphs.
  auto parity = parity_signal(n);
  spectral_certificates(out, parity, transposition, st, "fixture:parity/transposition");
  spectral_certificates(out, parity, complete, sc, "fixture:parity/complete");
}

}  // namespace

SuiteResult run_bounds_suite(int n, std::uint64_t seed, int trials,
                             bool inject_corruption) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("bounds suite supports 2 <= n <= 6");
  SuiteResult out;
  out.seed = seed;
  out.trials = trials;
  out.n = n;

  auto gt = build_graph(n, GraphKind::transposition);
  auto gc = build_graph(n, GraphKind::complete);
  auto st = decompose(gt);
  auto sc = decompose(gc);

  fixtures(out, n, gt, gc, st, sc);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto nf = factorial(n);
  auto x = distinct_list(n);

  for (int trial = 0; trial < trials; ++trial) {
    std::string ctx = "trial:" + std::to_string(trial);

    // Random table payoff in [0, 1] on a distinct-entry list; its signal is
    // the value table itself.
    std::vector<double> values(nf);
    for (auto& v : values) v = unif(rng);
    std::size_t peak = static_cast<std::size_t>(rng() % nf);
    values[peak] = 1.0;  // normalized: max exactly 1
    auto f = table_payoff(values, x);

    add(out, stabilizer_bound(f, x), ctx + ":table");

    // Spiky bound with a level-set H.
    double theta = 0.9;
    std::set<std::uint64_t> H;
    for (std::uint64_t r = 0; r < nf; ++r)
      if (values[r] > theta) H.insert(r);
    add(out, spiky_bound(f, x, H, theta, 1.0), ctx + ":spiky");

    // Worst-cost indicator saturation against Eq-style stabilizer bound.
    auto target = mevcost::apply(Permutation::unrank(n, rng() % nf), x);
    auto ind_cert = stabilizer_bound(indicator_payoff(target), x);
    out.worst_indicator_saturation_slack =
        std::max(out.worst_indicator_saturation_slack, std::abs(ind_cert.slack));
    add(out, ind_cert, ctx + ":indicator");

    // Converse support bound at alpha = eta = exact C.
    {
      auto rep = cost(f, x);
      double alpha = rep.cost;
      std::vector<TransactionList<double>> T;
      std::uint64_t r = 0;
      for (const auto& p : enumerate_group(n)) {
        if (values[r] >= alpha && alpha > 0.0) T.push_back(mevcost::apply(p, x));
        ++r;
      }
      if (!T.empty() && alpha > 0.0)
        add(out, converse_support_bound(f, x, alpha, alpha, T).certificate,
            ctx + ":converse");
    }

    // Smoothness of the linear payoff under the l1 metric.
    {
      auto lin = linear_tightness_payoff();
      TransactionList<double> u(static_cast<std::size_t>(n)),
          v(static_cast<std::size_t>(n));
      for (auto& e : u) e = 2.0 * unif(rng) - 1.0;
      for (auto& e : v) e = 2.0 * unif(rng) - 1.0;
      PairMetric<double> l1 = [](const TransactionList<double>& a,
                                 const TransactionList<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
        return s;
      };
      add(out, lipschitz_cost_bound(lin, 1.0, l1, u, v, seed + trial),
          ctx + ":smoothness");
    }

    // Spectral certificates for the table signal on both graphs.
    spectral_certificates(out, values, gt, st, ctx + "/transposition");
    spectral_certificates(out, values, gc, sc, ctx + "/complete");
  }

  // Negative control: a signal corrupted after its transform was taken must
  // trip the Parseval check.
  if (inject_corruption) {
    GraphSignal sig(nf);
    for (auto& v : sig) v = unif(rng);
    auto fhat = fourier(sig, st);
    sig[0] += 1.0;
    double n2 = std::sqrt(kernels::dot(sig.data(), sig.data(), sig.size()));
    double n2hat = std::sqrt(kernels::dot(fhat.data(), fhat.data(), fhat.size()));
    add(out, make_certificate("parseval", std::abs(n2 - n2hat), 1e-10, "", 0.0),
        "corruption-canary");
  }

  // One sampled CFMM bound per suite run.
  if (trials > 0) {
    auto G = ForwardExchangeFn::power(1.0, 0.5);
    double M = 10.0, delta = 5.0;
    auto cs = sampled_cs_frontrun(G, delta, M, std::min(n, 5), 200, seed);
    add(out,
        global_smooth_bound(cs.value, 2.0 * G.derivative_at_zero(), 2.0 * M,
                            0.0, "frontrun sampled C_s"),
        "cfmm:frontrun");
  }
  return out;
}

}  // namespace mevcost
