#pragma once

// The cost-of-MEV functional C(f, x) = max_pi f(pi(x)) - E_pi f(pi(x)) by
// exact enumeration, its normalized/ratio/randomized variants, and the
// certificate-producing bound verifiers.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "mevcost/action.hpp"
#include "mevcost/certificate.hpp"
#include "mevcost/kernels.hpp"
#include "mevcost/payoff.hpp"
#include "mevcost/permutation.hpp"

namespace mevcost {

struct CostReport {
  double max_value = 0.0;
  double mean_value = 0.0;
  double cost = 0.0;
  std::uint64_t argmax_rank = 0;
  std::uint64_t n_factorial = 0;
  std::uint64_t stabilizer_size = 0;
};

// f(pi_r(x)) for every rank r, in rank order.
template <class T>
std::vector<double> payoff_signal(const PayoffFn<T>& f,
                                  const TransactionList<T>& x) {
  std::vector<double> values;
  values.reserve(factorial(static_cast<int>(x.size())));
  for (const auto& p : enumerate_group(static_cast<int>(x.size())))
    values.push_back(f(mevcost::apply(p, x)));
  return values;
}

template <class T>
CostReport cost(const PayoffFn<T>& f, const TransactionList<T>& x) {
  auto values = payoff_signal(f, x);
  CostReport r;
  r.n_factorial = values.size();
  r.argmax_rank = kernels::argmax(values.data(), values.size());
  r.max_value = values[r.argmax_rank];
  r.mean_value =
      kernels::sum(values.data(), values.size()) / static_cast<double>(values.size());
  r.cost = r.max_value - r.mean_value;
  r.stabilizer_size = stabilizer_size(x);
  return r;
}

// Scales f to [0, 1] over the orbit of x with max 1; a constant f maps to the
// constant 1. Returns (ftilde, scale, offset) with f = scale * ftilde', where
// ftilde(z) = (f(z) - offset) / scale when nonconstant.
template <class T>
std::tuple<PayoffFn<T>, double, double> normalize(const PayoffFn<T>& f,
                                                  const TransactionList<T>& x) {
  auto values = payoff_signal(f, x);
  double lo = kernels::min_value(values.data(), values.size());
  double hi = kernels::max_value(values.data(), values.size());
  if (hi == lo) {
    PayoffFn<T> unit{[](const TransactionList<T>&) { return 1.0; },
                     f.descriptor + "|normalized(const)"};
    return {unit, 0.0, lo};
  }
  double scale = hi - lo;
  PayoffFn<T> tilde{[f, lo, scale](const TransactionList<T>& z) {
                      return (f(z) - lo) / scale;
                    },
                    f.descriptor + "|normalized"};
  return {tilde, scale, lo};
}

// E_pi f / max_pi f; homogeneous of degree zero.
template <class T>
double ratio_cost(const PayoffFn<T>& f, const TransactionList<T>& x) {
  auto r = cost(f, x);
  if (r.max_value == 0.0)
    throw std::domain_error("ratio cost undefined: max over orbit is zero");
  return r.mean_value / r.max_value;
}

template <class T>
double randomized_cost(const RandomizedPayoff<T>& f,
                       const TransactionList<T>& x) {
  return cost(f.mean(), x).cost;
}

// C(f, x) <= 1 - |F(x)|/n! for normalized f; the scaled variant
// max f * (1 - |F(x)|/n!) applies to non-normalized nonnegative f.
template <class T>
BoundCertificate stabilizer_bound(const PayoffFn<T>& f,
                                  const TransactionList<T>& x) {
  auto values = payoff_signal(f, x);
  for (std::size_t r = 0; r < values.size(); ++r)
    if (values[r] < -kBoundTol)
      throw std::invalid_argument(
          "stabilizer bound requires nonnegative f; violated at rank " +
          std::to_string(r));
  double hi = kernels::max_value(values.data(), values.size());
  double fix_frac = static_cast<double>(stabilizer_size(x)) /
                    static_cast<double>(values.size());
  bool normalized = std::abs(hi - 1.0) <= kBoundTol;
  double rhs = (normalized ? 1.0 : hi) * (1.0 - fix_frac);
  auto rep = cost(f, x);
  return make_certificate("stabilizer", rep.cost, rhs,
                          normalized ? "normalized" : "scaled");
}

// C(f, x) >= beta - alpha - |H|/n! (1 - alpha) for a payoff that is >= beta
// somewhere on H and <= alpha off H, with 0 <= alpha <= beta <= 1.
template <class T>
BoundCertificate spiky_bound(const PayoffFn<T>& f, const TransactionList<T>& x,
                             const std::set<std::uint64_t>& H, double alpha,
                             double beta) {
  if (!(0.0 <= alpha && alpha <= beta && beta <= 1.0))
    throw std::invalid_argument("spiky bound needs 0 <= alpha <= beta <= 1");
  auto values = payoff_signal(f, x);
  bool hit_beta = false;
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] > 1.0 + kBoundTol)
      throw std::invalid_argument("f must be bounded by 1; violated at rank " +
                                  std::to_string(r));
    if (H.count(r)) {
      hit_beta = hit_beta || values[r] >= beta - kBoundTol;
    } else if (values[r] > alpha + kBoundTol) {
      throw std::invalid_argument("f exceeds alpha off H at rank " +
                                  std::to_string(r));
    }
  }
  if (!hit_beta)
    throw std::invalid_argument("no permutation in H attains beta");
  double lower = beta - alpha -
                 (static_cast<double>(H.size()) / static_cast<double>(values.size())) *
                     (1.0 - alpha);
  // Lower bound: the certificate reads lower <= exact C.
  return make_certificate("spiky", lower, cost(f, x).cost);
}

template <class T>
struct ConverseSupportResult {
  BoundCertificate certificate;
  TransactionList<T> witness;  // y in S(x) with f >= alpha * 1[pi(x) = y]
};

// If C(f, x) >= alpha and f(pi(x)) >= eta 1[pi(x) in T], then
// |T| <= (1 - alpha) n! / (eta |F(x)|).
template <class T>
ConverseSupportResult<T> converse_support_bound(
    const PayoffFn<T>& f, const TransactionList<T>& x, double alpha, double eta,
    const std::vector<TransactionList<T>>& T_set) {
  if (eta <= 0.0) throw std::invalid_argument("eta must be positive");
  auto values = payoff_signal(f, x);
  for (std::size_t r = 0; r < values.size(); ++r)
    if (values[r] < -kBoundTol || values[r] > 1.0 + kBoundTol)
      throw std::invalid_argument("f must be normalized; violated at rank " +
                                  std::to_string(r));
  auto rep = cost(f, x);
  if (rep.cost < alpha - kBoundTol)
    throw std::invalid_argument("hypothesis C(f,x) >= alpha fails: C = " +
                                std::to_string(rep.cost));
  // Verify the indicator hypothesis over the whole orbit.
  std::set<TransactionList<T>> targets(T_set.begin(), T_set.end());
  std::uint64_t r = 0;
  for (const auto& p : enumerate_group(static_cast<int>(x.size()))) {
    auto img = mevcost::apply(p, x);
    if (targets.count(img) && values[r] < eta - kBoundTol)
      throw std::invalid_argument(
          "hypothesis f >= eta on T fails at rank " + std::to_string(r));
    ++r;
  }
  double bound = (1.0 - alpha) * static_cast<double>(values.size()) /
                 (eta * static_cast<double>(rep.stabilizer_size));
  auto p_star = Permutation::unrank(static_cast<int>(x.size()), rep.argmax_rank);
  return {make_certificate("converse_T", static_cast<double>(targets.size()),
                           bound),
          mevcost::apply(p_star, x)};
}

template <class T>
using PairMetric =
    std::function<double(const TransactionList<T>&, const TransactionList<T>&)>;

// |C(f, x) - C(f, y)| <= 2 L d(x, y) for L-Lipschitz f under a
// permutation-independent d. Both hypotheses are spot-verified on sampled
// permutation pairs before the certificate is produced.
template <class T>
BoundCertificate lipschitz_cost_bound(const PayoffFn<T>& f, double L,
                                      const PairMetric<T>& d,
                                      const TransactionList<T>& x,
                                      const TransactionList<T>& y,
                                      std::uint64_t seed = 0,
                                      int spot_samples = 32) {
  const int n = static_cast<int>(x.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
  for (int s = 0; s < spot_samples; ++s) {
    auto u = mevcost::apply(Permutation::unrank(n, pick(rng)), s % 2 ? x : y);
    auto v = mevcost::apply(Permutation::unrank(n, pick(rng)), s % 3 ? y : x);
    if (std::abs(f(u) - f(v)) > L * d(u, v) + kBoundTol)
      throw std::invalid_argument(
          "Lipschitz spot-check failed on sampled pair (sample " +
          std::to_string(s) + ")");
    auto p = Permutation::unrank(n, pick(rng));
    if (std::abs(d(mevcost::apply(p, u), mevcost::apply(p, v)) - d(u, v)) > kBoundTol)
      throw std::invalid_argument(
          "metric is not permutation independent (sample " + std::to_string(s) +
          ")");
  }
  double gap = std::abs(cost(f, x).cost - cost(f, y).cost);
  return make_certificate("smoothness", gap, 2.0 * L * d(x, y));
}

// C_s(f) <= 2 L t + inf_x C(f, x): one-sided check of a sampled sup estimate
// against the analytic right-hand side.
inline BoundCertificate global_smooth_bound(double sampled_cs, double L,
                                            double diameter_bound,
                                            double inf_term,
                                            std::string note = {}) {
  return make_certificate("global_smooth", sampled_cs,
                          2.0 * L * diameter_bound + inf_term, std::move(note));
}

// dtilde(x, y) = max_pi d(pi(x), pi(y)): permutation-independent lift.
template <class T>
PairMetric<T> lift_metric(const PairMetric<T>& d) {
  return [d](const TransactionList<T>& x, const TransactionList<T>& y) {
    if (x.size() != y.size())
      throw std::invalid_argument("length mismatch in lifted metric");
    double best = 0.0;
    for (const auto& p : enumerate_group(static_cast<int>(x.size())))
      best = std::max(best, d(mevcost::apply(p, x), mevcost::apply(p, y)));
    return best;
  };
}

}  // namespace mevcost
