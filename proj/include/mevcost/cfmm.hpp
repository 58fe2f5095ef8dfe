#pragma once

// Constant function market maker machinery: the concave forward exchange
// function G, the frontrun and sandwich action spaces with their
// pseudo-metrics and payoffs, and sampled estimates of the sup-cost C_s.

#include <cstdint>
#include <vector>

#include "mevcost/cost.hpp"
#include "mevcost/payoff.hpp"

namespace mevcost {

// Nondecreasing concave G with G(0) = 0. Two concrete families: power-concave
// G(t) = c ((t+1)^p - 1) / p with p in (0,1], and piecewise-linear concave
// with strictly decreasing positive slopes.
class ForwardExchangeFn {
 public:
  static ForwardExchangeFn power(double scale, double exponent);
  // breakpoints start at 0; slopes[i] applies on [breaks[i], breaks[i+1]).
  static ForwardExchangeFn piecewise_linear(std::vector<double> breakpoints,
                                            std::vector<double> slopes);

  double operator()(double t) const;
  double derivative_at_zero() const { return deriv0_; }

  // G^{-1} by bisection to 1e-10 absolute tolerance; G must be strictly
  // increasing for the family in use.
  double inverse(double value) const;

  // Checks G(0) = 0, monotonicity, concavity (second differences <= 0) and
  // G'(0) >= chord slopes on a uniform grid over [0, hi]. Throws on failure.
  void validate_on_grid(double hi, int points = 257) const;

 private:
  ForwardExchangeFn() = default;
  enum class Family { power, piecewise } family_ = Family::power;
  double scale_ = 1.0, exponent_ = 1.0, deriv0_ = 1.0;
  std::vector<double> breaks_, slopes_;
};

// One action: a trader trade or a validator trade, never both.
struct CfmmAction {
  double trader = 0.0;     // nonnegative
  double validator = 0.0;  // frontrun: 0 or delta; sandwich: one >0, one <0

  bool operator==(const CfmmAction&) const = default;
  auto operator<=>(const CfmmAction&) const = default;
};

using CfmmList = TransactionList<CfmmAction>;

// --- Frontrunning (one validator trade of size delta) ---

// Throws std::invalid_argument unless: every trader amount >= 0 with l1 norm
// <= M, exactly one validator entry, equal to delta, and no action with both
// coordinates nonzero.
void validate_frontrun_list(const CfmmList& z, double volume_cap, double delta);

// f(z) = G(x_1 + ... + x_{k-1} + delta) - G(x_1 + ... + x_{k-1}) where k is
// the unique validator position.
PayoffFn<CfmmAction> frontrun_payoff(const ForwardExchangeFn& G, double delta);

// d(z, z') = sum_i max{|x_i|, |x'_i|, |x_i - x'_i|}. Permutation-independent
// pseudo-metric with d(z, z) = sum |x_i| in general.
double frontrun_metric(const CfmmList& z, const CfmmList& zp);

// --- Sandwiching (validator buy y_i > 0 and sell y_j < 0) ---

void validate_sandwich_list(const CfmmList& z, double volume_cap);

// f(z) = -(y_i + y_j), nonnegative on feasible lists.
PayoffFn<CfmmAction> sandwich_payoff();

// G(t + y_i) - G(t + y_i + y_j) <= G(y_i) + 1e-9 with t the total trader
// volume.
bool sandwich_feasible(const CfmmList& z, const ForwardExchangeFn& G);

// Largest feasible sell amount gamma = -y_j for trader volume t and buy
// delta, from the binding feasibility constraint:
// gamma = t + delta - G^{-1}(G(t + delta) - G(delta)).
// The corresponding payoff is gamma - delta.
double sandwich_binding_sell(const ForwardExchangeFn& G, double t,
                             double delta);

// d(z, z') = max{||x||_1, ||x'||_1}
double sandwich_metric(const CfmmList& z, const CfmmList& zp);

// Lists with the sandwich sell amount chosen within the feasible interval.
CfmmList sample_sandwich_list(std::mt19937_64& rng, int n, double volume_cap,
                              const ForwardExchangeFn& G);
CfmmList sample_frontrun_list(std::mt19937_64& rng, int n, double volume_cap,
                              double delta);

// Monte Carlo + per-coordinate ascent lower estimate of
// C_s = sup_{z in B} C(f, z). Never an upper bound.
struct CsEstimate {
  double value = 0.0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string method;
};

CsEstimate sampled_cs_frontrun(const ForwardExchangeFn& G, double delta,
                               double volume_cap, int n, int samples,
                               std::uint64_t seed);
CsEstimate sampled_cs_sandwich(const ForwardExchangeFn& G, double volume_cap,
                               int n, int samples, std::uint64_t seed);

}  // namespace mevcost
