#include "mevcost/cfmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mevcost {

namespace {
constexpr double kFeasTol = 1e-9;
constexpr double kInverseTol = 1e-10;
}  // namespace

ForwardExchangeFn ForwardExchangeFn::power(double scale, double exponent) {
  if (scale <= 0.0 || exponent <= 0.0 || exponent > 1.0)
    throw std::invalid_argument("power family needs c > 0 and p in (0, 1]");
  ForwardExchangeFn g;
  g.family_ = Family::power;
  g.scale_ = scale;
  g.exponent_ = exponent;
  g.deriv0_ = scale;  // G'(t) = c (t+1)^(p-1)
  return g;
}

ForwardExchangeFn ForwardExchangeFn::piecewise_linear(
    std::vector<double> breakpoints, std::vector<double> slopes) {
  if (breakpoints.empty() || breakpoints.front() != 0.0 ||
      slopes.size() != breakpoints.size())
    throw std::invalid_argument("breakpoints must start at 0, one slope each");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (breakpoints[i] <= breakpoints[i - 1])
      throw std::invalid_argument("breakpoints must be increasing");
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i] <= 0.0) throw std::invalid_argument("slopes must be positive");
    if (i > 0 && slopes[i] > slopes[i - 1])
      throw std::invalid_argument("slopes must be nonincreasing (concavity)");
  }
  ForwardExchangeFn g;
  g.family_ = Family::piecewise;
  g.breaks_ = std::move(breakpoints);
  g.slopes_ = std::move(slopes);
  g.deriv0_ = g.slopes_.front();
  return g;
}

double ForwardExchangeFn::operator()(double t) const {
  if (family_ == Family::power)
    return scale_ * (std::pow(t + 1.0, exponent_) - 1.0) / exponent_;
  double v = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    double hi = (i + 1 < breaks_.size()) ? breaks_[i + 1]
                                         : std::numeric_limits<double>::infinity();
    if (t <= hi) return v + slopes_[i] * (t - prev);
    v += slopes_[i] * (hi - prev);
    prev = hi;
  }
  return v;
}

double ForwardExchangeFn::inverse(double value) const {
  const auto& g = *this;
  if (value < -kInverseTol) {
    // Both families extend linearly left of zero with slope G'(0) only for
    // the power family; restrict the inverse to the nonnegative branch.
    throw std::domain_error("inverse requested below G(0) = 0");
  }
  double lo = 0.0, hi = 1.0;
  while (g(hi) < value) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e18) throw std::domain_error("value outside range of G");
  }
  while (hi - lo > kInverseTol) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < value ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void ForwardExchangeFn::validate_on_grid(double hi, int points) const {
  const auto& g = *this;
  if (std::abs(g(0.0)) > 1e-12) throw std::logic_error("G(0) != 0");
  double h = hi / (points - 1);
  double prev = g(0.0);
  double prev_diff = std::numeric_limits<double>::infinity();
  for (int i = 1; i < points; ++i) {
    double cur = g(i * h);
    double diff = cur - prev;
    if (diff < -1e-12) throw std::logic_error("G not nondecreasing");
    if (diff > prev_diff + 1e-12)
      throw std::logic_error("G not concave (second differences)");
    if (diff / h > deriv0_ + 1e-9)
      throw std::logic_error("chord slope exceeds G'(0)");
    prev_diff = diff;
    prev = cur;
  }
}

namespace {

int find_unique_validator(const CfmmList& z) {
  int pos = -1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].validator == 0.0) continue;
    if (pos >= 0)
      throw std::invalid_argument("multiple validator entries in list");
    pos = static_cast<int>(i);
  }
  if (pos < 0) throw std::invalid_argument("no validator entry in list");
  return pos;
}

double trader_l1(const CfmmList& z) {
  double s = 0.0;
  for (const auto& a : z) s += std::abs(a.trader);
  return s;
}

void check_actions(const CfmmList& z) {
  for (const auto& a : z) {
    if (a.trader < 0.0)
      throw std::invalid_argument("trader amounts must be nonnegative");
    if (a.trader != 0.0 && a.validator != 0.0)
      throw std::invalid_argument("action has both coordinates nonzero");
  }
}

}  // namespace

void validate_frontrun_list(const CfmmList& z, double volume_cap,
                            double delta) {
  check_actions(z);
  if (trader_l1(z) > volume_cap + kFeasTol)
    throw std::invalid_argument("trader volume exceeds cap M");
  int pos = find_unique_validator(z);
  if (std::abs(z[static_cast<std::size_t>(pos)].validator - delta) > kFeasTol)
    throw std::invalid_argument("validator entry must equal delta");
}

PayoffFn<CfmmAction> frontrun_payoff(const ForwardExchangeFn& G, double delta) {
  return {[G, delta](const CfmmList& z) {
            int k = find_unique_validator(z);
            double prefix = 0.0;
            for (int i = 0; i < k; ++i)
              prefix += z[static_cast<std::size_t>(i)].trader;
            return G(prefix + delta) - G(prefix);
          },
          "frontrun"};
}

double frontrun_metric(const CfmmList& z, const CfmmList& zp) {
  if (z.size() != zp.size()) throw std::invalid_argument("length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double a = std::abs(z[i].trader), b = std::abs(zp[i].trader);
    s += std::max({a, b, std::abs(z[i].trader - zp[i].trader)});
  }
  return s;
}

void validate_sandwich_list(const CfmmList& z, double volume_cap) {
  check_actions(z);
  if (trader_l1(z) > volume_cap + kFeasTol)
    throw std::invalid_argument("trader volume exceeds cap M");
  int buys = 0, sells = 0;
  for (const auto& a : z) {
    if (a.validator > 0.0) ++buys;
    if (a.validator < 0.0) ++sells;
  }
  if (buys != 1 || sells != 1)
    throw std::invalid_argument(
        "sandwich list needs exactly one validator buy and one sell");
}

PayoffFn<CfmmAction> sandwich_payoff() {
  return {[](const CfmmList& z) {
            double buy = 0.0, sell = 0.0;
            int buys = 0, sells = 0;
            for (const auto& a : z) {
              if (a.validator > 0.0) { buy = a.validator; ++buys; }
              if (a.validator < 0.0) { sell = a.validator; ++sells; }
            }
            if (buys != 1 || sells != 1)
              throw std::invalid_argument("malformed sandwich validator entries");
            return -(buy + sell);
          },
          "sandwich"};
}

bool sandwich_feasible(const CfmmList& z, const ForwardExchangeFn& G) {
  double buy = 0.0, sell = 0.0;
  for (const auto& a : z) {
    if (a.validator > 0.0) buy = a.validator;
    if (a.validator < 0.0) sell = a.validator;
  }
  double t = trader_l1(z);
  return G(t + buy) - G(t + buy + sell) <= G(buy) + kFeasTol;
}

double sandwich_binding_sell(const ForwardExchangeFn& G, double t,
                             double delta) {
  // Binding constraint: G(t + delta - gamma) = G(t + delta) - G(delta).
  double inv = G.inverse(G(t + delta) - G(delta));
  return t + delta - inv;
}

double sandwich_metric(const CfmmList& z, const CfmmList& zp) {
  return std::max(trader_l1(z), trader_l1(zp));
}

namespace {

// Trader amounts with a random support and total volume at most M.
std::vector<double> random_trader_amounts(std::mt19937_64& rng, int slots,
                                          double volume_cap) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> amounts(static_cast<std::size_t>(slots));
  double total = 0.0;
  for (auto& a : amounts) {
    a = unif(rng);
    total += a;
  }
  double budget = volume_cap * unif(rng);
  if (total > 0.0)
    for (auto& a : amounts) a *= budget / total;
  return amounts;
}

}  // namespace

CfmmList sample_frontrun_list(std::mt19937_64& rng, int n, double volume_cap,
                              double delta) {
  auto amounts = random_trader_amounts(rng, n - 1, volume_cap);
  std::uniform_int_distribution<int> pos(0, n - 1);
  int k = pos(rng);
  CfmmList z;
  std::size_t t = 0;
  for (int i = 0; i < n; ++i) {
    if (i == k)
      z.push_back({0.0, delta});
    else
      z.push_back({amounts[t++], 0.0});
  }
  return z;
}

CfmmList sample_sandwich_list(std::mt19937_64& rng, int n, double volume_cap,
                              const ForwardExchangeFn& G) {
  if (n < 2) throw std::invalid_argument("sandwich list needs n >= 2");
  auto amounts = random_trader_amounts(rng, n - 2, volume_cap);
  double t = 0.0;
  for (double a : amounts) t += a;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double delta = volume_cap * (0.05 + 0.95 * unif(rng));
  double gamma_max = sandwich_binding_sell(G, t, delta);
  double y_j = -gamma_max * (0.01 + 0.99 * unif(rng));
  std::uniform_int_distribution<int> pos(0, n - 1);
  int i = pos(rng), j = pos(rng);
  while (j == i) j = pos(rng);
  CfmmList z;
  std::size_t idx = 0;
  for (int s = 0; s < n; ++s) {
    if (s == i)
      z.push_back({0.0, delta});
    else if (s == j)
      z.push_back({0.0, y_j});
    else
      z.push_back({amounts[idx++], 0.0});
  }
  return z;
}

namespace {

// Per-coordinate ascent on the trader amounts of the best sampled list,
// projecting back onto the l1 ball of radius M.
double ascend_frontrun(CfmmList z, const PayoffFn<CfmmAction>& f,
                       double volume_cap, double start_cost) {
  double best = start_cost;
  double step = volume_cap / 4.0;
  for (int round = 0; round < 24; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i].validator != 0.0) continue;
      for (double dir : {step, -step}) {
        CfmmList trial = z;
        trial[i].trader = std::max(0.0, trial[i].trader + dir);
        double total = 0.0;
        for (const auto& a : trial) total += a.trader;
        if (total > volume_cap)
          for (auto& a : trial) a.trader *= volume_cap / total;
        double c = cost(f, trial).cost;
        if (c > best) {
          best = c;
          z = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
    if (step < 1e-9 * volume_cap) break;
  }
  return best;
}

}  // namespace

CsEstimate sampled_cs_frontrun(const ForwardExchangeFn& G, double delta,
                               double volume_cap, int n, int samples,
                               std::uint64_t seed) {
  if (delta <= 0.0 || volume_cap <= 0.0)
    throw std::invalid_argument("delta and M must be positive");
  auto f = frontrun_payoff(G, delta);
  std::mt19937_64 rng(seed);
  double best = 0.0;
  CfmmList best_list;
  for (int s = 0; s < samples; ++s) {
    auto z = sample_frontrun_list(rng, n, volume_cap, delta);
    double c = cost(f, z).cost;
    if (c >= best) {
      best = c;
      best_list = z;
    }
  }
  if (!best_list.empty()) best = ascend_frontrun(best_list, f, volume_cap, best);
  return {best, seed, samples, "monte-carlo+coordinate-ascent"};
}

CsEstimate sampled_cs_sandwich(const ForwardExchangeFn& G, double volume_cap,
                               int n, int samples, std::uint64_t seed) {
  if (volume_cap <= 0.0) throw std::invalid_argument("M must be positive");
  auto f = sandwich_payoff();
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    auto z = sample_sandwich_list(rng, n, volume_cap, G);
    if (!sandwich_feasible(z, G))
      throw std::logic_error("sampler produced infeasible sandwich list");
    best = std::max(best, cost(f, z).cost);
  }
  return {best, seed, samples, "monte-carlo"};
}

}  // namespace mevcost
