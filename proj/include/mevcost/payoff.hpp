#pragma once

// Payoff-function families: indicators and worst-cost functions, the
// liquidation payoff, the linear tightness example, lookup-table payoffs and
// the randomized fair wrapper. CFMM payoffs live in cfmm.hpp.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mevcost/action.hpp"
#include "mevcost/permutation.hpp"

namespace mevcost {

template <class T>
struct PayoffFn {
  std::function<double(const TransactionList<T>&)> eval;
  std::string descriptor;

  double operator()(const TransactionList<T>& x) const { return eval(x); }
};

// f(z) = 1[z = y]
template <class T>
PayoffFn<T> indicator_payoff(TransactionList<T> y) {
  return {[y = std::move(y)](const TransactionList<T>& z) {
            return z == y ? 1.0 : 0.0;
          },
          "indicator"};
}

// f(x) = 1 iff x equals the canonical element of its own orbit. The default
// canonical choice is the lexicographically smallest orbit element; an
// explicit choice maps that default representative to another orbit element.
template <class T>
PayoffFn<T> global_worst_cost_payoff(
    std::map<TransactionList<T>, TransactionList<T>> canonical_choice = {}) {
  return {[choice = std::move(canonical_choice)](const TransactionList<T>& x) {
            auto members = orbit(x);
            const TransactionList<T>& rep = members.front();  // sorted: lex min
            const TransactionList<T>* canon = &rep;
            if (auto it = choice.find(rep); it != choice.end()) {
              bool in_orbit = false;
              for (const auto& m : members)
                if (m == it->second) { in_orbit = true; break; }
              if (!in_orbit)
                throw std::invalid_argument(
                    "canonical choice is not a member of the orbit");
              canon = &it->second;
            }
            return x == *canon ? 1.0 : 0.0;
          },
          "global_worst_cost"};
}

// f(pi(x)) = sum_{y in S(x)} f(y) 1[pi(x) = y]; returns the (y, f(y)) pairs.
template <class T>
std::vector<std::pair<TransactionList<T>, double>> basis_decompose(
    const PayoffFn<T>& f, const TransactionList<T>& x) {
  std::vector<std::pair<TransactionList<T>, double>> terms;
  for (const auto& y : orbit(x)) terms.emplace_back(y, f(y));
  return terms;
}

// Alphabet element for the liquidation payoff: a signed trade or the single
// liquidation marker.
struct LiqAction {
  double amount = 0.0;
  bool liquidate = false;

  static LiqAction trade(double a) { return {a, false}; }
  static LiqAction liq() { return {0.0, true}; }

  bool operator==(const LiqAction&) const = default;
  auto operator<=>(const LiqAction&) const = default;
};

// f(x) = 1 iff the trades before the liquidation marker sum to at least the
// threshold p. Lists must contain at most one marker.
PayoffFn<LiqAction> liquidation_payoff(double threshold);

// Convenience: builds (+1 x m, L, -1 x (n-m-1)) with the default threshold n/2.
TransactionList<LiqAction> basic_liquidation_list(int n);

// f(x) = x_1 - x_2 - ... - x_n
PayoffFn<double> linear_tightness_payoff();

// Payoff defined by a value per permutation rank: f(pi(x)) = values[rank(pi)].
// Rejected if the table is incomplete or not constant on stabilizer cosets.
template <class T>
PayoffFn<T> table_payoff(const std::vector<double>& values,
                         const TransactionList<T>& x) {
  const int n = static_cast<int>(x.size());
  if (values.size() != factorial(n))
    throw std::invalid_argument("table must cover all n! ranks");
  std::map<TransactionList<T>, double> lookup;
  std::uint64_t r = 0;
  for (const auto& p : enumerate_group(n)) {
    auto img = mevcost::apply(p, x);
    auto [it, inserted] = lookup.emplace(img, values[r]);
    if (!inserted && it->second != values[r])
      throw std::invalid_argument(
          "table is not constant on stabilizer cosets (ill-defined)");
    ++r;
  }
  return {[lookup = std::move(lookup)](const TransactionList<T>& z) {
            auto it = lookup.find(z);
            if (it == lookup.end())
              throw std::invalid_argument("list outside the table's orbit");
            return it->second;
          },
          "table"};
}

// f : A^n x Omega -> R with a finite weighted sample space.
template <class T>
struct RandomizedPayoff {
  std::function<double(const TransactionList<T>&, std::size_t)> eval;
  std::vector<double> weights;  // nonnegative, sum to 1 within 1e-12
  std::string descriptor;

  RandomizedPayoff(
      std::function<double(const TransactionList<T>&, std::size_t)> e,
      std::vector<double> w, std::string d)
      : eval(std::move(e)), weights(std::move(w)), descriptor(std::move(d)) {
    double total = 0.0;
    for (double p : weights) {
      if (p < 0.0) throw std::invalid_argument("negative probability weight");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("probability weights must sum to 1");
  }

  // The deterministic reduction fbar(x) = E_omega f(x, omega).
  PayoffFn<T> mean() const {
    return {[eval = eval, weights = weights](const TransactionList<T>& x) {
              double e = 0.0;
              for (std::size_t w = 0; w < weights.size(); ++w)
                e += weights[w] * eval(x, w);
              return e;
            },
            descriptor + "|mean"};
  }
};

// Omega = S_n uniform, ftilde(x, omega) = f(omega(x)). Perfectly fair in
// expectation: the randomized cost of the result is 0.
template <class T>
RandomizedPayoff<T> fair_wrapper(const PayoffFn<T>& f, int n) {
  auto group = enumerate_group(n);
  std::vector<double> weights(group.size(), 1.0 / static_cast<double>(group.size()));
  return RandomizedPayoff<T>(
      [f, group = std::move(group)](const TransactionList<T>& x, std::size_t w) {
        return f(mevcost::apply(group[w], x));
      },
      std::move(weights), "fair_wrapper(" + f.descriptor + ")");
}

}  // namespace mevcost
