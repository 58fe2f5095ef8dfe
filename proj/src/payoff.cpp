#include "mevcost/payoff.hpp"

namespace mevcost {

PayoffFn<LiqAction> liquidation_payoff(double threshold) {
  return {[threshold](const TransactionList<LiqAction>& x) {
            int liq_pos = -1;
            for (std::size_t i = 0; i < x.size(); ++i) {
              if (!x[i].liquidate) continue;
              if (liq_pos >= 0)
                throw std::domain_error("list contains multiple liquidations");
              liq_pos = static_cast<int>(i);
            }
            if (liq_pos < 0) return 0.0;
            double prefix = 0.0;
            for (int i = 0; i < liq_pos; ++i) prefix += x[i].amount;
            return prefix >= threshold ? 1.0 : 0.0;
          },
          "liquidation"};
}

TransactionList<LiqAction> basic_liquidation_list(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("basic liquidation list needs even n >= 2");
  TransactionList<LiqAction> x;
  for (int i = 0; i < n / 2; ++i) x.push_back(LiqAction::trade(1.0));
  x.push_back(LiqAction::liq());
  for (int i = 0; i < n / 2 - 1; ++i) x.push_back(LiqAction::trade(-1.0));
  return x;
}

PayoffFn<double> linear_tightness_payoff() {
  return {[](const TransactionList<double>& x) {
            if (x.empty()) return 0.0;
            double v = x[0];
            for (std::size_t i = 1; i < x.size(); ++i) v -= x[i];
            return v;
          },
          "linear_tightness"};
}

}  // namespace mevcost
