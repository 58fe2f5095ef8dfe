#pragma once

// Group action of S_n on ordered transaction lists over a generic action
// alphabet. Alphabet elements need equality; orbit/stabilizer additionally
// use operator< for deduplication.

#include <set>
#include <stdexcept>
#include <vector>

#include "mevcost/permutation.hpp"

namespace mevcost {

template <class T>
using TransactionList = std::vector<T>;

// y[p(j)] = x[j]: the element at position j moves to position p(j).
template <class T>
TransactionList<T> apply(const Permutation& p, const TransactionList<T>& x) {
  if (static_cast<std::size_t>(p.degree()) != x.size())
    throw std::invalid_argument("permutation degree != list length");
  TransactionList<T> y(x.size());
  for (int j = 0; j < p.degree(); ++j) y[static_cast<std::size_t>(p(j))] = x[j];
  return y;
}

// F(x) = { p : p(x) = x }. Always contains the identity.
template <class T>
std::vector<Permutation> stabilizer(const TransactionList<T>& x) {
  std::vector<Permutation> fixed;
  for (const auto& p : enumerate_group(static_cast<int>(x.size())))
    if (mevcost::apply(p, x) == x) fixed.push_back(p);
  return fixed;
}

template <class T>
std::uint64_t stabilizer_size(const TransactionList<T>& x) {
  std::uint64_t count = 0;
  for (const auto& p : enumerate_group(static_cast<int>(x.size())))
    if (mevcost::apply(p, x) == x) ++count;
  return count;
}

// S(x) = { p(x) : p in S_n } with duplicates removed, in sorted order.
template <class T>
std::vector<TransactionList<T>> orbit(const TransactionList<T>& x) {
  std::set<TransactionList<T>> images;
  for (const auto& p : enumerate_group(static_cast<int>(x.size())))
    images.insert(mevcost::apply(p, x));
  return {images.begin(), images.end()};
}

}  // namespace mevcost
