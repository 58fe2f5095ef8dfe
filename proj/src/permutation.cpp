#include "mevcost/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace mevcost {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw DegreeError("degree " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxDegree));
}

}  // namespace

Permutation::Permutation(int n) : map_(static_cast<std::size_t>(n)) {
  check_degree(n);
  std::iota(map_.begin(), map_.end(), 0);
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  check_degree(static_cast<int>(map_.size()));
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v])
      throw std::invalid_argument("mapping is not a bijection on 0..n-1");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("invalid transposition indices");
  std::swap(p.map_[i], p.map_[j]);
  return p;
}

std::uint64_t Permutation::rank() const {
  // Factorial number system over the mapping array.
  const int n = degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (map_[j] < map_[i]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  check_degree(n);
  if (rank >= factorial(n)) throw std::out_of_range("rank exceeds n!-1");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    map[i] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(map));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("degree mismatch in composition");
  // (a*b)(j) = a(b(j)): b acts first.
  std::vector<int> map(map_.size());
  for (int j = 0; j < degree(); ++j) map[j] = map_[other.map_[j]];
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<int> map(map_.size());
  for (int j = 0; j < degree(); ++j) map[map_[j]] = j;
  return Permutation(std::move(map));
}

Parity Permutation::parity() const {
  // n minus the number of cycles, mod 2.
  const int n = degree();
  std::vector<bool> seen(map_.size(), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = map_[j]) seen[j] = true;
  }
  return ((n - cycles) % 2 == 0) ? Parity::even : Parity::odd;
}

bool Permutation::is_identity() const {
  for (int j = 0; j < degree(); ++j)
    if (map_[j] != j) return false;
  return true;
}

std::vector<Permutation> enumerate_group(int n) {
  check_degree(n);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  do {
    out.emplace_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

bool transposition_adjacent(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  int first = -1, second = -1;
  for (int j = 0; j < a.degree(); ++j) {
    if (a(j) == b(j)) continue;
    if (first < 0)
      first = j;
    else if (second < 0)
      second = j;
    else
      return false;
  }
  return second >= 0 && a(first) == b(second) && a(second) == b(first);
}

}  // namespace mevcost
