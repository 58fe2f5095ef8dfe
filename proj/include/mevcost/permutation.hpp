#pragma once

// Symmetric group machinery: permutations of degree n, lexicographic
// rank/unrank, exhaustive enumeration, parity, and transposition adjacency.
//
// Convention: a permutation p moves the element at position j to position
// p[j]. Applying p to a list x therefore yields y with y[p[j]] = x[j].

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mevcost {

// Exhaustive enumeration is restricted to small degrees; 8! = 40320.
inline constexpr int kMaxDegree = 8;

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

class DegreeError : public std::runtime_error {
 public:
  explicit DegreeError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Parity { even, odd };

class Permutation {
 public:
  // Identity of degree n.
  explicit Permutation(int n);

  // From an explicit mapping array; must be a bijection on 0..n-1.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i, int j);

  // Lexicographic rank of the mapping array, 0..n!-1.
  std::uint64_t rank() const;
  static Permutation unrank(int n, std::uint64_t rank);

  int degree() const { return static_cast<int>(map_.size()); }
  int operator()(int j) const { return map_[j]; }
  const std::vector<int>& mapping() const { return map_; }

  // (a * b) acts as: first b, then a.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  Parity parity() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return a.compose(b);
}

// All n! permutations in lexicographic order of their mapping arrays;
// position i equals unrank(i). Throws DegreeError if n is out of range.
std::vector<Permutation> enumerate_group(int n);

// True iff b = a * t for a single transposition t; equivalently the mapping
// arrays differ in exactly two positions whose values are swapped.
bool transposition_adjacent(const Permutation& a, const Permutation& b);

}  // namespace mevcost
