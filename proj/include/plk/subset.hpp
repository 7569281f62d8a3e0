#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "plk/rational.hpp"

namespace plk {

// Basis subsets of {1..n} as bitmasks: index i is bit (i-1). n <= 64.
using Mask = std::uint64_t;

constexpr int kMaxDim = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int index) { return Mask{1} << (index - 1); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Lexicographic order on the increasing index sequences of two subsets of the
// same size: the set owning the smallest differing index comes first.
struct LexLess {
  bool operator()(Mask a, Mask b) const {
    const Mask d = a ^ b;
    return d != 0 && (a & (d & (~d + 1))) != 0;
  }
};

// Sign of the permutation sorting the concatenation (S, T) of two disjoint
// increasing sequences: (-1)^{#{(i, j) : i in S, j in T, i > j}}.
inline int shuffle_sign(Mask s, Mask t) {
  int inversions = 0;
  while (t != 0) {
    const int j = std::countr_zero(t);
    t &= t - 1;
    const Mask above = j >= 63 ? 0 : (s >> (j + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

// All k-subsets of {1..n} in lexicographic order.
std::vector<Mask> subsets_lex(int n, int k);

// 1-based indices in increasing order.
std::vector<int> indices_of(Mask m);
Mask mask_of(const std::vector<int>& indices);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);
std::uint64_t binomial_u64(int n, int k);

}  // namespace plk
