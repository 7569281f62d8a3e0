#pragma once

// Integer rescaling of a multivector for the quadratic kernels. Every
// criterion is homogeneous in P, so P may be replaced by L*P with L the lcm of
// its denominators. Small images run on __int128; large ones fall back to mpz.

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plk/multivector.hpp"

namespace plk::detail {

using Int128 = __int128;

struct IntegerImage {
  BigInt scale = 1;                              // P_int = scale * P
  std::unordered_map<Mask, BigInt> coeffs;
  std::size_t max_bits = 0;
};

inline IntegerImage integer_image(const Multivector& p) {
  IntegerImage img;
  for (const auto& [key, c] : p.terms()) {
    mpz_lcm(img.scale.get_mpz_t(), img.scale.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [key, c] : p.terms()) {
    BigInt v = c.get_num() * (img.scale / c.get_den());
    img.max_bits = std::max(img.max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    img.coeffs.emplace(key, std::move(v));
  }
  return img;
}

// True when sums of `terms` products of two image coefficients fit in 120 bits.
inline bool fits_int128(const IntegerImage& img, std::size_t log2_terms) {
  return img.max_bits <= 48 && 2 * img.max_bits + log2_terms <= 120;
}

template <class T>
T from_big(const BigInt& v);

template <>
inline BigInt from_big<BigInt>(const BigInt& v) { return v; }

template <>
inline Int128 from_big<Int128>(const BigInt& v) { return static_cast<Int128>(v.get_si()); }

inline BigInt to_big(const BigInt& v) { return v; }

inline BigInt to_big(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : v;
  BigInt hi(static_cast<unsigned long>(mag >> 64));
  BigInt lo(static_cast<unsigned long>(mag & ~0ULL));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

inline bool is_zero(const BigInt& v) { return v == 0; }
inline bool is_zero(Int128 v) { return v == 0; }

// Lookup of coefficients converted to the kernel scalar.
template <class T>
std::unordered_map<Mask, T> convert(const IntegerImage& img) {
  std::unordered_map<Mask, T> out;
  out.reserve(img.coeffs.size());
  for (const auto& [key, v] : img.coeffs) out.emplace(key, from_big<T>(v));
  return out;
}

// Sign of the permutation sorting `tuple`; 0 if it has a repeated entry.
inline int tuple_sign(const std::vector<int>& tuple) {
  int sign = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) sign = -sign;
    }
  }
  return sign;
}

inline Mask tuple_mask(const std::vector<int>& tuple) {
  Mask m = 0;
  for (int i : tuple) m |= Mask{1} << (i - 1);
  return m;
}

}  // namespace plk::detail
