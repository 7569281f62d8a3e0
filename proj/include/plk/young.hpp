#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plk/multivector.hpp"

namespace plk {

// Weakly decreasing positive row lengths.
class Partition {
 public:
  Partition() = default;
  // Throws InputError unless rows are positive and weakly decreasing.
  explicit Partition(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;  // number of cells
  int length() const { return static_cast<int>(rows_.size()); }
  // Column heights (the transpose).
  std::vector<int> columns() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rows_;
};

std::string to_string(const Partition& p);

// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

// Y^{s,t}: a Young diagram with two columns of heights s >= t >= 0.
struct TwoColumnShape {
  int first_col = 0;
  int second_col = 0;

  TwoColumnShape() = default;
  // Throws InputError unless first >= second >= 0.
  TwoColumnShape(int first, int second);

  int cells() const { return first_col + second_col; }
  Partition partition() const;

  friend auto operator<=>(const TwoColumnShape&, const TwoColumnShape&) = default;
};

// Dimension of the GL(n) irreducible for `shape` by the hook-content product.
// Zero when the shape has more than n rows.
BigInt dim_gl(int n, const Partition& shape);
BigInt dim_Y(int n, const TwoColumnShape& shape);

// Number of standard Young tableaux (hook length formula).
BigInt standard_tableaux(const Partition& shape);

struct StarStarIdentity {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool pass() const { return lhs == rhs; }
};

struct StarStarReport {
  int n = 0;
  int s = 0;
  // dim Y^{s+j,s-j} for j = 0..s (zero when s+j > n).
  std::vector<std::pair<TwoColumnShape, BigInt>> components;
  std::vector<StarStarIdentity> identities;
  bool pass() const;
};

// Checks the two-column splittings of Lambda^s (x) Lambda^s and of its
// symmetric and exterior squares, and of Lambda^{s+1} (x) Lambda^{s-1} and
// Lambda^{s+2} (x) Lambda^{s-2}, as exact integer identities.
StarStarReport verify_star_star(int n, int s);

// chi_shape(class) for the symmetric group, by Murnaghan-Nakayama.
BigInt sym_character(const Partition& shape, const Partition& cls);
// Number of permutations of cycle type `cls`.
BigInt class_size(const Partition& cls);

// Central isotypic projector for `shape` applied to P (x) P and evaluated at
// 2s probe covectors. A nonzero value certifies that the component is nonzero.
Rational isotypic_probe(const Multivector& p, const TwoColumnShape& shape,
                        std::span<const Multivector> probes);

// Index of one coefficient of the Y^{s+2,s-2} projection of P (x) P:
// s-2 unordered index pairs a_j <= b_j and a 4-set c < d < e < f, 1-based.
struct S2Index {
  std::vector<std::pair<int, int>> pairs;
  std::array<int, 4> quad{};

  friend auto operator<=>(const S2Index&, const S2Index&) = default;
};

// Nonzero coefficients of the projection obtained by skewing over cdef and
// symmetrising each pair a_j b_j of P_{a_1..a_{s-2} cd} P_{b_1..b_{s-2} ef}.
// The pair symmetrisation is an average over 2^{s-2} terms and the skew part
// is scaled to the wedge normalisation, so for s = 2 the family is P ^ P.
std::map<S2Index, Rational> young_project_s2_coefficients(const Multivector& p);

// Enumerates every coefficient in S2Index order and passes the nonzero ones
// to `visit`, stopping early if it returns false. Returns the number of
// coefficients enumerated.
std::uint64_t for_each_s2_coefficient(
    const Multivector& p,
    const std::function<bool(const S2Index&, const Rational&)>& visit);

// Size of the coefficient family: (n(n+1)/2)^{s-2} * C(n,4).
std::uint64_t s2_coefficient_count(int n, int s);

}  // namespace plk
