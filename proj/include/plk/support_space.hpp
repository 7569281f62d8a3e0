#pragma once

#include <span>
#include <vector>

#include "plk/multivector.hpp"

namespace plk {

// A linear subspace of V stored as the nonzero rows of a reduced row-echelon
// basis. Two SupportSpaces for the same subspace compare equal.
class SupportSpace {
 public:
  explicit SupportSpace(int dim) : dim_(dim) {}

  // Echelon basis of span(vectors); each must be primal of grade 1.
  static SupportSpace span_of(int dim, std::span<const Multivector> vectors);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Multivector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Multivector& v) const;

  friend bool operator==(const SupportSpace&, const SupportSpace&) = default;

 private:
  int dim_;
  std::vector<Multivector> basis_;
  std::vector<int> pivots_;  // 1-based pivot index of each basis vector
};

// W = Im(sharp_P): the smallest subspace U with P in Lambda^s U. Empty for
// P = 0; for grade 0 the support is taken to be {0}.
SupportSpace support_space(const Multivector& p);

SupportSpace subspace_sum(const SupportSpace& a, const SupportSpace& b);
SupportSpace subspace_intersection(const SupportSpace& a, const SupportSpace& b);

}  // namespace plk
