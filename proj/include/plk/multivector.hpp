#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plk/rational.hpp"
#include "plk/subset.hpp"

namespace plk {

// A homogeneous element of the exterior algebra of V (or of V* when dual),
// dim V = n <= 64, with exact rational coefficients. Keys are basis subsets;
// zero coefficients are never stored.
class Multivector {
 public:
  using Terms = std::map<Mask, Rational, LexLess>;

  Multivector() = default;
  // The zero element of the given grade.
  Multivector(int dim, int grade, bool dual = false);

  // c * e_{indices}; indices 1-based, any order (reordering applies the sign).
  static Multivector basis(int dim, std::vector<int> indices, bool dual = false,
                           const Rational& c = 1);
  static Multivector scalar(int dim, const Rational& c, bool dual = false);
  // Grade-1 element with the given coordinates (size must equal dim).
  static Multivector vector(std::span<const Rational> coords, bool dual = false);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool is_dual() const { return dual_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(Mask key) const;
  // Coordinates of a grade-1 element.
  std::vector<Rational> coords() const;

  // Adds c to the coefficient of `key`, dropping it if the sum vanishes.
  void add_term(Mask key, const Rational& c);

  Multivector with_dual(bool dual) const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(const Rational& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& c) { return a *= c; }
  friend Multivector operator*(const Rational& c, Multivector a) { return a *= c; }
  Multivector operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.dual_ == b.dual_ &&
           a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Multivector& other, const char* what) const;

  int dim_ = 1;
  int grade_ = 0;
  bool dual_ = false;
  Terms terms_;
};

// Shorthand for dual basis elements e^{indices}.
inline Multivector covector(int dim, std::vector<int> indices, const Rational& c = 1) {
  return Multivector::basis(dim, std::move(indices), true, c);
}

// Human-readable form such as "2*e{1,2} - 1/3*e{3,4}" (e^{..} when dual).
std::string to_string(const Multivector& m);

}  // namespace plk
