#include "plk/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "plk/errors.hpp"

namespace plk {

Multivector::Multivector(int dim, int grade, bool dual) : dim_(dim), grade_(grade), dual_(dual) {
  if (dim < 1 || dim > kMaxDim) throw InputError("dimension must lie in [1, 64]");
  // Grades above dim are allowed and hold only the zero element.
  if (grade < 0) throw InputError("grade must be nonnegative");
}

Multivector Multivector::basis(int dim, std::vector<int> indices, bool dual, const Rational& c) {
  Multivector m(dim, static_cast<int>(indices.size()), dual);
  // Bubble sort: the sign is the parity of the swaps.
  int sign = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
      if (indices[j] > indices[j + 1]) {
        std::swap(indices[j], indices[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > dim) throw InputError("basis index out of range");
    if (i > 0 && indices[i] == indices[i - 1]) return m;
  }
  m.add_term(mask_of(indices), sign * c);
  return m;
}

Multivector Multivector::scalar(int dim, const Rational& c, bool dual) {
  Multivector m(dim, 0, dual);
  m.add_term(0, c);
  return m;
}

Multivector Multivector::vector(std::span<const Rational> coords, bool dual) {
  Multivector m(static_cast<int>(coords.size()), 1, dual);
  for (std::size_t i = 0; i < coords.size(); ++i) m.add_term(bit(static_cast<int>(i) + 1), coords[i]);
  return m;
}

Rational Multivector::coeff(Mask key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Multivector::coords() const {
  if (grade_ != 1) throw InputError("coords() needs a grade-1 element");
  std::vector<Rational> out(dim_);
  for (const auto& [key, c] : terms_) out[std::countr_zero(key)] = c;
  return out;
}

void Multivector::add_term(Mask key, const Rational& c) {
  if (popcount(key) != grade_ || (key & ~full_mask(dim_)) != 0) {
    throw InputError("basis subset does not match grade/dim");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::with_dual(bool dual) const {
  Multivector m = *this;
  m.dual_ = dual;
  return m;
}

void Multivector::check_compatible(const Multivector& other, const char* what) const {
  if (dim_ != other.dim_ || grade_ != other.grade_ || dual_ != other.dual_) {
    throw InputError(std::string(what) + ": operands differ in dim, grade or duality");
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  check_compatible(other, "addition");
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  check_compatible(other, "subtraction");
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string to_string(const Multivector& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : m.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.grade() == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << (m.is_dual() ? "e^{" : "e{");
    const auto idx = indices_of(key);
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << '}';
  }
  return os.str();
}

}  // namespace plk
