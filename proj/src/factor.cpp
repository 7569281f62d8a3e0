#include "plk/decomposability.hpp"
#include "plk/errors.hpp"
#include "plk/exterior.hpp"

namespace plk {

std::optional<std::vector<Multivector>> factorize(const Multivector& p) {
  if (p.is_dual()) throw InputError("factorize: expects a primal multivector");
  if (p.is_zero() || p.grade() == 0) return std::nullopt;
  const SupportSpace w = support_space(p);
  if (w.rank() != p.grade()) return std::nullopt;
  // P = c * w_1 ^ ... ^ w_s for the echelon basis; compare one coefficient.
  std::vector<Multivector> factors = w.basis();
  const Multivector unit = wedge_all(factors);
  const auto& [key, value] = *p.terms().begin();
  factors.front() *= value / unit.coeff(key);
  return factors;
}

Multivector from_factors(std::span<const Multivector> vectors) {
  if (vectors.empty()) throw InputError("from_factors: no vectors");
  for (const auto& v : vectors) {
    if (v.grade() != 1 || v.is_dual()) throw InputError("from_factors: factors must be vectors");
    if (v.dim() != vectors.front().dim()) throw InputError("from_factors: dimension mismatch");
  }
  return wedge_all(vectors);
}

}  // namespace plk
