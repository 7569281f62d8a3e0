#include "plk/exterior.hpp"

#include "plk/errors.hpp"

namespace plk {
namespace {

// out[R] += sum_S a[S] * b[S u R] * shuffle_sign(S, R) over S contained in
// the key of b. Both adjunctions reduce to this with the roles fixed by the
// caller.
Multivector contract(const Multivector& a, const Multivector& b, bool result_dual) {
  Multivector out(b.dim(), b.grade() - a.grade(), result_dual);
  for (const auto& [t, bc] : b.terms()) {
    for (const auto& [s, ac] : a.terms()) {
      if ((s & t) != s) continue;
      const Mask r = t & ~s;
      out.add_term(r, shuffle_sign(s, r) * ac * bc);
    }
  }
  return out;
}

void require_same_dim(const Multivector& a, const Multivector& b, const char* what) {
  if (a.dim() != b.dim()) throw InputError(std::string(what) + ": dimension mismatch");
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_dim(a, b, "wedge");
  if (a.is_dual() != b.is_dual()) throw InputError("wedge: operands differ in duality");
  Multivector out(a.dim(), a.grade() + b.grade(), a.is_dual());
  if (out.grade() > out.dim()) return out;
  for (const auto& [s, ac] : a.terms()) {
    for (const auto& [t, bc] : b.terms()) {
      if ((s & t) != 0) continue;
      out.add_term(s | t, shuffle_sign(s, t) * ac * bc);
    }
  }
  return out;
}

Rational pairing(const Multivector& psi, const Multivector& p) {
  require_same_dim(psi, p, "pairing");
  if (psi.grade() != p.grade()) throw InputError("pairing: grade mismatch");
  if (psi.is_dual() == p.is_dual()) throw InputError("pairing: needs one dual operand");
  Rational sum = 0;
  const auto& small = psi.size() <= p.size() ? psi : p;
  const auto& large = psi.size() <= p.size() ? p : psi;
  for (const auto& [key, c] : small.terms()) {
    const auto it = large.terms().find(key);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

Multivector interior(const Multivector& phi, const Multivector& p) {
  require_same_dim(phi, p, "interior");
  if (!phi.is_dual() || p.is_dual()) throw InputError("interior: expects (covector, vector)");
  if (phi.grade() > p.grade()) throw InputError("interior: covector grade exceeds vector grade");
  return contract(phi, p, false);
}

Multivector contract_into(const Multivector& p, const Multivector& psi) {
  require_same_dim(p, psi, "contract_into");
  if (p.is_dual() || !psi.is_dual()) throw InputError("contract_into: expects (vector, covector)");
  if (p.grade() > psi.grade()) throw InputError("contract_into: vector grade exceeds covector grade");
  return contract(p, psi, true);
}

Multivector sharp(const Multivector& p, const Multivector& phi) {
  if (p.grade() < 1) throw InputError("sharp: grade must be at least 1");
  if (phi.grade() != p.grade() - 1) throw InputError("sharp: covector must have grade s-1");
  return interior(phi, p);
}

Multivector wedge_all(std::span<const Multivector> factors) {
  if (factors.empty()) throw InputError("wedge_all: empty sequence");
  Multivector acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = wedge(acc, factors[i]);
  return acc;
}

}  // namespace plk
