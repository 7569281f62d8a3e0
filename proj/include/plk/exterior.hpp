#pragma once

#include "plk/multivector.hpp"

namespace plk {

// Exterior product. Both operands must share dim and duality. The result of
// grade j + k is zero when j + k > dim.
Multivector wedge(const Multivector& a, const Multivector& b);

// Determinant pairing <Psi, P> with <e^S, e_T> = delta_{S,T}. Exactly one
// operand must be dual; grades must agree.
Rational pairing(const Multivector& psi, const Multivector& p);

// i(Phi)P, characterised by <i(Phi)P, Theta> = <P, Phi ^ Theta>.
// Phi dual of grade p <= s = grade(P); the result is primal of grade s - p.
Multivector interior(const Multivector& phi, const Multivector& p);

// i_P Psi, characterised by <i_P Psi, Q> = <Psi, P ^ Q>.
// P primal of grade s <= m = grade(Psi); the result is dual of grade m - s.
Multivector contract_into(const Multivector& p, const Multivector& psi);

// The map Phi -> i(Phi)P from (s-1)-covectors to vectors.
Multivector sharp(const Multivector& p, const Multivector& phi);

// Left-to-right wedge of a non-empty sequence.
Multivector wedge_all(std::span<const Multivector> factors);

}  // namespace plk
