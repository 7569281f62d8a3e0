#pragma once

#include <vector>

#include "plk/exterior.hpp"
#include "plk/multivector.hpp"
#include "plk/random.hpp"

namespace testing {

using plk::Multivector;
using plk::Rational;

inline Multivector e(int n, std::vector<int> idx, const Rational& c = 1) {
  return Multivector::basis(n, std::move(idx), false, c);
}

inline Multivector vec(std::vector<Rational> coords) { return Multivector::vector(coords); }

// e_1 ^ (e_{2,3,4} + e_{5,6,7}) in dimension 7.
inline Multivector vq_form() { return e(7, {1, 2, 3, 4}) + e(7, {1, 5, 6, 7}); }

// Members u_1 ^ ... ^ u_{k-1} ^ w_i sharing a (k-1)-dimensional subspace.
inline std::vector<Multivector> common_intersection_family(plk::Rng& rng, int n, int k,
                                                           int members, int bound) {
  Multivector core = Multivector::scalar(n, 1);
  while (true) {
    core = Multivector::scalar(n, 1);
    for (int i = 0; i + 1 < k; ++i) core = plk::wedge(core, plk::random_vector(rng, n, bound));
    if (!core.is_zero()) break;
  }
  std::vector<Multivector> out;
  while (static_cast<int>(out.size()) < members) {
    const Multivector m = plk::wedge(core, plk::random_vector(rng, n, bound));
    if (!m.is_zero()) out.push_back(m);
  }
  return out;
}

// Members inside the exterior power of a fixed (k+1)-dimensional subspace.
inline std::vector<Multivector> common_span_family(plk::Rng& rng, int n, int k, int members,
                                                   int bound) {
  std::vector<Multivector> basis;
  for (int i = 0; i <= k; ++i) basis.push_back(plk::random_vector(rng, n, bound));
  std::vector<Multivector> out;
  while (static_cast<int>(out.size()) < members) {
    Multivector m = Multivector::scalar(n, 1);
    for (int i = 0; i < k; ++i) {
      Multivector v(n, 1);
      for (const auto& b : basis) v += b * Rational(rng.uniform(-bound, bound));
      m = plk::wedge(m, v);
    }
    if (!m.is_zero()) out.push_back(m);
  }
  return out;
}

}  // namespace testing
