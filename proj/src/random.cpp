#include "plk/random.hpp"

#include "plk/decomposability.hpp"
#include "plk/errors.hpp"
#include "plk/exterior.hpp"

namespace plk {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Multivector random_vector(Rng& rng, int dim, int bound, bool dual) {
  if (bound < 1) throw InputError("random bound must be positive");
  while (true) {
    std::vector<Rational> coords(dim);
    for (auto& c : coords) c = rng.uniform(-bound, bound);
    Multivector v = Multivector::vector(coords, dual);
    if (!v.is_zero()) return v;
  }
}

Multivector random_multivector(Rng& rng, int dim, int grade, int bound) {
  Multivector m(dim, grade);
  for (Mask key : subsets_lex(dim, grade)) m.add_term(key, rng.uniform(-bound, bound));
  return m;
}

Multivector random_simple(Rng& rng, int dim, int grade, int bound) {
  if (grade == 0) return Multivector::scalar(dim, random_vector(rng, 1, bound).coeff(1));
  while (true) {
    std::vector<Multivector> factors;
    for (int i = 0; i < grade; ++i) factors.push_back(random_vector(rng, dim, bound));
    Multivector p = from_factors(factors);
    if (!p.is_zero()) return p;
  }
}

Multivector random_nonsimple(Rng& rng, int dim, int grade, int bound) {
  if (grade <= 1 || grade >= dim - 1) {
    throw InputError("every " + std::to_string(grade) + "-vector in dimension " + std::to_string(dim) +
                     " is simple");
  }
  while (true) {
    Multivector p = random_multivector(rng, dim, grade, bound);
    if (!is_simple_oracle(p)) return p;
  }
}

Multivector random_test_instance(Rng& rng, int dim, int grade, int bound) {
  while (true) {
    Multivector p(dim, grade);
    switch (rng.uniform(0, 4)) {
      case 0:
        p = random_multivector(rng, dim, grade, bound);
        break;
      case 1:
        for (Mask key : subsets_lex(dim, grade)) {
          if (rng.uniform(0, 3) == 0) p.add_term(key, rng.uniform(-bound, bound));
        }
        break;
      case 2:
        p = random_simple(rng, dim, grade, bound);
        break;
      case 3: {
        // u_1^..^u_c^(v_1^..) + u_1^..^u_c^(w_1^..): simple iff the tails
        // combine, which happens when c >= grade - 1.
        if (grade == 0) break;
        const int common = static_cast<int>(rng.uniform(0, grade - 1));
        Multivector shared = Multivector::scalar(dim, 1);
        for (int i = 0; i < common; ++i) shared = wedge(shared, random_vector(rng, dim, bound));
        Multivector a = shared, b = shared;
        for (int i = common; i < grade; ++i) {
          a = wedge(a, random_vector(rng, dim, bound));
          b = wedge(b, random_vector(rng, dim, bound));
        }
        p = a + b;
        break;
      }
      default: {
        p = random_simple(rng, dim, grade, bound);
        const auto keys = subsets_lex(dim, grade);
        p.add_term(keys[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(keys.size()) - 1))],
                   rng.uniform(1, bound));
        break;
      }
    }
    if (!p.is_zero()) return p;
  }
}

}  // namespace plk
