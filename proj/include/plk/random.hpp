#pragma once

#include <cstdint>
#include <random>

#include "plk/multivector.hpp"

namespace plk {

// splitmix64 finaliser; used to derive independent per-stream seeds so that
// results do not depend on evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

  // Uniform in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

// Integer coordinates in [-bound, bound]; redrawn until nonzero.
Multivector random_vector(Rng& rng, int dim, int bound, bool dual = false);

// Each basis coefficient drawn from [-bound, bound]; may be zero or simple.
Multivector random_multivector(Rng& rng, int dim, int grade, int bound);

// Wedge of `grade` random vectors, redrawn until nonzero.
Multivector random_simple(Rng& rng, int dim, int grade, int bound);

// Redrawn until the support-space oracle rejects it. Throws InputError when
// no such element exists (grade <= 1 or grade >= dim - 1).
Multivector random_nonsimple(Rng& rng, int dim, int grade, int bound);

// Mixture used by the equivalence suites: dense and sparse random elements,
// wedges of random vectors, sums of two simple elements sharing a factor,
// and simple elements with a single perturbed coefficient.
Multivector random_test_instance(Rng& rng, int dim, int grade, int bound);

}  // namespace plk
