#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plk/multivector.hpp"
#include "plk/support_space.hpp"

namespace plk {

enum class CriterionKind {
  Classical,     // i(Phi)P ^ P = 0, Phi in Lambda^{s-1}V*
  Dual,          // i(i_P Psi)P = 0, Psi in Lambda^{s+1}V*
  Contraction,   // every contraction by s-k covectors passes Classical
  Improved,      // i(Psi)P ^ P = 0, Psi in Lambda^{s-2}V*
  DualImproved,  // i(i_P Psi)P = 0, Psi in Lambda^{s+2}V*
  Optimal,       // Y^{s+2,s-2} component of P (x) P vanishes
  Oracle,        // dim Im(sharp_P) == s
};

struct Criterion {
  CriterionKind kind = CriterionKind::Oracle;
  int k = 2;  // only meaningful for Contraction

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

std::string criterion_name(const Criterion& c);
// Accepts classical, dual, contraction, improved, dual-improved, optimal,
// oracle. Throws InputError otherwise.
Criterion parse_criterion(const std::string& name, int k = 2);

// The first equation found to fail, in lexicographic enumeration order.
struct Witness {
  // Basis covector quantified over: e^S for Classical/Improved and for the
  // Plücker test applied inside Contraction, e^T for Dual/DualImproved.
  Mask covector = 0;
  // Contraction (symbolic): the monomial, one (a <= b) pair of coordinate
  // indices per contracting covector. Optimal: the symmetrised index pairs.
  std::vector<std::pair<int, int>> pairs = {};
  // Contraction (randomized): the covectors that were contracted into P.
  std::vector<Multivector> alphas = {};
  // Basis element of the output that is nonzero, and its value.
  Mask component = 0;
  Rational value;
};

struct CriterionReport {
  Criterion criterion;
  bool verdict = true;
  std::uint64_t equations_checked = 0;
  std::optional<Witness> witness;  // present iff !verdict
  bool probabilistic = false;      // randomized "true" verdicts only
  std::optional<std::uint64_t> seed;
};

std::string describe_witness(const CriterionReport& report);

CriterionReport classical_pluecker(const Multivector& p);
CriterionReport dual_pluecker(const Multivector& p);
CriterionReport improved_pluecker(const Multivector& p);
CriterionReport dual_improved_pluecker(const Multivector& p);

enum class ContractionMode { Symbolic, Randomized };

struct ContractionOptions {
  ContractionMode mode = ContractionMode::Symbolic;
  int trials = 64;
  std::uint64_t seed = 0;
  int bound = 10;  // randomized covector entries are drawn from [-bound, bound]
};

// Requires 2 <= k <= s (InputError otherwise); grades 0 and 1 are vacuously
// simple and ignore k.
CriterionReport contraction_criterion(const Multivector& p, int k,
                                      const ContractionOptions& options = {});

// Requires s >= 2.
CriterionReport optimal_component_test(const Multivector& p);

// Support-space rank test; the zero multivector is simple.
bool is_simple_oracle(const Multivector& p);
CriterionReport oracle_report(const Multivector& p);

// Runs one criterion by selector (Contraction uses `options`).
CriterionReport run_criterion(const Criterion& c, const Multivector& p,
                              const ContractionOptions& options = {});

// Vectors whose left-to-right wedge is exactly P. The first factor carries the
// scale; the rest are the echelon basis of the support space. Empty optional
// when P is not simple or is zero.
std::optional<std::vector<Multivector>> factorize(const Multivector& p);

Multivector from_factors(std::span<const Multivector> vectors);

// <P ^ i(Phi)P, Psi> == (-1)^{s-1} <i(i_P Psi)P, Phi>.
bool duality_identity_check(const Multivector& p, const Multivector& phi,
                            const Multivector& psi);

// Number of scalar equations each criterion imposes on an s-vector in dim n.
// Contraction(k) counts the coefficients of the symbolic expansion. Oracle is
// not an equation family and raises InputError.
BigInt equation_count(int n, int s, const Criterion& criterion);

// Nonzero decomposable k-vectors whose pairwise sums are decomposable.
class DecomposableFamily {
 public:
  // Throws InputError naming the first offending member or pair.
  explicit DecomposableFamily(std::vector<Multivector> members);

  const std::vector<Multivector>& members() const { return members_; }
  int dim() const { return members_.front().dim(); }
  int grade() const { return members_.front().grade(); }

 private:
  std::vector<Multivector> members_;
};

enum class ThreePlaneBranch { SpanBound, IntersectionBound, Both };

std::string branch_name(ThreePlaneBranch b);

struct ThreePlaneResult {
  ThreePlaneBranch branch;
  int span_dim;
  int intersection_dim;
};

// Throws InvariantViolation if neither dim(sum W_i) <= k+1 nor
// dim(cap W_i) >= k-1.
ThreePlaneResult three_plane_check(const DecomposableFamily& family);

}  // namespace plk
