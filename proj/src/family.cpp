#include "plk/decomposability.hpp"
#include "plk/errors.hpp"

namespace plk {

DecomposableFamily::DecomposableFamily(std::vector<Multivector> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw InputError("family: no members");
  const auto& first = members_.front();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& m = members_[i];
    const std::string name = "member " + std::to_string(i + 1);
    if (m.is_dual() || m.dim() != first.dim() || m.grade() != first.grade()) {
      throw InputError(name + " differs in dim, grade or duality");
    }
    if (m.is_zero()) throw InputError(name + " is zero");
    if (!is_simple_oracle(m)) throw InputError(name + " is not decomposable");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (!is_simple_oracle(members_[i] + members_[j])) {
        throw InputError("sum of members " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " is not decomposable");
      }
    }
  }
}

std::string branch_name(ThreePlaneBranch b) {
  switch (b) {
    case ThreePlaneBranch::SpanBound: return "SpanBound";
    case ThreePlaneBranch::IntersectionBound: return "IntersectionBound";
    case ThreePlaneBranch::Both: return "Both";
  }
  return "?";
}

ThreePlaneResult three_plane_check(const DecomposableFamily& family) {
  const int k = family.grade();
  SupportSpace span(family.dim());
  std::optional<SupportSpace> common;
  for (const auto& m : family.members()) {
    const SupportSpace w = support_space(m);
    span = subspace_sum(span, w);
    common = common ? subspace_intersection(*common, w) : w;
  }
  const bool span_bound = span.rank() <= k + 1;
  const bool intersection_bound = common->rank() >= k - 1;
  if (!span_bound && !intersection_bound) {
    throw InvariantViolation("three-plane dichotomy failed: span dim " + std::to_string(span.rank()) +
                             ", intersection dim " + std::to_string(common->rank()));
  }
  const ThreePlaneBranch branch = span_bound && intersection_bound ? ThreePlaneBranch::Both
                                  : span_bound                     ? ThreePlaneBranch::SpanBound
                                                                   : ThreePlaneBranch::IntersectionBound;
  return {branch, span.rank(), common->rank()};
}

}  // namespace plk
