#include "doctest.h"
#include "helpers.hpp"
#include "plk/decomposability.hpp"
#include "plk/errors.hpp"

using namespace plk;
using testing::e;

TEST_CASE("three-plane examples") {
  const auto a = three_plane_check(DecomposableFamily({e(4, {1, 2}), e(4, {1, 3}), e(4, {1, 4})}));
  CHECK(a.branch == ThreePlaneBranch::IntersectionBound);
  CHECK(a.intersection_dim == 1);
  CHECK(a.span_dim == 4);
  const auto b = three_plane_check(DecomposableFamily({e(3, {1, 2}), e(3, {1, 3}), e(3, {2, 3})}));
  CHECK(b.branch == ThreePlaneBranch::SpanBound);
  CHECK(b.span_dim == 3);
  CHECK(b.intersection_dim == 0);
  const auto c = three_plane_check(DecomposableFamily({e(3, {1, 2, 3})}));
  CHECK(c.branch == ThreePlaneBranch::Both);
  CHECK(branch_name(c.branch) == "Both");
}

TEST_CASE("invalid families are rejected") {
  CHECK_THROWS_AS(DecomposableFamily({}), InputError);
  CHECK_THROWS_WITH_AS(DecomposableFamily({e(4, {1, 2}), e(4, {3, 4})}),
                       doctest::Contains("members 1 and 2"), InputError);
  CHECK_THROWS_WITH_AS(DecomposableFamily({e(4, {1, 2}), e(4, {1, 2}) + e(4, {3, 4})}),
                       doctest::Contains("member 2"), InputError);
  CHECK_THROWS_AS(DecomposableFamily({e(4, {1, 2}), Multivector(4, 2)}), InputError);
  CHECK_THROWS_AS(DecomposableFamily({e(4, {1, 2}), e(5, {1, 2})}), InputError);
  CHECK_THROWS_AS(DecomposableFamily({e(4, {1, 2}), e(4, {1, 2, 3})}), InputError);
}

TEST_CASE("generated families satisfy the dichotomy") {
  Rng rng(41);
  for (int k = 2; k <= 3; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const DecomposableFamily a(testing::common_intersection_family(rng, 7, k, 4, 4));
      const auto ra = three_plane_check(a);
      CHECK(ra.intersection_dim >= k - 1);
      const DecomposableFamily b(testing::common_span_family(rng, 7, k, 4, 4));
      const auto rb = three_plane_check(b);
      CHECK(rb.span_dim <= k + 1);
    }
  }
}
