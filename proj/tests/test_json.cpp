#include "doctest.h"
#include "helpers.hpp"
#include "plk/errors.hpp"
#include "plk/json_io.hpp"

using namespace plk;
using testing::e;

TEST_CASE("parse a multivector") {
  const auto p = parse_multivector(
      R"({"dim": 4, "grade": 2, "dual": false, "terms": [
          {"indices": [3, 4], "coeff": "6/4"}, {"indices": [1, 2], "coeff": -2}]})");
  CHECK(p == e(4, {1, 2}, -2) + e(4, {3, 4}, Rational(3) / 2));
  CHECK(emit(p) ==
        R"({"dim":4,"grade":2,"dual":false,"terms":[{"indices":[1,2],"coeff":"-2"},{"indices":[3,4],"coeff":"3/2"}]})");
  const auto q = parse_multivector(R"({"dim": 3, "grade": 1, "dual": true, "terms": []})");
  CHECK(q.is_dual());
  CHECK(q.is_zero());
}

TEST_CASE("parse errors name the offending term") {
  CHECK_THROWS_WITH_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1, 2], "coeff": "1"}, {"indices": [1, 2], "coeff": "2"}]})"),
                       doctest::Contains("term 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1, 5], "coeff": "1"}]})"),
                       doctest::Contains("term 1"), InputError);
  CHECK_THROWS_WITH_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1, 2], "coeff": "1"}, {"indices": [2, 1], "coeff": "1"}]})"),
                       doctest::Contains("term 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1], "coeff": "1"}]})"),
                       doctest::Contains("term 1"), InputError);
  CHECK_THROWS_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1, 2], "coeff": "1/0"}]})"),
                  InputError);
  CHECK_THROWS_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": false, "terms": [
      {"indices": [1, 2], "coeff": "x"}]})"),
                  InputError);
  CHECK_THROWS_AS(parse_multivector(R"({"dim": 0, "grade": 0, "dual": false, "terms": []})"),
                  InputError);
  CHECK_FALSE(parse_multivector(R"({"dim": 4, "grade": 2, "terms": []})").is_dual());
  CHECK_THROWS_AS(parse_multivector(R"({"dim": 4, "grade": 2, "dual": 1, "terms": []})"),
                  InputError);
  CHECK_THROWS_AS(parse_multivector("{"), InputError);
  CHECK_THROWS_AS(parse_multivector("[]"), InputError);
  CHECK_THROWS_WITH_AS(parse_multivector_list(R"([{"dim": 4, "grade": 2, "dual": false, "terms": []},
      {"dim": 4, "grade": 2}])"),
                       doctest::Contains("member 2"), InputError);
}

TEST_CASE("emit and parse round trip") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    auto m = random_multivector(rng, n, trial % (n + 1), 7) * (Rational(trial + 1) / 7);
    if (trial % 3 == 0) m = m.with_dual(true);
    const std::string text = emit(m);
    const auto back = parse_multivector(text);
    CHECK(back == m);
    CHECK(back.is_dual() == m.is_dual());
    CHECK(emit(back) == text);
    CHECK(multivector_from_json(to_json(m)) == m);
  }
}
