#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "plk/decomposability.hpp"
#include "plk/random.hpp"
#include "plk/young.hpp"

using namespace plk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<CriterionReport> seven_reports(const Multivector& p) {
  return {classical_pluecker(p),       dual_pluecker(p),
          contraction_criterion(p, 2), improved_pluecker(p),
          dual_improved_pluecker(p),   optimal_component_test(p),
          oracle_report(p)};
}

// Instances shared by criteria 1 and 9.
std::vector<Multivector> equivalence_suite() {
  std::vector<Multivector> out;
  const std::vector<std::pair<int, int>> cases = {{4, 2}, {5, 2}, {6, 3}, {7, 3}, {8, 4}};
  for (const auto& [n, s] : cases) {
    Rng rng(1000 + 10 * n + s);
    for (int i = 0; i < 1000; ++i) out.push_back(random_test_instance(rng, n, s, 3));
    for (int i = 0; i < 50; ++i) {
      std::vector<Multivector> vs;
      for (int j = 0; j < s; ++j) vs.push_back(random_vector(rng, n, 5));
      out.push_back(from_factors(vs));
      out.push_back(random_nonsimple(rng, n, s, 3));
    }
  }
  // Top-degree and codegree-1 elements.
  Rng rng(77);
  for (int n = 3; n <= 6; ++n) {
    for (int i = 0; i < 10; ++i) {
      out.push_back(random_multivector(rng, n, n, 5));
      out.push_back(random_multivector(rng, n, n - 1, 5));
    }
  }
  // Every 2-vector at n = 4 with coefficients in {-1, 0, 1}.
  const auto keys = subsets_lex(4, 2);
  int total = 1;
  for (std::size_t i = 0; i < keys.size(); ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Multivector p(4, 2);
    int c = code;
    for (Mask key : keys) {
      p.add_term(key, c % 3 - 1);
      c /= 3;
    }
    out.push_back(p);
  }
  return out;
}

Outcome criterion_1(const std::vector<Multivector>& suite) {
  const auto t0 = Clock::now();
  std::size_t disagreements = 0;
  std::size_t simple = 0;
  std::string first;
  for (const auto& p : suite) {
    const auto reports = seven_reports(p);
    const bool verdict = reports.back().verdict;
    simple += verdict;
    for (const auto& r : reports) {
      if (r.verdict == verdict) continue;
      if (disagreements++ == 0) first = criterion_name(r.criterion) + " on " + to_string(p);
      break;
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = disagreements == 0 && secs < 300;
  std::ostringstream os;
  os << suite.size() << " instances (" << simple << " simple), " << disagreements
     << " disagreements";
  if (secs >= 300) os << ", over the 300 s budget";
  if (!first.empty()) os << "; first: " << first;
  o.detail = os.str();
  return o;
}

Outcome criterion_2() {
  const auto p = testing::vq_form();
  const bool wedge_zero = wedge(p, p).is_zero();
  const bool improved = improved_pluecker(p).verdict;
  const bool optimal = optimal_component_test(p).verdict;
  const bool oracle = is_simple_oracle(p);
  Outcome o;
  o.pass = wedge_zero && !improved && !optimal && !oracle;
  std::ostringstream os;
  os << "P ^ P " << (wedge_zero ? "= 0" : "!= 0") << ", improved " << improved << ", optimal "
     << optimal << ", oracle " << oracle;
  o.detail = os.str();
  return o;
}

Outcome criterion_3() {
  int failures = 0;
  int worst = 0;
  int forms = 0;
  for (int n = 5; n <= 8; ++n) {
    Rng rng(3000 + n);
    for (int i = 0; i < 200; ++i) {
      Multivector p = random_multivector(rng, n, 4, 5);
      while (p.is_zero()) p = random_multivector(rng, n, 4, 5);
      ++forms;
      int used = 0;
      bool found = false;
      while (used < 50 && !found) {
        std::vector<Multivector> probes;
        for (int j = 0; j < 8; ++j) probes.push_back(random_vector(rng, n, 10).with_dual(true));
        ++used;
        found = isotypic_probe(p, {4, 4}, probes) != 0;
      }
      worst = std::max(worst, used);
      if (!found) {
        ++failures;
        std::cerr << "  Y^{4,4} probe found nothing after 50 probes: n=" << n << " "
                  << to_string(p) << '\n';
      }
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(forms) + " forms, " + std::to_string(failures) +
             " without a nonzero probe, at most " + std::to_string(worst) + " probes used";
  return o;
}

Outcome criterion_4() {
  int checked = 0;
  int failed = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (const auto& id : verify_star_star(n, s).identities) {
        ++checked;
        failed += !id.pass();
      }
    }
  }
  return {failed == 0, std::to_string(checked) + " identities, " + std::to_string(failed) + " failed"};
}

Outcome criterion_5() {
  const BigInt classical = equation_count(8, 4, {CriterionKind::Classical});
  const BigInt improved = equation_count(8, 4, {CriterionKind::Improved});
  const BigInt optimal = equation_count(8, 4, {CriterionKind::Optimal});
  bool pass = classical == 3136 && improved == 784 && optimal == dim_Y(8, {6, 2}) &&
              optimal < improved && improved < classical;
  std::ostringstream os;
  os << "n=8 s=4: " << classical.get_str() << " > " << improved.get_str() << " > "
     << optimal.get_str();
  std::vector<std::string> violations;
  for (int s = 2; s <= 4; ++s) {
    for (int n = 2 * s; n <= 12; ++n) {
      const BigInt c = equation_count(n, s, {CriterionKind::Classical});
      const BigInt i = equation_count(n, s, {CriterionKind::Improved});
      const BigInt opt = equation_count(n, s, {CriterionKind::Optimal});
      if (opt < i && i < c) continue;
      pass = false;
      violations.push_back("(" + std::to_string(n) + "," + std::to_string(s) + "): " +
                           c.get_str() + "/" + i.get_str() + "/" + opt.get_str());
    }
  }
  if (!violations.empty()) {
    os << "; strict order fails at " << violations.size() << " pairs";
    for (const auto& v : violations) os << ' ' << v;
  }
  return {pass, os.str()};
}

Outcome criterion_6() {
  std::size_t checks = 0;
  std::size_t failures = 0;
  auto run = [&](const Multivector& p, const Multivector& phi, const Multivector& psi) {
    ++checks;
    failures += !duality_identity_check(p, phi, psi);
  };
  for (int n : {4, 5}) {
    const int s = 2;
    const auto keys = subsets_lex(n, s);
    std::vector<Multivector> ps;
    for (std::size_t a = 0; a < keys.size(); ++a) {
      ps.push_back(Multivector::basis(n, indices_of(keys[a])));
      for (std::size_t b = a + 1; b < keys.size(); ++b) {
        ps.push_back(Multivector::basis(n, indices_of(keys[a])) +
                     Multivector::basis(n, indices_of(keys[b])));
      }
    }
    for (const auto& p : ps) {
      for (Mask phi : subsets_lex(n, s - 1)) {
        for (Mask psi : subsets_lex(n, s + 1)) {
          run(p, covector(n, indices_of(phi)), covector(n, indices_of(psi)));
        }
      }
    }
  }
  for (const auto& [n, s] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}}) {
    Rng rng(6000 + n);
    for (int i = 0; i < 10000; ++i) {
      const auto p = random_multivector(rng, n, s, 4) * (Rational(1) / rng.uniform(1, 9));
      const auto phi = random_multivector(rng, n, s - 1, 4).with_dual(true) *
                       (Rational(1) / rng.uniform(1, 9));
      const auto psi = random_multivector(rng, n, s + 1, 4).with_dual(true);
      run(p, phi, psi);
    }
  }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failed"};
}

Outcome criterion_7() {
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int s = 1; s <= std::min(n, 4); ++s) {
      Rng rng(7000 + 10 * n + s);
      for (int i = 0; i < 500; ++i) {
        const auto p = random_simple(rng, n, s, 6) * (Rational(rng.uniform(1, 9)) / rng.uniform(1, 9));
        const auto f = factorize(p);
        ++checks;
        if (!f || from_factors(*f) != p) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " round trips, " + std::to_string(failures) + " failed"};
}

Outcome criterion_8() {
  std::size_t families = 0;
  std::size_t failures = 0;
  for (int k = 2; k <= 3; ++k) {
    Rng rng(8000 + k);
    for (int i = 0; i < 200; ++i) {
      for (int pattern = 0; pattern < 2; ++pattern) {
        const auto members = pattern == 0 ? testing::common_intersection_family(rng, 7, k, 4, 4)
                                          : testing::common_span_family(rng, 7, k, 4, 4);
        ++families;
        try {
          const auto r = three_plane_check(DecomposableFamily(members));
          const bool expected = pattern == 0 ? r.intersection_dim >= k - 1 : r.span_dim <= k + 1;
          failures += !expected;
        } catch (const std::exception& e) {
          ++failures;
          std::cerr << "  three-plane family failed: " << e.what() << '\n';
        }
      }
    }
  }
  using testing::e;
  const auto a = three_plane_check(DecomposableFamily({e(4, {1, 2}), e(4, {1, 3}), e(4, {1, 4})}));
  const auto b = three_plane_check(DecomposableFamily({e(3, {1, 2}), e(3, {1, 3}), e(3, {2, 3})}));
  const auto c = three_plane_check(DecomposableFamily({e(3, {1, 2, 3})}));
  const bool examples = a.branch == ThreePlaneBranch::IntersectionBound &&
                        b.branch == ThreePlaneBranch::SpanBound && c.branch == ThreePlaneBranch::Both;
  return {failures == 0 && examples,
          std::to_string(families) + " families, " + std::to_string(failures) +
              " failed; examples " + (examples ? "match" : "differ")};
}

Outcome criterion_9(const std::vector<Multivector>& suite) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& p : suite) {
    if (p.is_zero()) continue;
    ++checked;
    const bool by_support = support_space(p).rank() == p.grade();
    const bool by_kernel = oracle::wedge_kernel_dim(p) == p.grade();
    failures += by_support != by_kernel;
  }
  return {failures == 0, std::to_string(checked) + " nonzero instances, " +
                             std::to_string(failures) + " disagreements"};
}

}  // namespace

int main() {
  const auto suite = equivalence_suite();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"criterion equivalence", [&] { return criterion_1(suite); }},
      {"v ^ Q counterexample", criterion_2},
      {"Y^{4,4} nonvanishing", criterion_3},
      {"decomposition identities", criterion_4},
      {"equation-count ordering", criterion_5},
      {"duality identity", criterion_6},
      {"factorization round trip", criterion_7},
      {"three-plane lemma", criterion_8},
      {"kernel cross-oracle", [&] { return criterion_9(suite); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    const Outcome o = criteria[i].second();
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s, %.1f s)\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
