#include <sstream>

#include "plk/decomposability.hpp"
#include "plk/errors.hpp"
#include "plk/exterior.hpp"
#include "plk/young.hpp"

namespace plk {
namespace {

void require_primal(const Multivector& p, const char* what) {
  if (p.is_dual()) throw InputError(std::string(what) + ": expects a primal multivector");
}

CriterionReport vacuous(CriterionKind kind, int k = 2) {
  CriterionReport r;
  r.criterion = {kind, k};
  return r;
}

// i(e^S)P ^ P over every basis covector e^S of grade s - drop.
CriterionReport wedge_relations(const Multivector& p, int drop, CriterionKind kind) {
  const int n = p.dim();
  const int s = p.grade();
  CriterionReport r = vacuous(kind);
  const std::uint64_t per_equation = binomial_u64(n, s + drop);
  for (Mask sub : subsets_lex(n, s - drop)) {
    const Multivector image = wedge(interior(covector(n, indices_of(sub)), p), p);
    r.equations_checked += per_equation;
    if (!image.is_zero() && r.verdict) {
      r.verdict = false;
      const auto& [key, value] = *image.terms().begin();
      r.witness = Witness{.covector = sub, .component = key, .value = value};
    }
  }
  return r;
}

// i(i_P e^T)P over every basis covector e^T of grade s + lift.
CriterionReport dual_relations(const Multivector& p, int lift, CriterionKind kind) {
  const int n = p.dim();
  const int s = p.grade();
  CriterionReport r = vacuous(kind);
  const std::uint64_t per_equation = binomial_u64(n, s - lift);
  for (Mask sub : subsets_lex(n, s + lift)) {
    const Multivector image = interior(contract_into(p, covector(n, indices_of(sub))), p);
    r.equations_checked += per_equation;
    if (!image.is_zero() && r.verdict) {
      r.verdict = false;
      const auto& [key, value] = *image.terms().begin();
      r.witness = Witness{.covector = sub, .component = key, .value = value};
    }
  }
  return r;
}

std::string set_string(Mask m, bool dual) {
  std::ostringstream os;
  os << (dual ? "e^{" : "e{");
  const auto idx = indices_of(m);
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

std::string pairs_string(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    os << (i ? " " : "") << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  return os.str();
}

}  // namespace

std::string criterion_name(const Criterion& c) {
  switch (c.kind) {
    case CriterionKind::Classical: return "classical";
    case CriterionKind::Dual: return "dual";
    case CriterionKind::Contraction: return "contraction(k=" + std::to_string(c.k) + ")";
    case CriterionKind::Improved: return "improved";
    case CriterionKind::DualImproved: return "dual-improved";
    case CriterionKind::Optimal: return "optimal";
    case CriterionKind::Oracle: return "oracle";
  }
  return "?";
}

Criterion parse_criterion(const std::string& name, int k) {
  if (name == "classical") return {CriterionKind::Classical};
  if (name == "dual") return {CriterionKind::Dual};
  if (name == "contraction") return {CriterionKind::Contraction, k};
  if (name == "improved") return {CriterionKind::Improved};
  if (name == "dual-improved") return {CriterionKind::DualImproved};
  if (name == "optimal") return {CriterionKind::Optimal};
  if (name == "oracle") return {CriterionKind::Oracle};
  throw InputError("unknown criterion '" + name + "'");
}

std::string describe_witness(const CriterionReport& report) {
  if (!report.witness) return "";
  const Witness& w = *report.witness;
  std::ostringstream os;
  switch (report.criterion.kind) {
    case CriterionKind::Classical:
      os << "Phi=" << set_string(w.covector, true) << ": (i(Phi)P ^ P)";
      break;
    case CriterionKind::Improved:
      os << "Psi=" << set_string(w.covector, true) << ": (i(Psi)P ^ P)";
      break;
    case CriterionKind::Dual:
    case CriterionKind::DualImproved:
      os << "Psi=" << set_string(w.covector, true) << ": (i(i_P Psi)P)";
      break;
    case CriterionKind::Contraction:
      if (w.alphas.empty() && w.pairs.empty()) {
        // k = s: no contraction, the classical relations themselves.
        os << "Phi=" << set_string(w.covector, true) << ": (i(Phi)P ^ P)";
      } else if (!w.alphas.empty()) {
        os << "alphas=[";
        for (std::size_t i = 0; i < w.alphas.size(); ++i) os << (i ? "; " : "") << to_string(w.alphas[i]);
        os << "] Phi=" << set_string(w.covector, true) << ": (i(Phi)Q ^ Q)";
      } else {
        os << "monomial " << pairs_string(w.pairs) << " Phi=" << set_string(w.covector, true)
           << ": coefficient of (i(Phi)Q ^ Q)";
      }
      break;
    case CriterionKind::Optimal:
      if (!w.pairs.empty()) os << "pairs " << pairs_string(w.pairs) << ": ";
      os << "projection";
      break;
    case CriterionKind::Oracle:
      os << "dim W = " << to_string(w.value) << " with pivots " << set_string(w.component, false);
      return os.str();
  }
  os << '[' << set_string(w.component, false) << "] = " << to_string(w.value);
  return os.str();
}

CriterionReport classical_pluecker(const Multivector& p) {
  require_primal(p, "classical_pluecker");
  if (p.grade() <= 1) return vacuous(CriterionKind::Classical);
  return wedge_relations(p, 1, CriterionKind::Classical);
}

CriterionReport improved_pluecker(const Multivector& p) {
  require_primal(p, "improved_pluecker");
  if (p.grade() <= 1) return vacuous(CriterionKind::Improved);
  return wedge_relations(p, 2, CriterionKind::Improved);
}

CriterionReport dual_pluecker(const Multivector& p) {
  require_primal(p, "dual_pluecker");
  if (p.grade() <= 1) return vacuous(CriterionKind::Dual);
  return dual_relations(p, 1, CriterionKind::Dual);
}

CriterionReport dual_improved_pluecker(const Multivector& p) {
  require_primal(p, "dual_improved_pluecker");
  if (p.grade() <= 1) return vacuous(CriterionKind::DualImproved);
  return dual_relations(p, 2, CriterionKind::DualImproved);
}

CriterionReport optimal_component_test(const Multivector& p) {
  require_primal(p, "optimal_component_test");
  if (p.grade() < 2) throw InputError("optimal_component_test: grade must be at least 2");
  CriterionReport r = vacuous(CriterionKind::Optimal);
  for_each_s2_coefficient(p, [&](const S2Index& idx, const Rational& v) {
    r.verdict = false;
    r.witness = Witness{.pairs = idx.pairs,
                        .component = mask_of({idx.quad.begin(), idx.quad.end()}),
                        .value = v};
    return false;
  });
  // Enumeration stops at the witness; report the size of the whole family.
  r.equations_checked = s2_coefficient_count(p.dim(), p.grade());
  return r;
}

bool is_simple_oracle(const Multivector& p) {
  require_primal(p, "is_simple_oracle");
  if (p.grade() <= 1 || p.is_zero()) return true;
  return support_space(p).rank() == p.grade();
}

CriterionReport oracle_report(const Multivector& p) {
  require_primal(p, "is_simple_oracle");
  CriterionReport r = vacuous(CriterionKind::Oracle);
  if (p.grade() <= 1 || p.is_zero()) return r;
  const SupportSpace w = support_space(p);
  r.equations_checked = binomial_u64(p.dim(), p.grade() - 1);
  if (w.rank() != p.grade()) {
    r.verdict = false;
    r.witness = Witness{.component = mask_of(w.pivots()), .value = w.rank()};
  }
  return r;
}

CriterionReport run_criterion(const Criterion& c, const Multivector& p,
                              const ContractionOptions& options) {
  switch (c.kind) {
    case CriterionKind::Classical: return classical_pluecker(p);
    case CriterionKind::Dual: return dual_pluecker(p);
    case CriterionKind::Contraction: return contraction_criterion(p, c.k, options);
    case CriterionKind::Improved: return improved_pluecker(p);
    case CriterionKind::DualImproved: return dual_improved_pluecker(p);
    case CriterionKind::Optimal: return optimal_component_test(p);
    case CriterionKind::Oracle: return oracle_report(p);
  }
  throw InputError("unknown criterion");
}

bool duality_identity_check(const Multivector& p, const Multivector& phi, const Multivector& psi) {
  require_primal(p, "duality_identity_check");
  const int s = p.grade();
  if (s < 1 || !phi.is_dual() || !psi.is_dual() || phi.grade() != s - 1 ||
      psi.grade() != s + 1 || phi.dim() != p.dim() || psi.dim() != p.dim()) {
    throw InputError("duality_identity_check: expects P in L^s, Phi in L^{s-1}*, Psi in L^{s+1}*");
  }
  const Rational lhs = pairing(psi, wedge(p, interior(phi, p)));
  const Rational rhs = pairing(phi, interior(contract_into(p, psi), p));
  return lhs == ((s - 1) % 2 == 0 ? rhs : Rational(-rhs));
}

BigInt equation_count(int n, int s, const Criterion& criterion) {
  if (n < 1 || s < 0 || s > n) throw InputError("equation_count: need 0 <= s <= n");
  switch (criterion.kind) {
    case CriterionKind::Classical:
    case CriterionKind::Dual:
      return binomial(n, s - 1) * binomial(n, s + 1);
    case CriterionKind::Improved:
    case CriterionKind::DualImproved:
      return binomial(n, s - 2) * binomial(n, s + 2);
    case CriterionKind::Optimal:
      if (s < 2) return 0;
      return dim_Y(n, TwoColumnShape(s + 2, s - 2));
    case CriterionKind::Contraction: {
      const int k = criterion.k;
      if (k < 2 || k > s) throw InputError("equation_count: contraction needs 2 <= k <= s");
      BigInt monomials;
      mpz_ui_pow_ui(monomials.get_mpz_t(), static_cast<unsigned long>(n * (n + 1) / 2),
                    static_cast<unsigned long>(s - k));
      return monomials * binomial(n, k - 1) * binomial(n, k + 1);
    }
    case CriterionKind::Oracle:
      break;
  }
  throw InputError("equation_count: the oracle is not an equation family");
}

}  // namespace plk
