// Contraction criterion: i(alpha_1 ^ ... ^ alpha_m)P passes the classical
// Plücker test for every choice of covectors alpha_j, m = s - k.
//
// Symbolic mode expands the Plücker expressions as polynomials in the m*n
// covector coordinates. With Q_J = i(e^{J_1} ^ ... ^ e^{J_m})P for index
// tuples J, the expression i(e^S)Q ^ Q is sum_{J,J'} alpha^J alpha^{J'}
// i(e^S)Q_J ^ Q_{J'}; the coefficient of a monomial collects the tuple pairs
// with the same unordered pair {J_j, J'_j} in each slot j.

#include <algorithm>
#include <functional>

#include "integer_image.hpp"
#include "plk/decomposability.hpp"
#include "plk/errors.hpp"
#include "plk/exterior.hpp"
#include "plk/random.hpp"

namespace plk {
namespace {

using detail::Int128;

// Position of each subset of a fixed grade in the lexicographic list.
class SubsetRanks {
 public:
  SubsetRanks(int n, int k) : list_(subsets_lex(n, k)) {
    if (n <= 20) {
      dense_.assign(std::size_t{1} << n, -1);
      for (std::size_t i = 0; i < list_.size(); ++i) dense_[list_[i]] = static_cast<int>(i);
    } else {
      for (std::size_t i = 0; i < list_.size(); ++i) sparse_.emplace(list_[i], static_cast<int>(i));
    }
  }
  int operator()(Mask m) const { return dense_.empty() ? sparse_.at(m) : dense_[m]; }
  std::size_t size() const { return list_.size(); }
  Mask at(std::size_t i) const { return list_[i]; }

 private:
  std::vector<Mask> list_;
  std::vector<int> dense_;
  std::unordered_map<Mask, int> sparse_;
};

template <class T>
struct Term {
  Mask key;
  T value;
};

template <class T>
class SymbolicContraction {
 public:
  SymbolicContraction(const detail::IntegerImage& img, int n, int s, int k)
      : n_(n), m_(s - k), s_ranks_(n, k - 1), w_ranks_(n, k + 1) {
    const auto coeffs = detail::convert<T>(img);
    // Q_A for every sorted m-subset A.
    for (Mask a : subsets_lex(n, m_)) {
      std::vector<Term<T>> q;
      for (const auto& [key, v] : coeffs) {
        if ((key & a) != a) continue;
        const Mask r = key & ~a;
        q.push_back({r, shuffle_sign(a, r) > 0 ? v : T(-v)});
      }
      std::sort(q.begin(), q.end(), [](const auto& x, const auto& y) { return LexLess{}(x.key, y.key); });
      q_index_.emplace(a, q_.size());
      q_.push_back(std::move(q));
    }
    acc_.assign(s_ranks_.size() * w_ranks_.size(), T(0));
  }

  // Visits the monomials in lexicographic order; stops at the first with a
  // nonzero coefficient and fills the witness.
  bool run(Witness& witness) {
    std::vector<std::pair<int, int>> pairs(m_);
    return enumerate(0, pairs, witness);
  }

  std::uint64_t monomials() const {
    std::uint64_t count = 1;
    for (int j = 0; j < m_; ++j) count *= static_cast<std::uint64_t>(n_ * (n_ + 1) / 2);
    return count;
  }

 private:
  bool enumerate(int slot, std::vector<std::pair<int, int>>& pairs, Witness& witness) {
    if (slot == m_) return check_monomial(pairs, witness);
    for (int a = 1; a <= n_; ++a) {
      for (int b = a; b <= n_; ++b) {
        pairs[slot] = {a, b};
        if (!enumerate(slot + 1, pairs, witness)) return false;
      }
    }
    return true;
  }

  bool check_monomial(const std::vector<std::pair<int, int>>& pairs, Witness& witness) {
    std::vector<int> differing;
    for (int j = 0; j < m_; ++j) {
      if (pairs[j].first != pairs[j].second) differing.push_back(j);
    }
    touched_.clear();
    std::vector<int> left(m_), right(m_);
    for (Mask pattern = 0; pattern < (Mask{1} << differing.size()); ++pattern) {
      for (int j = 0; j < m_; ++j) {
        left[j] = pairs[j].first;
        right[j] = pairs[j].second;
      }
      for (std::size_t d = 0; d < differing.size(); ++d) {
        if ((pattern >> d) & 1) std::swap(left[differing[d]], right[differing[d]]);
      }
      const int sl = detail::tuple_sign(left);
      const int sr = detail::tuple_sign(right);
      if (sl == 0 || sr == 0) continue;
      accumulate(q_[q_index_.at(detail::tuple_mask(left))],
                 q_[q_index_.at(detail::tuple_mask(right))], sl * sr);
    }
    // Report in (S, W) lexicographic order.
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    bool all_zero = true;
    for (std::size_t slot : touched_) {
      if (all_zero && !detail::is_zero(acc_[slot])) {
        all_zero = false;
        const std::size_t width = w_ranks_.size();
        witness = Witness{.covector = s_ranks_.at(slot / width),
                          .pairs = pairs,
                          .component = w_ranks_.at(slot % width),
                          .value = Rational(detail::to_big(acc_[slot]))};
      }
      acc_[slot] = T(0);
    }
    return all_zero;
  }

  // sum_S e_S (x) i(e^S)X ^ Y: a term x e_R of X with i in R gives
  // i(e^{R\i}) e_R = sign * e_i, then e_i ^ e_U for each term y e_U of Y.
  void accumulate(const std::vector<Term<T>>& x, const std::vector<Term<T>>& y, int sign) {
    const std::size_t width = w_ranks_.size();
    for (const auto& xt : x) {
      Mask rest = xt.key;
      while (rest != 0) {
        const Mask i = rest & (~rest + 1);
        rest &= rest - 1;
        const Mask s = xt.key & ~i;
        const int s_sign = shuffle_sign(s, i) * sign;
        const std::size_t row = static_cast<std::size_t>(s_ranks_(s)) * width;
        for (const auto& yt : y) {
          if ((yt.key & i) != 0) continue;
          const int total = s_sign * shuffle_sign(i, yt.key);
          const std::size_t slot = row + static_cast<std::size_t>(w_ranks_(yt.key | i));
          if (total > 0) {
            acc_[slot] += xt.value * yt.value;
          } else {
            acc_[slot] -= xt.value * yt.value;
          }
          touched_.push_back(slot);
        }
      }
    }
  }

  int n_;
  int m_;
  SubsetRanks s_ranks_;
  SubsetRanks w_ranks_;
  std::vector<std::vector<Term<T>>> q_;
  std::unordered_map<Mask, std::size_t> q_index_;
  std::vector<T> acc_;
  std::vector<std::size_t> touched_;
};

template <class T>
CriterionReport run_symbolic(const Multivector& p, int k, const detail::IntegerImage& img) {
  SymbolicContraction<T> kernel(img, p.dim(), p.grade(), k);
  CriterionReport r;
  r.criterion = {CriterionKind::Contraction, k};
  Witness witness;
  if (!kernel.run(witness)) {
    r.verdict = false;
    witness.value /= img.scale * img.scale;
    r.witness = std::move(witness);
  }
  r.equations_checked =
      kernel.monomials() * binomial_u64(p.dim(), k - 1) * binomial_u64(p.dim(), k + 1);
  return r;
}

CriterionReport run_randomized(const Multivector& p, int k, const ContractionOptions& options) {
  const int n = p.dim();
  const int m = p.grade() - k;
  CriterionReport r;
  r.criterion = {CriterionKind::Contraction, k};
  r.seed = options.seed;
  const std::uint64_t per_trial = binomial_u64(n, k - 1) * binomial_u64(n, k + 1);
  for (int t = 0; t < options.trials; ++t) {
    Rng rng(options.seed, static_cast<std::uint64_t>(t));
    std::vector<Multivector> alphas;
    Multivector contracting = Multivector::scalar(n, 1, true);
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> coords(n);
      for (auto& c : coords) c = rng.uniform(-options.bound, options.bound);
      alphas.push_back(Multivector::vector(coords, true));
      contracting = wedge(contracting, alphas.back());
    }
    const CriterionReport inner = classical_pluecker(interior(contracting, p));
    r.equations_checked += per_trial;
    if (!inner.verdict) {
      r.verdict = false;
      r.witness = Witness{.covector = inner.witness->covector,
                          .alphas = std::move(alphas),
                          .component = inner.witness->component,
                          .value = inner.witness->value};
      return r;
    }
  }
  r.probabilistic = true;
  return r;
}

}  // namespace

CriterionReport contraction_criterion(const Multivector& p, int k, const ContractionOptions& options) {
  if (p.is_dual()) throw InputError("contraction_criterion: expects a primal multivector");
  const int s = p.grade();
  if (s <= 1) {
    CriterionReport r;
    r.criterion = {CriterionKind::Contraction, k};
    return r;
  }
  if (k < 2 || k > s) throw InputError("contraction_criterion: k must satisfy 2 <= k <= s");
  if (options.trials < 1) throw InputError("contraction_criterion: trials must be positive");
  if (k == s) {
    CriterionReport r = classical_pluecker(p);
    r.criterion = {CriterionKind::Contraction, k};
    return r;
  }
  if (options.mode == ContractionMode::Randomized) return run_randomized(p, k, options);
  const auto img = detail::integer_image(p);
  // Each coefficient sums at most 2^m * n * C(n, k) products.
  const std::size_t log2_terms = static_cast<std::size_t>(s - k) + 2 * 7 + 8;
  if (detail::fits_int128(img, log2_terms)) return run_symbolic<Int128>(p, k, img);
  return run_symbolic<BigInt>(p, k, img);
}

}  // namespace plk
