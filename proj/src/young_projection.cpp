// Y^{s+2,s-2} projection of P (x) P. With X_A = i(e^{a_1} ^ ... ^ e^{a_m})P
// (m = s-2, a 2-form), skewing P_{A cd} P_{B ef} over cdef is proportional to
// (X_A ^ X_B)_{cdef}; symmetrising the pairs averages this over the 2^m ways
// of distributing each pair {a_j, b_j} between A and B. Coefficients are
// scaled so that for s = 2 they are exactly the components of P ^ P.

#include <algorithm>

#include "integer_image.hpp"
#include "plk/errors.hpp"
#include "plk/young.hpp"

namespace plk {
namespace {

using detail::Int128;

template <class T>
class S2Kernel {
 public:
  S2Kernel(const detail::IntegerImage& img, int n, int s) : n_(n), m_(s - 2) {
    const auto coeffs = detail::convert<T>(img);
    for (Mask a : subsets_lex(n, m_)) {
      std::vector<T> x(static_cast<std::size_t>(n * n), T(0));
      for (int c = 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          const Mask cd = bit(c) | bit(d);
          if ((cd & a) != 0) continue;
          const auto it = coeffs.find(a | cd);
          if (it == coeffs.end()) continue;
          const T v = shuffle_sign(a, cd) > 0 ? it->second : T(-it->second);
          x[idx(c, d)] = v;
          x[idx(d, c)] = -v;
        }
      }
      forms_.emplace(a, std::move(x));
    }
    for (Mask q : subsets_lex(n, 4)) {
      const auto i = indices_of(q);
      quads_.push_back({i[0], i[1], i[2], i[3]});
    }
    acc_.assign(quads_.size(), T(0));
  }

  template <class Visit>
  std::uint64_t run(Visit&& visit) {
    std::vector<std::pair<int, int>> pairs(m_);
    std::uint64_t count = 0;
    enumerate(0, pairs, visit, count);
    return count;
  }

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>((r - 1) * n_ + (c - 1)); }

  template <class Visit>
  bool enumerate(int slot, std::vector<std::pair<int, int>>& pairs, Visit& visit, std::uint64_t& count) {
    if (slot == m_) return evaluate(pairs, visit, count);
    for (int a = 1; a <= n_; ++a) {
      for (int b = a; b <= n_; ++b) {
        pairs[slot] = {a, b};
        if (!enumerate(slot + 1, pairs, visit, count)) return false;
      }
    }
    return true;
  }

  template <class Visit>
  bool evaluate(const std::vector<std::pair<int, int>>& pairs, Visit& visit, std::uint64_t& count) {
    std::vector<int> left(m_), right(m_);
    bool any = false;
    for (Mask pattern = 0; pattern < (Mask{1} << m_); ++pattern) {
      for (int j = 0; j < m_; ++j) {
        const bool swap = (pattern >> j) & 1;
        left[j] = swap ? pairs[j].second : pairs[j].first;
        right[j] = swap ? pairs[j].first : pairs[j].second;
      }
      const int sign = detail::tuple_sign(left) * detail::tuple_sign(right);
      if (sign == 0) continue;
      any = true;
      add_wedge(forms_.at(detail::tuple_mask(left)), forms_.at(detail::tuple_mask(right)), sign);
    }
    for (std::size_t q = 0; q < quads_.size(); ++q) {
      ++count;
      if (!any) continue;
      if (!detail::is_zero(acc_[q])) {
        const Rational value(detail::to_big(acc_[q]));
        acc_[q] = T(0);
        if (!visit(pairs, quads_[q], value)) return false;
      }
    }
    return true;
  }

  void add_wedge(const std::vector<T>& x, const std::vector<T>& y, int sign) {
    for (std::size_t q = 0; q < quads_.size(); ++q) {
      const auto [c, d, e, f] = quads_[q];
      T w = x[idx(c, d)] * y[idx(e, f)] - x[idx(c, e)] * y[idx(d, f)] + x[idx(c, f)] * y[idx(d, e)] +
            x[idx(d, e)] * y[idx(c, f)] - x[idx(d, f)] * y[idx(c, e)] + x[idx(e, f)] * y[idx(c, d)];
      if (sign > 0) {
        acc_[q] += w;
      } else {
        acc_[q] -= w;
      }
    }
  }

  int n_;
  int m_;
  std::unordered_map<Mask, std::vector<T>> forms_;
  std::vector<std::array<int, 4>> quads_;
  std::vector<T> acc_;
};

template <class T>
std::uint64_t run_kernel(const Multivector& p, const detail::IntegerImage& img,
                         const std::function<bool(const S2Index&, const Rational&)>& visit) {
  // value = acc / (2^m * scale^2)
  const int m = p.grade() - 2;
  const Rational norm(BigInt(1), (BigInt(1) << m) * img.scale * img.scale);
  S2Kernel<T> kernel(img, p.dim(), p.grade());
  return kernel.run([&](const std::vector<std::pair<int, int>>& pairs, const std::array<int, 4>& quad,
                        const Rational& raw) { return visit(S2Index{pairs, quad}, raw * norm); });
}

}  // namespace

std::uint64_t for_each_s2_coefficient(
    const Multivector& p, const std::function<bool(const S2Index&, const Rational&)>& visit) {
  if (p.is_dual()) throw InputError("young projection: expects a primal multivector");
  if (p.grade() < 2) throw InputError("young projection: grade must be at least 2");
  const auto img = detail::integer_image(p);
  // Each accumulator sums 2^m * 6 products.
  const std::size_t log2_terms = static_cast<std::size_t>(p.grade() - 2) + 4;
  if (detail::fits_int128(img, log2_terms)) return run_kernel<Int128>(p, img, visit);
  return run_kernel<BigInt>(p, img, visit);
}

std::map<S2Index, Rational> young_project_s2_coefficients(const Multivector& p) {
  std::map<S2Index, Rational> out;
  for_each_s2_coefficient(p, [&](const S2Index& idx, const Rational& v) {
    out.emplace(idx, v);
    return true;
  });
  return out;
}

std::uint64_t s2_coefficient_count(int n, int s) {
  if (s < 2 || s > n) return 0;
  std::uint64_t count = binomial_u64(n, 4);
  for (int j = 0; j < s - 2; ++j) count *= static_cast<std::uint64_t>(n * (n + 1) / 2);
  return count;
}

}  // namespace plk
