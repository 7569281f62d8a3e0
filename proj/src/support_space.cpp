#include "plk/support_space.hpp"

#include "plk/errors.hpp"
#include "plk/exterior.hpp"
#include "plk/linalg.hpp"

namespace plk {
namespace {

RationalMatrix as_rows(const std::vector<Multivector>& vs) {
  RationalMatrix m;
  m.reserve(vs.size());
  for (const auto& v : vs) m.push_back(v.coords());
  return m;
}

}  // namespace

SupportSpace SupportSpace::span_of(int dim, std::span<const Multivector> vectors) {
  RationalMatrix m;
  for (const auto& v : vectors) {
    if (v.dim() != dim || v.grade() != 1 || v.is_dual()) {
      throw InputError("span_of: expects vectors of the stated dimension");
    }
    m.push_back(v.coords());
  }
  const Echelon e = row_reduce(std::move(m), dim);
  SupportSpace out(dim);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    out.basis_.push_back(Multivector::vector(e.rows[i]));
    out.pivots_.push_back(e.pivots[i] + 1);
  }
  return out;
}

bool SupportSpace::contains(const Multivector& v) const {
  if (v.dim() != dim_ || v.grade() != 1) return false;
  // Reduce against the echelon basis; v is inside iff nothing remains.
  Multivector rest = v.with_dual(false);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = rest.coeff(bit(pivots_[i]));
    if (c != 0) rest -= basis_[i] * c;
  }
  return rest.is_zero();
}

SupportSpace support_space(const Multivector& p) {
  if (p.is_dual()) throw InputError("support_space: expects a primal multivector");
  if (p.grade() == 0 || p.is_zero()) return SupportSpace(p.dim());
  // sharp is linear in its covector, so the basis covectors span the image.
  const int s = p.grade();
  std::vector<Multivector> images;
  for (Mask sub : subsets_lex(p.dim(), s - 1)) {
    images.push_back(sharp(p, Multivector::basis(p.dim(), indices_of(sub), true)));
  }
  return SupportSpace::span_of(p.dim(), images);
}

SupportSpace subspace_sum(const SupportSpace& a, const SupportSpace& b) {
  if (a.dim() != b.dim()) throw InputError("subspace_sum: dimension mismatch");
  std::vector<Multivector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return SupportSpace::span_of(a.dim(), all);
}

SupportSpace subspace_intersection(const SupportSpace& a, const SupportSpace& b) {
  if (a.dim() != b.dim()) throw InputError("subspace_intersection: dimension mismatch");
  const int n = a.dim();
  if (a.rank() == 0 || b.rank() == 0) return SupportSpace(n);
  // Annihilator of b: covectors vanishing on every basis vector of b.
  const RationalMatrix ann = nullspace(as_rows(b.basis()), n);
  if (ann.empty()) return a;
  // x with sum_i x_i a_i annihilated by ann: (ann * A^T) x = 0.
  const auto a_rows = as_rows(a.basis());
  RationalMatrix system(ann.size(), RationalRow(a_rows.size(), 0));
  for (std::size_t r = 0; r < ann.size(); ++r) {
    for (std::size_t i = 0; i < a_rows.size(); ++i) {
      Rational dot = 0;
      for (int c = 0; c < n; ++c) dot += ann[r][c] * a_rows[i][c];
      system[r][i] = dot;
    }
  }
  std::vector<Multivector> vs;
  for (const auto& x : nullspace(system, static_cast<int>(a_rows.size()))) {
    RationalRow v(n, 0);
    for (std::size_t i = 0; i < a_rows.size(); ++i) {
      for (int c = 0; c < n; ++c) v[c] += x[i] * a_rows[i][c];
    }
    vs.push_back(Multivector::vector(v));
  }
  return SupportSpace::span_of(n, vs);
}

}  // namespace plk
