#include "plk/subset.hpp"

#include "plk/errors.hpp"

namespace plk {
namespace {

void collect(int next, int n, int remaining, Mask acc, std::vector<Mask>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = next; i <= n - remaining + 1; ++i) {
    collect(i + 1, n, remaining - 1, acc | bit(i), out);
  }
}

}  // namespace

std::vector<Mask> subsets_lex(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial_u64(n, k));
  collect(1, n, k, 0, out);
  return out;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw InputError("index out of range");
    m |= bit(i);
  }
  return m;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::uint64_t binomial_u64(int n, int k) {
  const BigInt b = binomial(n, k);
  if (!b.fits_ulong_p()) throw InputError("binomial coefficient too large");
  return b.get_ui();
}

}  // namespace plk
