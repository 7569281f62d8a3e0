#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "plk/errors.hpp"
#include "plk/exterior.hpp"
#include "plk/young.hpp"

namespace plk {
namespace {

// For S_{2s} acting on the 2s probe slots of P (x) P: per conjugacy class,
// the signed count of permutations sending the first s slots onto each
// s-subset A of probes, the sign being that of sorting each half.
struct SplitTable {
  std::vector<Partition> classes;
  std::vector<Mask> halves;                 // s-subsets of {1..2s}, lex order
  std::vector<std::vector<long>> weights;   // [class][half]
};

int inversion_parity(const int* begin, const int* end) {
  int inv = 0;
  for (const int* i = begin; i != end; ++i) {
    for (const int* j = i + 1; j != end; ++j) inv += *i > *j;
  }
  return inv & 1;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::shared_ptr<const SplitTable> build_table(int s) {
  const int m = 2 * s;
  auto table = std::make_shared<SplitTable>();
  table->classes = partitions_of(m);
  table->halves = subsets_lex(m, s);
  std::map<Partition, std::size_t> class_index;
  for (std::size_t i = 0; i < table->classes.size(); ++i) class_index.emplace(table->classes[i], i);
  std::unordered_map<Mask, std::size_t> half_index;
  for (std::size_t i = 0; i < table->halves.size(); ++i) half_index.emplace(table->halves[i], i);
  table->weights.assign(table->classes.size(), std::vector<long>(table->halves.size(), 0));

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Mask first = 0;
    for (int i = 0; i < s; ++i) first |= Mask{1} << perm[i];
    const int parity = inversion_parity(perm.data(), perm.data() + s) ^
                       inversion_parity(perm.data() + s, perm.data() + m);
    table->weights[class_index.at(cycle_type(perm))][half_index.at(first)] += parity ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return table;
}

std::shared_ptr<const SplitTable> split_table(int s) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SplitTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[s];
  if (!slot) slot = build_table(s);
  return slot;
}

}  // namespace

Rational isotypic_probe(const Multivector& p, const TwoColumnShape& shape,
                        std::span<const Multivector> probes) {
  if (p.is_dual()) throw InputError("isotypic_probe: expects a primal multivector");
  const int s = p.grade();
  const int m = 2 * s;
  if (shape.cells() != m) throw InputError("isotypic_probe: shape must have 2s cells");
  if (static_cast<int>(probes.size()) != m) throw InputError("isotypic_probe: need 2s probes");
  if (m > 10) throw InputError("isotypic_probe: supported for s <= 5");
  for (const auto& xi : probes) {
    if (xi.grade() != 1 || xi.dim() != p.dim()) {
      throw InputError("isotypic_probe: probes must be grade-1 of matching dimension");
    }
  }
  if (s == 0) return shape.cells() == 0 ? p.coeff(0) * p.coeff(0) : Rational(0);

  const auto table = split_table(s);
  // F(A) = <xi_{a_1} ^ ... ^ xi_{a_s}, P> for every s-subset A of the probes.
  std::vector<Rational> f(table->halves.size());
  for (std::size_t h = 0; h < table->halves.size(); ++h) {
    std::vector<Multivector> chosen;
    for (int i : indices_of(table->halves[h])) chosen.push_back(probes[i - 1].with_dual(true));
    f[h] = pairing(wedge_all(chosen), p);
  }
  std::unordered_map<Mask, std::size_t> half_index;
  for (std::size_t i = 0; i < table->halves.size(); ++i) half_index.emplace(table->halves[i], i);
  const Mask all = full_mask(m);

  const Partition lambda = shape.partition();
  Rational sum = 0;
  for (std::size_t c = 0; c < table->classes.size(); ++c) {
    const BigInt chi = sym_character(lambda, table->classes[c]);
    if (chi == 0) continue;
    Rational class_sum = 0;
    for (std::size_t h = 0; h < table->halves.size(); ++h) {
      const long w = table->weights[c][h];
      if (w == 0) continue;
      class_sum += w * f[h] * f[half_index.at(all & ~table->halves[h])];
    }
    sum += chi * class_sum;
  }
  BigInt order;
  mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(m));
  return sum * Rational(standard_tableaux(lambda)) / Rational(order);
}

}  // namespace plk
