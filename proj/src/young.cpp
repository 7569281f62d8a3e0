#include "plk/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "plk/errors.hpp"

namespace plk {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw InputError("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InputError("partition rows must be weakly decreasing");
  }
}

int Partition::size() const {
  int total = 0;
  for (int r : rows_) total += r;
  return total;
}

std::vector<int> Partition::columns() const {
  std::vector<int> cols(rows_.empty() ? 0 : rows_.front(), 0);
  for (int r : rows_) {
    for (int c = 0; c < r; ++c) ++cols[c];
  }
  return cols;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.rows().size(); ++i) os << (i ? "," : "") << p.rows()[i];
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (m < 0) throw InputError("partitions_of: negative size");
  rec(m, m);
  return out;
}

TwoColumnShape::TwoColumnShape(int first, int second) : first_col(first), second_col(second) {
  if (second < 0 || first < second) throw InputError("two-column shape needs s >= t >= 0");
}

Partition TwoColumnShape::partition() const {
  std::vector<int> rows(second_col, 2);
  rows.insert(rows.end(), first_col - second_col, 1);
  return Partition(std::move(rows));
}

BigInt dim_gl(int n, const Partition& shape) {
  if (n < 1) throw InputError("dim_gl: n must be positive");
  if (shape.length() > n) return 0;
  const auto cols = shape.columns();
  BigInt num = 1;
  BigInt den = 1;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape.rows()[r]; ++c) {
      const int arm = shape.rows()[r] - c - 1;
      const int leg = cols[c] - r - 1;
      num *= n + c - r;
      den *= arm + leg + 1;
    }
  }
  if (num % den != 0) throw InvariantViolation("hook-content product is not an integer");
  return num / den;
}

BigInt dim_Y(int n, const TwoColumnShape& shape) { return dim_gl(n, shape.partition()); }

BigInt standard_tableaux(const Partition& shape) {
  const auto cols = shape.columns();
  BigInt num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  BigInt den = 1;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape.rows()[r]; ++c) den *= (shape.rows()[r] - c - 1) + (cols[c] - r - 1) + 1;
  }
  return num / den;
}

bool StarStarReport::pass() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& i) { return i.pass(); });
}

StarStarReport verify_star_star(int n, int s) {
  if (s < 1 || s > n) throw InputError("verify_star_star: need 1 <= s <= n");
  StarStarReport report;
  report.n = n;
  report.s = s;
  BigInt total = 0, even = 0, odd = 0, from1 = 0, from2 = 0;
  for (int j = 0; j <= s; ++j) {
    const TwoColumnShape shape(s + j, s - j);
    const BigInt d = dim_Y(n, shape);
    report.components.emplace_back(shape, d);
    total += d;
    (j % 2 == 0 ? even : odd) += d;
    if (j >= 1) from1 += d;
    if (j >= 2) from2 += d;
  }
  const BigInt c = binomial(n, s);
  report.identities = {
      {"L^s (x) L^s = sum_{j>=0} Y^{s+j,s-j}", total, c * c},
      {"S^2(L^s) = sum_{j even} Y^{s+j,s-j}", even, c * (c + 1) / 2},
      {"L^2(L^s) = sum_{j odd} Y^{s+j,s-j}", odd, c * (c - 1) / 2},
      {"L^{s+1} (x) L^{s-1} = sum_{j>=1} Y^{s+j,s-j}", from1, binomial(n, s + 1) * binomial(n, s - 1)},
      {"L^{s+2} (x) L^{s-2} = sum_{j>=2} Y^{s+j,s-j}", from2, binomial(n, s + 2) * binomial(n, s - 2)},
  };
  return report;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from position b to the free position b - r, with sign (-1)^{beads
// strictly between}.
BigInt mn_character(std::vector<int>& beads, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  const int r = cycles[next];
  BigInt total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int from = beads[i];
    const int to = from - r;
    if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int between = 0;
    for (int b : beads) {
      if (b > to && b < from) ++between;
    }
    beads[i] = to;
    const BigInt sub = mn_character(beads, cycles, next + 1);
    beads[i] = from;
    total += (between % 2 == 0) ? sub : BigInt(-sub);
  }
  return total;
}

}  // namespace

BigInt sym_character(const Partition& shape, const Partition& cls) {
  if (shape.size() != cls.size()) throw InputError("sym_character: partitions of different sizes");
  const int len = shape.length();
  std::vector<int> beads(len);
  for (int i = 0; i < len; ++i) beads[i] = shape.rows()[i] + (len - 1 - i);
  return mn_character(beads, cls.rows(), 0);
}

BigInt class_size(const Partition& cls) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int c : cls.rows()) ++mult[c];
  for (const auto& [len, count] : mult) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(count));
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(count));
    z *= f * p;
  }
  BigInt total;
  mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(cls.size()));
  return total / z;
}

}  // namespace plk
