#pragma once

#include <vector>

#include "plk/rational.hpp"

namespace plk {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

// Reduced row-echelon form. `rows` holds only the nonzero rows; pivots[i] is
// the pivot column of rows[i] and pivots strictly increase.
struct Echelon {
  RationalMatrix rows;
  std::vector<int> pivots;
};

// `cols` is the row width; every row must have exactly that many entries.
Echelon row_reduce(RationalMatrix m, int cols);

int rank(const RationalMatrix& m, int cols);

// Basis of {x : m x = 0}, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& m, int cols);

}  // namespace plk
