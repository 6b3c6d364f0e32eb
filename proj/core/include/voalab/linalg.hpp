#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "voalab/scalar.hpp"

namespace voalab {

using SparseRow = std::vector<std::pair<int, Scalar>>;       // sorted by column
using SparseRowQ = std::vector<std::pair<int, Rational>>;    // sorted by column
using DenseMatrixQ = std::vector<std::vector<Rational>>;

// Incremental Gauss-Jordan elimination over K. Pivot rows are kept fully reduced
// with leading coefficient 1.
class SparseRref {
 public:
  explicit SparseRref(int ncols) : ncols_(ncols) {}
  // Returns true if the row was independent of those already added.
  bool add_row(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  std::vector<int> pivot_columns() const;
  // Kernel of the row space: one vector per free column, with a 1 in that column.
  std::vector<SparseRow> kernel() const;
  // Reduce a row against the current pivots.
  SparseRow reduce(SparseRow row) const;

 private:
  int ncols_;
  std::map<int, SparseRow> rows_;  // pivot column -> row
};

SparseRow row_axpy(const SparseRow& x, const Scalar& a, const SparseRow& y);  // x + a y

// Rank of a rational matrix modulo a large prime (a lower bound for the rank over Q;
// equality with the column count certifies full column rank).
int modular_rank(const std::vector<SparseRowQ>& rows, int ncols);

struct RationalSolve {
  int rank = 0;                    // rank certified modulo a prime
  std::vector<int> selected_rows;  // rows used for the square solve
  std::optional<std::vector<Rational>> x;  // solution of the selected square system
};

// Solve rows * x = rhs for x when rows has full column rank: independent rows are
// selected modulo a prime, then the square system is solved by fraction-free
// Bareiss elimination over Z. The caller verifies the remaining rows.
RationalSolve solve_rational(const std::vector<SparseRowQ>& rows, const std::vector<Rational>& rhs,
                             int ncols);

// Square dense solve by Bareiss; nullopt if singular.
std::optional<std::vector<Rational>> bareiss_solve(DenseMatrixQ a, std::vector<Rational> b);

}  // namespace voalab
