#include "voalab/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace voalab {

SparseRow row_axpy(const SparseRow& x, const Scalar& a, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Scalar v = a * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = x[i].second;
      v.add_product(a, y[j].second);
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

const Scalar* find_col(const SparseRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SparseRow SparseRref::reduce(SparseRow row) const {
  std::vector<std::pair<int, Scalar>> hits;
  for (const auto& [c, v] : row)
    if (rows_.count(c)) hits.emplace_back(c, v);
  for (const auto& [c, v] : hits) row = row_axpy(row, -v, rows_.at(c));
  return row;
}

bool SparseRref::add_row(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const int pc = row.front().first;
  const Scalar inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  for (auto& [c, prow] : rows_) {
    if (const Scalar* hit = find_col(prow, pc)) {
      const Scalar f = -*hit;
      prow = row_axpy(prow, f, row);
    }
  }
  rows_.emplace(pc, std::move(row));
  return true;
}

std::vector<int> SparseRref::pivot_columns() const {
  std::vector<int> out;
  for (const auto& [c, r] : rows_) out.push_back(c);
  return out;
}

std::vector<SparseRow> SparseRref::kernel() const {
  std::vector<SparseRow> out;
  for (int f = 0; f < ncols_; ++f) {
    if (rows_.count(f)) continue;
    SparseRow v;
    for (const auto& [pc, prow] : rows_)
      if (const Scalar* hit = find_col(prow, f)) v.emplace_back(pc, -*hit);
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

constexpr uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Returns false if the denominator vanishes modulo p.
bool to_mod(const Rational& q, uint64_t p, uint64_t& out) {
  const uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  const uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return false;
  out = num * mod_pow(den, p - 2, p) % p;
  return true;
}

// Greedy independent-row selection modulo p. Returns the chosen row indices.
std::optional<std::vector<int>> select_rows_mod(const std::vector<SparseRowQ>& rows, int ncols,
                                                uint64_t p) {
  std::vector<std::vector<uint64_t>> basis;  // reduced rows, leading 1 at pivot
  std::vector<int> pivots;
  std::vector<int> chosen;
  std::vector<uint64_t> v(ncols);
  for (std::size_t r = 0; r < rows.size() && static_cast<int>(chosen.size()) < ncols; ++r) {
    std::fill(v.begin(), v.end(), 0);
    bool any = false;
    for (const auto& [c, q] : rows[r]) {
      uint64_t x;
      if (!to_mod(q, p, x)) return std::nullopt;
      v[c] = x;
      any |= x != 0;
    }
    if (!any) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const uint64_t f = v[pivots[b]];
      if (f == 0) continue;
      const auto& br = basis[b];
      for (int c = pivots[b]; c < ncols; ++c)
        if (br[c]) v[c] = (v[c] + (p - f) * br[c]) % p;
    }
    int pc = -1;
    for (int c = 0; c < ncols; ++c)
      if (v[c]) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    const uint64_t inv = mod_pow(v[pc], p - 2, p);
    for (int c = pc; c < ncols; ++c) v[c] = v[c] * inv % p;
    // keep rows sorted by pivot so the forward sweep above stays valid
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), pc) - pivots.begin();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const uint64_t f = basis[b][pc];
      if (f == 0) continue;
      for (int c = pc; c < ncols; ++c)
        if (v[c]) basis[b][c] = (basis[b][c] + (p - f) * v[c]) % p;
    }
    basis.insert(basis.begin() + pos, v);
    pivots.insert(pivots.begin() + pos, pc);
    chosen.push_back(static_cast<int>(r));
  }
  return chosen;
}

}  // namespace

int modular_rank(const std::vector<SparseRowQ>& rows, int ncols) {
  for (uint64_t p : kPrimes)
    if (auto sel = select_rows_mod(rows, ncols, p)) return static_cast<int>(sel->size());
  throw std::runtime_error("modular rank: no usable prime");
}

std::optional<std::vector<Rational>> bareiss_solve(DenseMatrixQ a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  // Scale each row to primitive integers.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    Integer g = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& q = j < n ? a[i][j] : b[i];
      m[i][j] = q.get_num() * (l / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[i][j].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : m[i]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k) std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer t = m[k][k] * m[i][j];
        mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(m[ii][j]) * x[j];
    x[ii] = s / Rational(m[ii][ii]);
  }
  return x;
}

RationalSolve solve_rational(const std::vector<SparseRowQ>& rows, const std::vector<Rational>& rhs,
                             int ncols) {
  RationalSolve out;
  std::optional<std::vector<int>> sel;
  for (uint64_t p : kPrimes)
    if ((sel = select_rows_mod(rows, ncols, p))) break;
  if (!sel) throw std::runtime_error("solve_rational: no usable prime");
  out.rank = static_cast<int>(sel->size());
  out.selected_rows = *sel;
  if (out.rank < ncols) return out;
  DenseMatrixQ a(ncols, std::vector<Rational>(ncols));
  std::vector<Rational> b(ncols);
  for (int i = 0; i < ncols; ++i) {
    for (const auto& [c, q] : rows[(*sel)[i]]) a[i][c] = q;
    b[i] = rhs[(*sel)[i]];
  }
  out.x = bareiss_solve(std::move(a), std::move(b));
  return out;
}

}  // namespace voalab
