#include "argshift/linalg.hpp"

#include <algorithm>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

// out = a * x + b * y on sparse rows.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates column `col` of `row` using pivot row `piv` (leading entry at col).
void eliminate(IntRow& row, std::size_t pos, const IntRow& piv) {
  const Integer& pc = piv.front().second;
  const Integer& rc = row[pos].second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), pc.get_mpz_t(), rc.get_mpz_t());
  const Integer a = pc / g;
  const Integer b = -(rc / g);
  row = combine(a, row, b, piv);
  make_primitive(row);
}

}  // namespace

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow make_primitive(const RatRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    out.emplace_back(c, v.get_num() * (l / v.get_den()));
  }
  make_primitive(out);
  return out;
}

void Echelon::reduce_leading(IntRow& row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return;
    eliminate(row, 0, it->second);
  }
}

bool Echelon::insert(IntRow row) {
  make_primitive(row);
  reduce_leading(row);
  if (row.empty()) return false;
  if (row.back().first >= ncols_) throw InvalidArgument("row exceeds column count");
  const auto col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

bool Echelon::contains(IntRow row) const {
  make_primitive(row);
  // Full reduction: a leading entry outside the pivot set means independence.
  reduce_leading(row);
  return row.empty();
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> cols;
  cols.reserve(pivots_.size());
  for (const auto& [c, r] : pivots_) cols.push_back(c);
  return cols;
}

std::vector<RatRow> Echelon::rref() const {
  std::map<std::uint32_t, IntRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    IntRow row = it->second;
    // Clear later pivot columns using the already reduced rows.
    for (std::size_t pos = 1; pos < row.size();) {
      auto r = reduced.find(row[pos].first);
      if (r == reduced.end()) {
        ++pos;
        continue;
      }
      eliminate(row, pos, r->second);
      // Entries before pos are untouched, entry at pos is now gone.
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<RatRow> out;
  out.reserve(reduced.size());
  for (const auto& [c, row] : reduced) {
    RatRow r;
    r.reserve(row.size());
    const Integer& lead = row.front().second;
    for (const auto& [col, v] : row) r.emplace_back(col, Rational(v, lead));
    for (auto& e : r) e.second.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RatRow> Echelon::kernel() const {
  const auto rows = rref();
  std::vector<bool> is_pivot(ncols_, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;
  // Column -> list of (pivot column, coefficient) among RREF rows.
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> by_col(ncols_);
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.size(); ++k) by_col[r[k].first].emplace_back(r.front().first, r[k].second);
  std::vector<RatRow> basis;
  for (std::uint32_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RatRow v;
    for (const auto& [pc, val] : by_col[f]) v.emplace_back(pc, -val);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<RatRow>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<Rational> solve_dense(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidArgument("solve_dense: size mismatch");
  RationalMatrix m = a;
  std::vector<Rational> rhs = b;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw InvalidArgument("solve_dense: matrix not square");
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InvalidArgument("solve_dense: singular matrix");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace argshift
