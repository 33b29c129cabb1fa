#include "argshift/subspace.hpp"

#include <algorithm>
#include <map>

#include "argshift/errors.hpp"
#include "argshift/parallel.hpp"

namespace argshift {

SubspaceMatrix::SubspaceMatrix(std::size_t nvars, unsigned degree)
    : SubspaceMatrix(nvars, degree, monomials_of_degree(nvars, degree)) {}

SubspaceMatrix::SubspaceMatrix(std::size_t nvars, unsigned degree, std::vector<Monomial> columns)
    : nvars_(nvars), degree_(degree), columns_(std::move(columns)) {
  if (!std::is_sorted(columns_.begin(), columns_.end()))
    throw InvalidArgument("SubspaceMatrix: columns must be sorted");
}

std::optional<std::uint32_t> SubspaceMatrix::column_of(const Monomial& m) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), m);
  if (it != columns_.end() && *it == m) return static_cast<std::uint32_t>(it - columns_.begin());
  return std::nullopt;
}

void SubspaceMatrix::add_row(RatRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [c, v] : row)
    if (c >= columns_.size()) throw InvalidArgument("row exceeds column count");
  rows_.push_back(std::move(row));
}

RatRow SubspaceMatrix::row_of(const SparsePoly& p) const {
  if (p.nvars() != nvars_) throw InvalidArgument("basis mismatch");
  RatRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto col = column_of(m);
    if (!col) throw InvalidArgument("polynomial has a monomial outside the column basis");
    row.emplace_back(*col, c);
  }
  // Map order and column order agree.
  return row;
}

void SubspaceMatrix::add_poly(const SparsePoly& p) { rows_.push_back(row_of(p)); }

SparsePoly SubspaceMatrix::poly_of(const RatRow& row) const {
  SparsePoly p(nvars_);
  for (const auto& [c, v] : row) p.add_term(columns_[c], v);
  return p;
}

std::vector<SparsePoly> SubspaceMatrix::polys() const {
  std::vector<SparsePoly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(poly_of(r));
  return out;
}

SubspaceMatrix SubspaceMatrix::empty_like() const {
  return SubspaceMatrix(nvars_, degree_, columns_);
}

namespace {
Echelon echelon_of(const SubspaceMatrix& m) {
  Echelon e(m.cols());
  for (const auto& r : m.rows()) e.insert(r);
  return e;
}
}  // namespace

std::size_t rank(const SubspaceMatrix& m) { return echelon_of(m).rank(); }

SubspaceMatrix rref(const SubspaceMatrix& m) {
  SubspaceMatrix out = m.empty_like();
  for (auto& r : echelon_of(m).rref()) out.add_row(std::move(r));
  return out;
}

SubspaceMatrix kernel(const SubspaceMatrix& m) {
  SubspaceMatrix out = m.empty_like();
  for (auto& r : echelon_of(m).kernel()) out.add_row(std::move(r));
  return out;
}

bool row_space_contains(const SubspaceMatrix& outer, const SubspaceMatrix& inner) {
  if (outer.columns() != inner.columns()) throw InvalidArgument("column bases differ");
  const Echelon e = echelon_of(outer);
  return std::all_of(inner.rows().begin(), inner.rows().end(),
                     [&](const RatRow& r) { return e.contains(r); });
}

SubspaceMatrix map_kernel(std::size_t nvars, unsigned degree, std::vector<Monomial> domain,
                          const std::function<std::vector<SparsePoly>(const Monomial&)>& image) {
  std::vector<std::vector<SparsePoly>> images(domain.size());
  parallel_for(domain.size(), [&](std::size_t i) { images[i] = image(domain[i]); });

  // Row per (component, output monomial); column per domain monomial.
  std::map<std::pair<std::size_t, Monomial>, RatRow> rows;
  for (std::size_t col = 0; col < domain.size(); ++col)
    for (std::size_t comp = 0; comp < images[col].size(); ++comp)
      for (const auto& [m, c] : images[col][comp].terms())
        rows[{comp, m}].emplace_back(static_cast<std::uint32_t>(col), c);

  Echelon e(domain.size());
  for (const auto& [key, row] : rows) e.insert(row);
  SubspaceMatrix out(nvars, degree, std::move(domain));
  for (auto& r : e.kernel()) out.add_row(std::move(r));
  return out;
}

}  // namespace argshift
