#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "argshift/rational.hpp"
#include "argshift/root_system.hpp"

namespace argshift {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;
using IntRow = SparseRow<Integer>;
using RatRow = SparseRow<Rational>;

/// Clears denominators and divides by the content; leading entry positive.
IntRow make_primitive(const RatRow& row);
void make_primitive(IntRow& row);

/// Incremental row-echelon form over the integers. Rows are kept primitive and
/// reduced fraction-free: eliminating the leading entry of r against pivot row
/// p computes (p_c/g) r - (r_c/g) p with g = gcd(p_c, r_c). The pivot of a row is
/// its smallest column, so earlier columns are preferred as pivots.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Returns true iff the row was independent of the rows inserted so far.
  bool insert(IntRow row);
  bool insert(const RatRow& row) { return insert(make_primitive(row)); }

  /// True iff the row lies in the current row space.
  bool contains(IntRow row) const;
  bool contains(const RatRow& row) const { return contains(make_primitive(row)); }

  std::vector<std::size_t> pivot_columns() const;

  /// Reduced row-echelon basis: pivot entries 1, zeros in the other pivot
  /// columns, ordered by pivot column.
  std::vector<RatRow> rref() const;

  /// Basis of {x : M x = 0} where M has the inserted rows; one vector per free
  /// column, in increasing column order, with a 1 in that column.
  std::vector<RatRow> kernel() const;

 private:
  // Eliminates leading entries while they hit a pivot.
  void reduce_leading(IntRow& row) const;

  std::size_t ncols_;
  std::map<std::uint32_t, IntRow> pivots_;
};

/// Row-space rank of a list of rows.
std::size_t rank_of(const std::vector<RatRow>& rows, std::size_t ncols);

/// Solves a x = b for square nonsingular a. Throws InvalidArgument otherwise.
std::vector<Rational> solve_dense(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace argshift
