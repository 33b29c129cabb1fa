#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "argshift/linalg.hpp"
#include "argshift/poly.hpp"

namespace argshift {

/// A subspace of S^n(g) given by coefficient rows over an ordered monomial
/// basis. The basis is usually all of S^n(g) but may be any sorted subset
/// (e.g. the weight-zero monomials).
class SubspaceMatrix {
 public:
  SubspaceMatrix(std::size_t nvars, unsigned degree);
  SubspaceMatrix(std::size_t nvars, unsigned degree, std::vector<Monomial> columns);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& columns() const { return columns_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<RatRow>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }

  std::optional<std::uint32_t> column_of(const Monomial& m) const;

  void add_row(RatRow row);
  /// Throws InvalidArgument if p has a monomial outside the column basis.
  void add_poly(const SparsePoly& p);
  RatRow row_of(const SparsePoly& p) const;
  SparsePoly poly_of(const RatRow& row) const;
  std::vector<SparsePoly> polys() const;

  /// Same columns, no rows.
  SubspaceMatrix empty_like() const;

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> columns_;
  std::vector<RatRow> rows_;
};

std::size_t rank(const SubspaceMatrix& m);
/// Reduced row-echelon form of the row space.
SubspaceMatrix rref(const SubspaceMatrix& m);
/// Null space {x : M x = 0}, expressed over the same columns.
SubspaceMatrix kernel(const SubspaceMatrix& m);
/// Row space of `inner` is contained in the row space of `outer`.
bool row_space_contains(const SubspaceMatrix& outer, const SubspaceMatrix& inner);

/// Kernel of a linear map on span(domain) given by the images of the domain
/// monomials. Each image is a list of polynomials (one per component map);
/// the kernel is the common kernel of all components. Images are computed in
/// parallel; row assembly is deterministic.
SubspaceMatrix map_kernel(std::size_t nvars, unsigned degree, std::vector<Monomial> domain,
                          const std::function<std::vector<SparsePoly>(const Monomial&)>& image);

}  // namespace argshift
