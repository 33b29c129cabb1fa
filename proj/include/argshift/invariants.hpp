#pragma once

#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"
#include "argshift/subspace.hpp"

namespace argshift {

/// Degrees d_1 <= ... <= d_l of the basic invariants of a simple type.
std::vector<unsigned> invariant_degrees(Family family, int rank);

/// Coefficient of q^n in prod_i 1/(1 - q^{d_i}): the dimension of the degree-n
/// part of a free commutative algebra on generators of the given degrees.
std::size_t free_algebra_dimension(const std::vector<unsigned>& degrees, unsigned n);

/// All multisets of generator indices whose degrees sum to n, in a fixed order.
std::vector<std::vector<std::size_t>> degree_multisets(const std::vector<unsigned>& degrees,
                                                       unsigned n);

/// S^n(g)^g as the common kernel of f -> {x, f} over the Chevalley generators
/// e_{+-alpha_i}, restricted to weight-zero monomials (invariants have weight
/// zero, and the simple root vectors generate g). Rows are in RREF.
SubspaceMatrix ad_invariant_space(const LieAlgebra& g, unsigned n);

struct InvariantGeneratorSet {
  std::vector<SparsePoly> generators;
  std::vector<unsigned> degrees;
};

/// Extracts basic invariants degree by degree: in each degree the new
/// generators are the RREF invariant vectors (earliest pivot first) not in the
/// span of products of earlier generators. Throws InvalidArgument if
/// max_degree is below the largest basic degree and InternalError if the
/// counts disagree with invariant_degrees.
InvariantGeneratorSet extract_generators(const LieAlgebra& g, unsigned max_degree);

}  // namespace argshift
