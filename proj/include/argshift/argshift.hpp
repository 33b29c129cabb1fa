#pragma once

#include <vector>

#include "argshift/invariants.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"
#include "argshift/random.hpp"
#include "argshift/subspace.hpp"

namespace argshift {

/// Random Cartan vector with integer coordinates in [-9, 9], resampled until
/// regular.
CartanVector sample_regular(const RootSystem& rs, Rng& rng);

/// k! times the coefficient of s^k in phi(x + s mu), phi read as a function on
/// g* and mu as the functional (h_mu, .). Zero for k > deg phi.
/// Throws InvalidArgument for k < 0 or inhomogeneous phi.
SparsePoly directional_derivative(const SparsePoly& phi, const LieAlgebra& g,
                                  const CartanVector& mu, int k);

/// q_h = sum over positive alpha of <alpha,h>/<alpha,mu> e_alpha e_{-alpha}.
/// Throws NotRegular naming the first root with <alpha, mu> = 0.
SparsePoly q_element(const LieAlgebra& g, const CartanVector& mu, const CartanVector& h);

/// Basis q_{h_{alpha_1}}, ..., q_{h_{alpha_l}} of Q_mu.
std::vector<SparsePoly> build_Q_mu(const LieAlgebra& g, const CartanVector& mu);

/// The quadratic slice C + h + S^2(h) + Q_mu.
struct QuadraticSlice {
  CartanVector mu;
  std::vector<SparsePoly> constants;
  std::vector<SparsePoly> cartan;
  std::vector<SparsePoly> cartan_squares;
  std::vector<SparsePoly> q_mu;

  std::vector<SparsePoly> basis() const;
  std::size_t dim() const {
    return constants.size() + cartan.size() + cartan_squares.size() + q_mu.size();
  }
};

QuadraticSlice build_quadratic_slice(const LieAlgebra& g, const CartanVector& mu);

struct ShiftGenerator {
  SparsePoly poly;
  std::size_t invariant;  ///< index of the basic invariant it came from
  unsigned order;         ///< number of derivatives along mu
  unsigned degree;
};

/// The generators d_mu^k Phi_i (0 <= k < deg Phi_i) of the argument-shift
/// subalgebra.
struct ShiftFamily {
  CartanVector mu;
  std::size_t nvars = 0;
  std::vector<ShiftGenerator> generators;

  std::vector<unsigned> degrees() const;
  std::vector<SparsePoly> polys() const;
};

/// Throws NotRegular for non-regular mu and InternalError if two generators
/// fail to Poisson-commute.
ShiftFamily build_shift_family(const LieAlgebra& g, const CartanVector& mu,
                               const InvariantGeneratorSet& invariants);

/// Span of all products of family generators of total degree n.
SubspaceMatrix a_mu_space(const ShiftFamily& fam, unsigned n);

/// Dimension of the degree-n part of the subalgebra. Throws
/// DependentGenerators when the products are linearly dependent (the count
/// falls short of the free-monomial count).
std::size_t a_mu_graded_dim(const ShiftFamily& fam, unsigned n);

}  // namespace argshift
