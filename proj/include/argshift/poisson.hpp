#pragma once

#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

/// Linear functional on g given by its values on the Lie basis.
class GammaFunctional {
 public:
  explicit GammaFunctional(std::vector<Rational> values) : values_(std::move(values)) {}
  /// gamma(h_{alpha_i}) = 1, gamma(e_alpha) = 0.
  static GammaFunctional standard(const LieAlgebra& g);

  const Rational& operator()(std::size_t basis_index) const { return values_[basis_index]; }
  Rational operator()(const LieVector& x) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// The bracket t{.,.} + (1 - t){.,.}_gamma on S(g). Holds a reference to the
/// Lie algebra, which must outlive the pencil.
class BracketPencil {
 public:
  BracketPencil(const LieAlgebra& g, Rational t);
  BracketPencil(const LieAlgebra& g, Rational t, GammaFunctional gamma);

  /// The Poisson-Lie bracket (t = 1).
  static BracketPencil lie_poisson(const LieAlgebra& g) { return BracketPencil(g, 1); }
  /// The constant bracket {x, y}_gamma = gamma([x, y]) (t = 0).
  static BracketPencil gamma_bracket(const LieAlgebra& g) { return BracketPencil(g, 0); }

  const LieAlgebra& algebra() const { return *g_; }
  const Rational& t() const { return t_; }
  const GammaFunctional& gamma() const { return gamma_; }
  std::size_t nvars() const { return g_->dim(); }

  /// {x_i, x_j}_t = t [x_i, x_j] + (1 - t) gamma([x_i, x_j]).
  const SparsePoly& generator_bracket(std::size_t i, std::size_t j) const {
    return generators_[i * g_->dim() + j];
  }

 private:
  const LieAlgebra* g_;
  Rational t_;
  GammaFunctional gamma_;
  std::vector<SparsePoly> generators_;
};

/// Biderivation extending the generator brackets of the pencil.
SparsePoly poisson_bracket(const SparsePoly& f, const SparsePoly& g, const BracketPencil& pencil);

/// gamma([x, y]) for polynomials of degree <= 1 (constants contribute nothing).
/// Throws InvalidArgument on nonlinear input.
Rational gamma_of_bracket(const SparsePoly& x, const SparsePoly& y, const LieAlgebra& g,
                          const GammaFunctional& gamma);

/// Algebra map S(g)_1 -> S(g)_t given on generators by
/// x -> x / t + (1 - t) gamma(x) / t^2. Throws InvalidArgument for t = 0.
SparsePoly psi_t(const SparsePoly& f, const Rational& t, const GammaFunctional& gamma);

/// Linear polynomial with the given coefficients, and back.
SparsePoly linear_poly(const LieVector& x);
LieVector linear_part(const SparsePoly& p);

}  // namespace argshift
