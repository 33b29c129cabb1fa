#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "argshift/argshift.hpp"
#include "argshift/poisson.hpp"
#include "argshift/subspace.hpp"

namespace argshift {

/// Basis of {f in S^n(g) : {q, f}_pencil = 0 for all q in qs}. Every q must be
/// homogeneous (InvalidArgument otherwise). The two graded pieces of
/// {q, f}_pencil (the Lie part in degree n + 1 and the gamma part in degree n)
/// occupy disjoint rows, so the result is the intersection of both kernels.
SubspaceMatrix poisson_centralizer(const std::vector<SparsePoly>& qs, unsigned n,
                                   const BracketPencil& pencil);

/// Eigenvalue of {q, .}_gamma on a monomial m, for
/// q = sum <alpha,h>/<alpha,mu> e_alpha e_{-alpha}:
///   sum over positive alpha of gamma(h_alpha) <alpha,h>/<alpha,mu> (n_{-alpha} - n_alpha).
/// Throws InvalidArgument if q is not that element.
Rational monomial_eigenvalue(const Monomial& m, const SparsePoly& q, const LieAlgebra& g,
                             const GammaFunctional& gamma, const CartanVector& mu,
                             const CartanVector& h);

/// Equal exponents on e_alpha and e_{-alpha} for every positive alpha.
bool is_balanced(const Monomial& m, const LieAlgebra& g);

struct DegenerateReport {
  unsigned degree = 0;
  CartanVector mu;
  CartanVector h;
  std::size_t balanced = 0;
  std::size_t unbalanced = 0;
  /// Unbalanced monomials whose eigenvalue vanishes (degenerate sample).
  std::vector<Monomial> offending;
  std::size_t centralizer_dim = 0;
  unsigned resamples = 0;

  bool nondegenerate() const { return offending.empty(); }
  /// Centralizer at t = 0 is spanned exactly by the balanced monomials.
  bool dims_match() const { return centralizer_dim == balanced; }
};

/// Single sample: classifies the degree-n monomials for q_h and computes the
/// centralizer of q_h at t = 0.
DegenerateReport degenerate_centralizer_check(const LieAlgebra& g, const CartanVector& mu,
                                              const CartanVector& h, unsigned n);

/// Samples regular (mu, h) until no unbalanced eigenvalue vanishes; throws
/// RetryExhausted listing the offending monomials after `retries` resamples.
DegenerateReport degenerate_centralizer_sampled(const LieAlgebra& g, unsigned n, Rng& rng,
                                                unsigned retries);

struct DegreeRecord {
  unsigned n = 0;
  std::size_t dim_centralizer = 0;
  std::size_t dim_a_mu = 0;
  bool containment = false;
  bool equal = false;
};

struct TheoremOneReport {
  std::string type;
  int rank = 0;
  CartanVector mu;
  std::uint64_t seed = 0;
  std::vector<DegreeRecord> degrees;
  unsigned resamples = 0;
  /// Why the last rejected sample failed (empty when the first sample passed).
  std::string last_failure;

  bool passed() const;
};

struct TheoremOneOptions {
  unsigned retries = 5;
  /// Also centralize h + S^2(h) + Q_mu and require the same subspace.
  bool full_slice = false;
};

/// Checks, for n = 1..n_max, that the degree-n part of the argument-shift
/// subalgebra lies in the Poisson centralizer of Q_mu and has the same
/// dimension. mu is sampled from `seed`; on failure mu is resampled up to
/// `retries` times. The last attempt's report is returned (passed() false if
/// every attempt failed).
TheoremOneReport verify_theorem1(const LieAlgebra& g, const InvariantGeneratorSet& invariants,
                                 unsigned n_max, std::uint64_t seed,
                                 const TheoremOneOptions& options = {});
TheoremOneReport verify_theorem1(const std::string& type, unsigned n_max, std::uint64_t seed,
                                 const TheoremOneOptions& options = {});

/// Same check for a fixed mu without resampling.
TheoremOneReport check_theorem1_at(const LieAlgebra& g, const InvariantGeneratorSet& invariants,
                                   const CartanVector& mu, unsigned n_max, bool full_slice = false);

}  // namespace argshift
