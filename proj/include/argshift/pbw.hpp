#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "argshift/argshift.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

/// Element of U(g) in PBW normal form: a combination of ordered monomials
/// x_0^{k_0} x_1^{k_1} ... in the Lie basis order (negative root vectors,
/// Cartan, positive root vectors). Stored as exponent vectors.
class UEAElement {
 public:
  explicit UEAElement(std::size_t nvars) : coeffs_(nvars) {}
  static UEAElement one(std::size_t nvars);

  std::size_t nvars() const { return coeffs_.nvars(); }
  bool is_zero() const { return coeffs_.is_zero(); }
  int filtration_degree() const { return coeffs_.degree(); }
  const SparsePoly::Terms& terms() const { return coeffs_.terms(); }
  void add_term(const Monomial& m, const Rational& c) { coeffs_.add_term(m, c); }

  /// Associated graded image: the top filtration component as a polynomial.
  SparsePoly gr() const;
  /// All ordered monomials read as commuting monomials.
  const SparsePoly& as_poly() const { return coeffs_; }

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rational& c);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.coeffs_ == b.coeffs_; }

  /// Same layout as the polynomial text form; "*" is the ordered product.
  std::string to_text(const std::vector<std::string>& names) const { return coeffs_.to_text(names); }

 private:
  SparsePoly coeffs_;
};

/// Universal enveloping algebra of g with PBW straightening. Keeps a memo
/// table of x_i * (ordered monomial); not safe for concurrent use.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(const LieAlgebra& g) : g_(&g) {}

  const LieAlgebra& algebra() const { return *g_; }
  std::size_t nvars() const { return g_->dim(); }

  UEAElement generator(std::size_t i) const;
  /// Normal form of the word x_{w_0} x_{w_1} ... .
  UEAElement straighten(const std::vector<std::size_t>& word);
  UEAElement multiply(const UEAElement& a, const UEAElement& b);
  UEAElement commutator(const UEAElement& a, const UEAElement& b);
  /// Each monomial x_1...x_k goes to the average of its k! orderings.
  UEAElement symmetrize(const SparsePoly& p);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const UEAElement& left_multiply(std::size_t i, const Monomial& m);
  UEAElement left_multiply(std::size_t i, const UEAElement& a);

  const LieAlgebra* g_;
  std::map<std::pair<std::size_t, Monomial>, UEAElement> cache_;
};

struct LiftWitness {
  std::size_t first;
  std::size_t second;
  std::string commutator;
};

struct LiftCheck {
  std::size_t pairs_checked = 0;
  bool all_commute = true;
  std::vector<LiftWitness> witnesses;
};

/// Symmetrizes every basis element of the slice and checks that all pairs
/// commute in U(g). A non-commuting pair is reported, not thrown.
LiftCheck check_quadratic_lift(EnvelopingAlgebra& u, const QuadraticSlice& slice);

}  // namespace argshift
