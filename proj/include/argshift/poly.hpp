#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "argshift/rational.hpp"

namespace argshift {

/// Exponent vector over the ordered Lie basis.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  /// Divides by x_i once; requires exponent of x_i > 0.
  Monomial without(std::size_t i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Graded order: total degree first, then exponent vectors in descending
  /// lexicographic order, so x_0^n is the first monomial of degree n.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return b.exps_ < a.exps_;
  }

 private:
  std::vector<std::uint8_t> exps_;
  unsigned degree_ = 0;
};

/// All monomials of total degree n in nvars variables, in Monomial order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned n);
/// Number of monomials of degree n in nvars variables, C(n + nvars - 1, n).
std::size_t count_monomials(std::size_t nvars, unsigned n);

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables. No zero coefficients are stored; values are immutable
/// through the public operators.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t i);
  static SparsePoly monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }
  bool is_homogeneous() const;
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m in place (drops the term if it cancels).
  void add_term(const Monomial& m, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned k) const;
  SparsePoly derivative(std::size_t i) const;
  SparsePoly homogeneous_component(unsigned n) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Substitutes x_i -> scale[i] * x_i + shift[i] (algebra homomorphism).
  SparsePoly affine_substitute(const std::vector<Rational>& scale,
                               const std::vector<Rational>& shift) const;
  /// Coefficients of s^k, k = 0..degree, in p(x + s * direction).
  std::vector<SparsePoly> shift_expand(const std::vector<Rational>& direction) const;

  /// Rescales to integer coefficients with content 1 and positive leading
  /// (largest-monomial) coefficient. Zero stays zero.
  SparsePoly primitive() const;

  /// Text form: "c * name^k * name + c" with terms from the highest monomial down.
  std::string to_text(const std::vector<std::string>& names) const;

 private:
  void check_same(const SparsePoly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace argshift
