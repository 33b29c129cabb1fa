#include <doctest.h>

#include "argshift/errors.hpp"
#include "argshift/poly.hpp"
#include "argshift/random.hpp"

using namespace argshift;

namespace {

std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> p(n);
  for (auto& v : p) v = random_rational(rng);
  return p;
}

}  // namespace

TEST_CASE("monomial counts match binomials") {
  CHECK(count_monomials(3, 0) == 1);
  CHECK(count_monomials(3, 2) == 6);
  CHECK(count_monomials(8, 3) == 120);
  CHECK(count_monomials(10, 3) == 220);
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 4; ++d) {
      const auto ms = monomials_of_degree(n, d);
      CHECK(ms.size() == count_monomials(n, d));
      for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1] < ms[i]);
      for (const auto& m : ms) CHECK(m.degree() == d);
    }
}

TEST_CASE("monomial order is graded") {
  const Monomial x = Monomial::variable(2, 0), y = Monomial::variable(2, 1);
  CHECK(Monomial(2) < y);
  CHECK(x < y * y);
  CHECK(x < y);  // same degree: larger exponent vector of x comes first
  CHECK((x * y).without(0) == y);
}

TEST_CASE("small identities") {
  const SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  const SparsePoly one = SparsePoly::constant(2, 1);
  CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
  CHECK(x * one == x);
  CHECK((x - x).is_zero());
  CHECK((x - x).degree() == -1);
  CHECK((x * y).derivative(0) == y);
  CHECK((x + y * y).is_homogeneous() == false);
  CHECK((x + y * y).homogeneous_component(2) == y * y);
  CHECK((Rational(6) * x + Rational(4) * y).primitive() == Rational(3) * x + Rational(2) * y);
  CHECK((x + y).pow(0) == one);
  CHECK(SparsePoly(2).to_text({"x", "y"}) == "0");
  CHECK_THROWS_AS(x + SparsePoly::variable(3, 0), InvalidArgument);
}

TEST_CASE("ring axioms against evaluation") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4;
    const SparsePoly a = random_poly(rng, n, 3, 5), b = random_poly(rng, n, 3, 5),
                     c = random_poly(rng, n, 2, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    const auto p = random_point(rng, n);
    CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
    CHECK((a + c).evaluate(p) == a.evaluate(p) + c.evaluate(p));
    for (std::size_t i = 0; i < n; ++i)
      CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
  }
}

TEST_CASE("affine substitution and shift expansion") {
  Rng rng(12);
  const std::size_t n = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const SparsePoly f = random_poly(rng, n, 3, 6);
    const auto scale = random_point(rng, n), shift = random_point(rng, n), p = random_point(rng, n);
    std::vector<Rational> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = scale[i] * p[i] + shift[i];
    CHECK(f.affine_substitute(scale, shift).evaluate(p) == f.evaluate(q));

    // f(x + s d) = sum_k s^k c_k(x)
    const auto dir = random_point(rng, n);
    const auto parts = f.shift_expand(dir);
    const Rational s = random_rational(rng);
    std::vector<Rational> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = p[i] + s * dir[i];
    Rational sum, power = 1;
    for (const auto& c : parts) {
      sum += power * c.evaluate(p);
      power *= s;
    }
    CHECK(sum == f.evaluate(moved));
  }
}
