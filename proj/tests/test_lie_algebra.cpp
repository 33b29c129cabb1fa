#include <doctest.h>

#include "argshift/errors.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/random.hpp"

using namespace argshift;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero(std::size_t n) { return Matrix(n, std::vector<Rational>(n)); }

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  Matrix ab = mul(a, b), ba = mul(b, a);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

Rational trace(const Matrix& a) {
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m = zero(n);
  m[i][j] = 1;
  return m;
}

// Defining representation of sl_{l+1} built only from the simple root vectors
// E_{i,i+1}, E_{i+1,i} and the algebra's own structure constants: every other
// root vector is defined as a commutator of matrices divided by the table
// coefficient. The table is correct iff the resulting linear map is a
// homomorphism that carries the form to the trace form.
std::vector<Matrix> type_a_representation(const LieAlgebra& g) {
  const std::size_t l = g.rank(), n = l + 1;
  std::vector<Matrix> rho(g.dim());
  std::vector<bool> have(g.dim(), false);
  for (std::size_t i = 0; i < l; ++i) {
    Root a(l, 0);
    a[i] = 1;
    rho[g.root_index(a)] = unit(n, i, i + 1);
    rho[g.root_index(negate(a))] = unit(n, i + 1, i);
    have[g.root_index(a)] = have[g.root_index(negate(a))] = true;
    Matrix h = zero(n);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    rho[g.cartan_index(i)] = h;
    have[g.cartan_index(i)] = true;
  }
  for (const auto& alpha : g.roots().positive_roots()) {
    for (int sign : {1, -1}) {
      Root target = sign > 0 ? alpha : negate(alpha);
      const std::size_t t = g.root_index(target);
      if (have[t]) continue;
      for (std::size_t i = 0; i < l && !have[t]; ++i) {
        Root s(l, 0);
        s[i] = sign;
        Root rest = target;
        rest[i] -= sign;
        if (!g.roots().is_root(rest)) continue;
        const std::size_t a = g.root_index(s), b = g.root_index(rest);
        if (!have[b]) continue;
        Rational c;
        for (const auto& term : g.bracket(a, b))
          if (term.index == t) c = term.coeff;
        REQUIRE(c != 0);
        Matrix m = commutator(rho[a], rho[b]);
        for (auto& row : m)
          for (auto& v : row) v /= c;
        rho[t] = m;
        have[t] = true;
      }
    }
  }
  for (bool h : have) REQUIRE(h);
  return rho;
}

}  // namespace

TEST_CASE("A1 is sl2 with (e, f) = 1") {
  LieAlgebra g(RootSystem::from_label("A1"));
  REQUIRE(g.dim() == 3);
  const std::size_t f = g.root_index({-1}), h = g.cartan_index(0), e = g.root_index({1});
  CHECK(f == 0);
  CHECK(h == 1);
  CHECK(e == 2);
  CHECK(g.name(f) == "e[-1]");
  CHECK(g.name(h) == "h[1]");
  CHECK(g.name(e) == "e[+1]");
  CHECK(g.form(e, f) == 1);
  CHECK(g.lie_bracket(g.basis_vector(e), g.basis_vector(f)) == g.basis_vector(h));
  // [h_{alpha_1}, e] = <alpha_1, h_{alpha_1}> e = 2 e
  const Rational w = g.roots().pairing({1}, CartanVector(std::vector<Rational>{1}));
  CHECK(w == 2);
  LieVector expect = g.basis_vector(e);
  expect[e] = w;
  CHECK(g.lie_bracket(g.basis_vector(h), g.basis_vector(e)) == expect);
}

TEST_CASE("Jacobi, antisymmetry, invariance and normalization for all tested types") {
  for (const char* label : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    CAPTURE(label);
    LieAlgebra g(RootSystem::from_label(label));
    const std::size_t n = g.dim();
    std::vector<LieVector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(g.basis_vector(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LieVector a = g.lie_bracket(basis[i], basis[j]);
        LieVector b = g.lie_bracket(basis[j], basis[i]);
        for (std::size_t k = 0; k < n; ++k) CHECK(a[k] == -b[k]);
      }
    bool jacobi = true, invariant = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          LieVector s = g.lie_bracket(g.lie_bracket(basis[i], basis[j]), basis[k]);
          LieVector t = g.lie_bracket(g.lie_bracket(basis[j], basis[k]), basis[i]);
          LieVector u = g.lie_bracket(g.lie_bracket(basis[k], basis[i]), basis[j]);
          for (std::size_t m = 0; m < n; ++m)
            if (s[m] + t[m] + u[m] != 0) jacobi = false;
          if (g.form(g.lie_bracket(basis[i], basis[j]), basis[k]) +
                  g.form(basis[j], g.lie_bracket(basis[i], basis[k])) != 0)
            invariant = false;
        }
    CHECK(jacobi);
    CHECK(invariant);

    const RootSystem& rs = g.roots();
    for (const auto& alpha : rs.positive_roots()) {
      const std::size_t p = g.root_index(alpha), m = g.root_index(negate(alpha));
      CHECK(g.form(p, m) == 1);
      const LieVector h_alpha = g.lie_bracket(basis[p], basis[m]);
      CHECK(h_alpha == g.cartan_from_form(g.coroot_element(alpha)));
      for (std::size_t j = 0; j < g.rank(); ++j) {
        CartanVector hj = CartanVector::zero(g.rank());
        hj[j] = 1;
        CHECK(g.form(h_alpha, g.cartan_from_form(hj)) == rs.pairing(alpha, hj));
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (k != m) CHECK(g.form(p, k) == 0);
      }
    }
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t j = 0; j < g.rank(); ++j)
        CHECK(g.bracket(g.cartan_index(i), g.cartan_index(j)).empty());
  }
}

TEST_CASE("Chevalley constants have magnitude p + 1") {
  for (const char* label : {"B2", "C2", "G2", "A3"}) {
    LieAlgebra g(RootSystem::from_label(label));
    const auto& pos = g.roots().positive_roots();
    for (const auto& a : pos)
      for (const auto& b : pos) {
        const Root s = add(a, b);
        if (!g.roots().is_root(s)) continue;
        int p = 0;
        Root r = b;
        for (;;) {
          for (std::size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
          if (!g.roots().is_root(r)) break;
          ++p;
        }
        CHECK(abs(g.chevalley_constant(a, b)) == p + 1);
      }
  }
}

TEST_CASE("type A structure constants match the defining representation") {
  for (const char* label : {"A1", "A2", "A3"}) {
    CAPTURE(label);
    LieAlgebra g(RootSystem::from_label(label));
    const auto rho = type_a_representation(g);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix image = zero(g.rank() + 1);
        for (const auto& t : g.bracket(i, j))
          for (std::size_t r = 0; r <= g.rank(); ++r)
            for (std::size_t c = 0; c <= g.rank(); ++c) image[r][c] += t.coeff * rho[t.index][r][c];
        CHECK(image == commutator(rho[i], rho[j]));
        CHECK(trace(mul(rho[i], rho[j])) == g.form(i, j));
      }
  }
}

TEST_CASE("A2 brackets against 3x3 matrices") {
  LieAlgebra g(RootSystem::from_label("A2"));
  const auto rho = type_a_representation(g);
  const std::size_t e1 = g.root_index({1, 0}), e2 = g.root_index({0, 1}), e12 = g.root_index({1, 1});
  const std::size_t f1 = g.root_index({-1, 0});
  // [e_a1, e_a2] = c e_{a1+a2} with |c| = 1: [E12, E23] = E13.
  const auto& b = g.bracket(e1, e2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].index == e12);
  CHECK(abs(b[0].coeff) == 1);
  // the realized e_{a1+a2} is +-E13
  CHECK(abs(rho[e12][0][2]) == 1);
  // [e_{a1+a2}, e_{-a1}] is proportional to e_{a2}; coefficient from matrices
  const auto& b2 = g.bracket(e12, f1);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].index == e2);
  const Matrix m = commutator(rho[e12], rho[f1]);
  CHECK(m[1][2] == b2[0].coeff * rho[e2][1][2]);
}

TEST_CASE("lie_bracket properties") {
  Rng rng(5);
  LieAlgebra g(RootSystem::from_label("B2"));
  for (int trial = 0; trial < 20; ++trial) {
    LieVector x(g.dim());
    for (auto& v : x) v = random_rational(rng);
    CHECK(g.lie_bracket(x, x) == LieVector(g.dim()));
    // [h, e_alpha] = <alpha, h> e_alpha for random Cartan h
    CartanVector h(std::vector<Rational>{random_rational(rng), random_rational(rng)});
    for (const auto& alpha : g.roots().positive_roots())
      for (const Root& r : {alpha, negate(alpha)}) {
        const std::size_t i = g.root_index(r);
        LieVector expect(g.dim());
        expect[i] = g.roots().pairing(r, h);
        CHECK(g.lie_bracket(g.cartan_from_form(h), g.basis_vector(i)) == expect);
      }
  }
  CHECK_THROWS_AS(g.lie_bracket(LieVector(3), LieVector(g.dim())), InvalidArgument);
}

TEST_CASE("cartan_from_form and the Gram solve") {
  Rng rng(9);
  LieAlgebra g(RootSystem::from_label("G2"));
  CHECK(g.cartan_from_form(CartanVector::zero(2)) == LieVector(g.dim()));
  CHECK(g.cartan_from_form(CartanVector(std::vector<Rational>{0, 1})) ==
        g.basis_vector(g.cartan_index(1)));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> values{random_rational(rng), random_rational(rng)};
    const LieVector h = g.cartan_from_functional(values);
    for (std::size_t j = 0; j < 2; ++j) CHECK(g.form(h, g.basis_vector(g.cartan_index(j))) == values[j]);
    // mu as an element of h reproduces <alpha_j, mu>
    CartanVector mu(std::vector<Rational>{random_rational(rng), random_rational(rng)});
    for (std::size_t j = 0; j < 2; ++j) {
      Root aj(2, 0);
      aj[j] = 1;
      CHECK(g.form(g.cartan_from_form(mu), g.basis_vector(g.cartan_index(j))) == g.roots().pairing(aj, mu));
    }
  }
}

TEST_CASE("basis names round trip") {
  LieAlgebra g(RootSystem::from_label("A2"));
  CHECK(g.name(g.root_index({1, 1})) == "e[+1,1]");
  CHECK(g.name(g.root_index({-1, -1})) == "e[-1,1]");
  for (std::size_t i = 0; i < g.dim(); ++i) CHECK(*g.index_of_name(g.name(i)) == i);
  CHECK_FALSE(g.index_of_name("e[+2,2]").has_value());
}
