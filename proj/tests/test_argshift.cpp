#include <doctest.h>

#include <algorithm>

#include "argshift/argshift.hpp"
#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"

using namespace argshift;

namespace {

CartanVector cv(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return CartanVector(v);
}

}  // namespace

TEST_CASE("directional derivative") {
  LieAlgebra g(RootSystem::from_label("A1"));
  const auto inv = extract_generators(g, 2);
  const SparsePoly& c = inv.generators[0];
  const CartanVector mu = cv({1});
  CHECK(directional_derivative(c, g, mu, 0) == c);
  const SparsePoly d1 = directional_derivative(c, g, mu, 1);
  const SparsePoly h = SparsePoly::variable(3, g.cartan_index(0));
  REQUIRE_FALSE(d1.is_zero());
  CHECK(d1.primitive() == h.primitive());
  CHECK(directional_derivative(c, g, mu, 2).degree() == 0);
  CHECK(directional_derivative(c, g, mu, 3).is_zero());
}

TEST_CASE("regularity") {
  LieAlgebra g(RootSystem::from_label("A2"));
  CHECK_THROWS_AS(q_element(g, cv({1, -1}), cv({1, 0})), NotRegular);
  CHECK_THROWS_AS(build_Q_mu(g, cv({1, 2})), NotRegular);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) CHECK(g.roots().is_regular(sample_regular(g.roots(), rng)));
}

TEST_CASE("quadratic slice") {
  for (const auto& [label, l] :
       std::vector<std::pair<const char*, std::size_t>>{{"A1", 1}, {"A2", 2}, {"B2", 2}}) {
    LieAlgebra g(RootSystem::from_label(label));
    Rng rng(4);
    const CartanVector mu = sample_regular(g.roots(), rng);
    const auto q = build_Q_mu(g, mu);
    CHECK(q.size() == l);
    const auto slice = build_quadratic_slice(g, mu);
    CHECK(slice.dim() == 1 + l + l * (l + 1) / 2 + l);
    // Q_mu is stable under psi_t: each element scales by t^-2
    const auto gamma = GammaFunctional::standard(g);
    for (const auto& p : q) {
      CHECK(p.is_homogeneous());
      CHECK(p.degree() == 2);
      CHECK(psi_t(p, Rational(3), gamma) == p * Rational(1, 9));
    }
  }
}

TEST_CASE("shift families") {
  for (const auto& [label, degs] : std::vector<std::pair<const char*, std::vector<unsigned>>>{
           {"A1", {1, 2}}, {"A2", {1, 1, 2, 2, 3}}, {"B2", {1, 1, 2, 2, 3, 4}}}) {
    CAPTURE(label);
    LieAlgebra g(RootSystem::from_label(label));
    const auto inv = extract_generators(g, 4);
    const auto lp = BracketPencil::lie_poisson(g);
    Rng rng(5);
    for (int k = 0; k < 3; ++k) {
      const ShiftFamily fam = build_shift_family(g, sample_regular(g.roots(), rng), inv);
      auto d = fam.degrees();
      std::sort(d.begin(), d.end());
      CHECK(d == degs);
      const auto polys = fam.polys();
      for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
          CHECK(poisson_bracket(polys[i], polys[j], lp).is_zero());
    }
  }
}

TEST_CASE("graded dimension of the shift algebra") {
  LieAlgebra g(RootSystem::from_label("A1"));
  const auto inv = extract_generators(g, 2);
  const ShiftFamily fam = build_shift_family(g, cv({1}), inv);
  const std::vector<std::size_t> want{1, 1, 2, 2, 3};
  for (unsigned n = 0; n < want.size(); ++n) CHECK(a_mu_graded_dim(fam, n) == want[n]);

  ShiftFamily dup = fam;
  dup.generators.push_back(fam.generators.front());
  CHECK_THROWS_AS(a_mu_graded_dim(dup, 2), DependentGenerators);

  LieAlgebra a2(RootSystem::from_label("A2"));
  const ShiftFamily f2 = build_shift_family(a2, cv({2, 5}), extract_generators(a2, 3));
  CHECK(a_mu_graded_dim(f2, 1) == 2);
  CHECK(a_mu_graded_dim(f2, 2) == 5);
}
