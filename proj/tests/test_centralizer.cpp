#include <doctest.h>

#include "argshift/argshift.hpp"
#include "argshift/centralizer.hpp"
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

TEST_CASE("monomial eigenvalues against the bracket") {
  LieAlgebra g(RootSystem::from_label("A2"));
  const auto gamma = GammaFunctional::standard(g);
  const auto gb = BracketPencil::gamma_bracket(g);
  Rng rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    const CartanVector mu = sample_regular(g.roots(), rng), h = sample_regular(g.roots(), rng);
    const SparsePoly q = q_element(g, mu, h);
    for (unsigned n = 0; n <= 2; ++n)
      for (const auto& m : monomials_of_degree(g.dim(), n)) {
        const Rational lambda = monomial_eigenvalue(m, q, g, gamma, mu, h);
        CHECK(poisson_bracket(q, SparsePoly::monomial(m), gb) == SparsePoly::monomial(m, lambda));
        if (is_balanced(m, g)) CHECK(lambda == 0);
      }
  }
  CHECK_THROWS_AS(monomial_eigenvalue(Monomial(g.dim()), q_element(g, cv({1, 1}), cv({1, 0})), g,
                                      gamma, cv({1, 1}), cv({0, 1})),
                  InvalidArgument);
}

TEST_CASE("degenerate centralizer dimensions") {
  LieAlgebra g(RootSystem::from_label("A2"));
  Rng rng(42);
  const std::vector<std::size_t> balanced{1, 2, 6, 10};
  for (unsigned n = 0; n <= 3; ++n) {
    const auto r = degenerate_centralizer_sampled(g, n, rng, 5);
    CHECK(r.nondegenerate());
    CHECK(r.balanced == balanced[n]);
    CHECK(r.balanced + r.unbalanced == count_monomials(g.dim(), n));
    CHECK(r.dims_match());
  }
  // h = mu makes some unbalanced eigenvalues vanish
  const auto bad = degenerate_centralizer_check(g, cv({1, 1}), cv({1, 1}), 3);
  CHECK_FALSE(bad.nondegenerate());
  CHECK(bad.centralizer_dim > bad.balanced);
}

TEST_CASE("centralizer preconditions") {
  LieAlgebra g(RootSystem::from_label("A1"));
  const auto lp = BracketPencil::lie_poisson(g);
  const SparsePoly x = SparsePoly::variable(3, 0);
  CHECK_THROWS_AS(poisson_centralizer({x + x * x}, 2, lp), InvalidArgument);
  CHECK(poisson_centralizer({}, 2, lp).num_rows() == 6);
}

TEST_CASE("centralizer matches the shift algebra") {
  SUBCASE("A1") {
    const auto rep = verify_theorem1("A1", 4, 7);
    CHECK(rep.passed());
    REQUIRE(rep.degrees.size() == 4);
    const std::vector<std::size_t> want{1, 2, 2, 3};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(rep.degrees[i].n == i + 1);
      CHECK(rep.degrees[i].dim_centralizer == want[i]);
      CHECK(rep.degrees[i].dim_a_mu == want[i]);
    }
  }
  SUBCASE("A2") {
    const auto rep = verify_theorem1("A2", 3, 7);
    CHECK(rep.passed());
    REQUIRE(rep.degrees.size() == 3);
    CHECK(rep.degrees[1].dim_centralizer == 5);
    const auto again = verify_theorem1("A2", 3, 7);
    CHECK(again.mu == rep.mu);
  }
  SUBCASE("A2 with the full slice") {
    TheoremOneOptions opts;
    opts.full_slice = true;
    CHECK(verify_theorem1("A2", 2, 3, opts).passed());
  }
  CHECK_THROWS_AS(verify_theorem1("A1", 0, 1), InvalidArgument);
}
