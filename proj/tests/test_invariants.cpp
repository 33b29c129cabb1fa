#include <doctest.h>

#include "argshift/errors.hpp"
#include "argshift/invariants.hpp"
#include "argshift/poisson.hpp"

using namespace argshift;

namespace {

// Coefficient of x^n in prod_i 1/(1 - x^{d_i}), by direct series multiplication.
std::size_t series_coefficient(const std::vector<unsigned>& degrees, unsigned n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (unsigned d : degrees)
    for (unsigned k = d; k <= n; ++k) c[k] += c[k - d];
  return c[n];
}

}  // namespace

TEST_CASE("degrees of basic invariants") {
  CHECK(invariant_degrees(Family::A, 1) == std::vector<unsigned>{2});
  CHECK(invariant_degrees(Family::A, 3) == std::vector<unsigned>{2, 3, 4});
  CHECK(invariant_degrees(Family::B, 2) == std::vector<unsigned>{2, 4});
  CHECK(invariant_degrees(Family::C, 3) == std::vector<unsigned>{2, 4, 6});
  CHECK(invariant_degrees(Family::D, 4) == std::vector<unsigned>{2, 4, 4, 6});
  CHECK(invariant_degrees(Family::G, 2) == std::vector<unsigned>{2, 6});
  CHECK(invariant_degrees(Family::F, 4) == std::vector<unsigned>{2, 6, 8, 12});
  CHECK(invariant_degrees(Family::E, 6) == std::vector<unsigned>{2, 5, 6, 8, 9, 12});
}

TEST_CASE("free algebra dimension matches series") {
  for (const auto& d : std::vector<std::vector<unsigned>>{{2}, {2, 3}, {2, 4}, {2, 6}, {2, 3, 4}})
    for (unsigned n = 0; n <= 12; ++n) {
      CHECK(free_algebra_dimension(d, n) == series_coefficient(d, n));
      CHECK(degree_multisets(d, n).size() == series_coefficient(d, n));
    }
}

TEST_CASE("A1 invariants") {
  LieAlgebra g(RootSystem::from_label("A1"));
  CHECK(rank(ad_invariant_space(g, 0)) == 1);
  CHECK(rank(ad_invariant_space(g, 1)) == 0);
  const auto two = ad_invariant_space(g, 2);
  REQUIRE(rank(two) == 1);
  const SparsePoly e = SparsePoly::variable(3, g.root_index({1})),
                   f = SparsePoly::variable(3, g.root_index({-1})),
                   h = SparsePoly::variable(3, g.cartan_index(0));
  const SparsePoly c = Rational(4) * e * f + h * h;
  CHECK(two.polys()[0].primitive() == c.primitive());
}

TEST_CASE("invariant dimensions follow the counting series") {
  struct Case {
    const char* label;
    unsigned nmax;
  };
  for (const Case& k : {Case{"A1", 6}, Case{"A2", 6}, Case{"B2", 4}, Case{"G2", 2}}) {
    CAPTURE(k.label);
    const RootSystem rs = RootSystem::from_label(k.label);
    LieAlgebra g(rs);
    const auto degs = invariant_degrees(rs.family(), rs.rank());
    for (unsigned n = 0; n <= k.nmax; ++n) {
      CAPTURE(n);
      CHECK(rank(ad_invariant_space(g, n)) == series_coefficient(degs, n));
    }
  }
}

TEST_CASE("extracted generators") {
  for (const auto& [label, degs] : std::vector<std::pair<const char*, std::vector<unsigned>>>{
           {"A1", {2}}, {"A2", {2, 3}}, {"B2", {2, 4}}, {"C2", {2, 4}}}) {
    LieAlgebra g(RootSystem::from_label(label));
    const auto set = extract_generators(g, degs.back());
    CHECK(set.degrees == degs);
    const auto lp = BracketPencil::lie_poisson(g);
    for (const auto& p : set.generators) {
      CHECK(p.is_homogeneous());
      for (std::size_t i = 0; i < g.dim(); ++i)
        CHECK(poisson_bracket(p, SparsePoly::variable(g.dim(), i), lp).is_zero());
    }
  }
  LieAlgebra a2(RootSystem::from_label("A2"));
  CHECK_THROWS_AS(extract_generators(a2, 2), InvalidArgument);
}
