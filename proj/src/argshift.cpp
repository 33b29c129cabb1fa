#include "argshift/argshift.hpp"

#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"

namespace argshift {

CartanVector sample_regular(const RootSystem& rs, Rng& rng) {
  for (;;) {
    std::vector<Rational> c(rs.rank());
    for (auto& x : c) x = uniform_int(rng, -9, 9);
    CartanVector mu(std::move(c));
    if (rs.is_regular(mu)) return mu;
  }
}

SparsePoly directional_derivative(const SparsePoly& phi, const LieAlgebra& g,
                                  const CartanVector& mu, int k) {
  if (k < 0) throw InvalidArgument("directional_derivative: negative order");
  if (!phi.is_homogeneous()) throw InvalidArgument("directional_derivative: inhomogeneous input");
  if (phi.nvars() != g.dim()) throw InvalidArgument("basis mismatch");
  if (phi.is_zero() || k > phi.degree()) return SparsePoly(g.dim());
  auto coeffs = phi.shift_expand(g.dual_coordinates(g.cartan_from_form(mu)));
  return coeffs[k] * Rational(factorial(static_cast<unsigned>(k)));
}

SparsePoly q_element(const LieAlgebra& g, const CartanVector& mu, const CartanVector& h) {
  const RootSystem& rs = g.roots();
  if (auto bad = rs.vanishing_root(mu)) {
    std::string name = g.name(g.root_index(*bad));
    throw NotRegular("mu is not regular: <alpha, mu> = 0 for alpha = " + name);
  }
  const std::size_t n = g.dim();
  SparsePoly q(n);
  for (const auto& alpha : rs.positive_roots()) {
    const Rational c = rs.pairing(alpha, h) / rs.pairing(alpha, mu);
    Monomial m(n);
    m.set(g.root_index(alpha), 1);
    m.set(g.root_index(negate(alpha)), 1);
    q.add_term(m, c);
  }
  return q;
}

std::vector<SparsePoly> build_Q_mu(const LieAlgebra& g, const CartanVector& mu) {
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    CartanVector h = CartanVector::zero(g.rank());
    h[i] = 1;
    out.push_back(q_element(g, mu, h));
  }
  return out;
}

std::vector<SparsePoly> QuadraticSlice::basis() const {
  std::vector<SparsePoly> out;
  for (const auto* block : {&constants, &cartan, &cartan_squares, &q_mu})
    out.insert(out.end(), block->begin(), block->end());
  return out;
}

QuadraticSlice build_quadratic_slice(const LieAlgebra& g, const CartanVector& mu) {
  QuadraticSlice s;
  s.mu = mu;
  s.q_mu = build_Q_mu(g, mu);
  const std::size_t n = g.dim();
  s.constants.push_back(SparsePoly::constant(n, 1));
  for (std::size_t i = 0; i < g.rank(); ++i) s.cartan.push_back(SparsePoly::variable(n, g.cartan_index(i)));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i; j < g.rank(); ++j) s.cartan_squares.push_back(s.cartan[i] * s.cartan[j]);
  return s;
}

std::vector<unsigned> ShiftFamily::degrees() const {
  std::vector<unsigned> d;
  for (const auto& gen : generators) d.push_back(gen.degree);
  return d;
}

std::vector<SparsePoly> ShiftFamily::polys() const {
  std::vector<SparsePoly> p;
  for (const auto& gen : generators) p.push_back(gen.poly);
  return p;
}

ShiftFamily build_shift_family(const LieAlgebra& g, const CartanVector& mu,
                               const InvariantGeneratorSet& invariants) {
  if (auto bad = g.roots().vanishing_root(mu))
    throw NotRegular("mu is not regular: <alpha, mu> = 0 for alpha = " + g.name(g.root_index(*bad)));
  ShiftFamily fam;
  fam.mu = mu;
  fam.nvars = g.dim();
  const auto direction = g.dual_coordinates(g.cartan_from_form(mu));
  for (std::size_t i = 0; i < invariants.generators.size(); ++i) {
    const SparsePoly& phi = invariants.generators[i];
    const unsigned d = invariants.degrees[i];
    // One expansion of phi(x + s h_mu) yields every order.
    const auto coeffs = phi.shift_expand(direction);
    for (unsigned k = 0; k < d; ++k)
      fam.generators.push_back({coeffs[k] * Rational(factorial(k)), i, k, d - k});
  }
  const auto pencil = BracketPencil::lie_poisson(g);
  for (std::size_t a = 0; a < fam.generators.size(); ++a)
    for (std::size_t b = a + 1; b < fam.generators.size(); ++b)
      if (!poisson_bracket(fam.generators[a].poly, fam.generators[b].poly, pencil).is_zero())
        throw InternalError("shift generators " + std::to_string(a) + " and " + std::to_string(b) +
                            " do not Poisson-commute");
  return fam;
}

SubspaceMatrix a_mu_space(const ShiftFamily& fam, unsigned n) {
  SubspaceMatrix out(fam.nvars, n);
  for (const auto& ms : degree_multisets(fam.degrees(), n)) {
    SparsePoly p = SparsePoly::constant(fam.nvars, 1);
    for (std::size_t k : ms) p = p * fam.generators[k].poly;
    out.add_poly(p);
  }
  return out;
}

std::size_t a_mu_graded_dim(const ShiftFamily& fam, unsigned n) {
  const SubspaceMatrix span = a_mu_space(fam, n);
  const std::size_t r = rank(span);
  if (r < span.num_rows())
    throw DependentGenerators("degree " + std::to_string(n) + ": products span " +
                              std::to_string(r) + " dimensions, free count is " +
                              std::to_string(span.num_rows()));
  return r;
}

}  // namespace argshift
