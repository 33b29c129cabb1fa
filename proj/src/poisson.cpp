#include "argshift/poisson.hpp"

#include "argshift/errors.hpp"

namespace argshift {

GammaFunctional GammaFunctional::standard(const LieAlgebra& g) {
  std::vector<Rational> v(g.dim());
  for (std::size_t i = 0; i < g.rank(); ++i) v[g.cartan_index(i)] = 1;
  return GammaFunctional(std::move(v));
}

Rational GammaFunctional::operator()(const LieVector& x) const {
  if (x.size() != values_.size()) throw InvalidArgument("gamma: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && values_[i] != 0) s += x[i] * values_[i];
  return s;
}

BracketPencil::BracketPencil(const LieAlgebra& g, Rational t)
    : BracketPencil(g, std::move(t), GammaFunctional::standard(g)) {}

BracketPencil::BracketPencil(const LieAlgebra& g, Rational t, GammaFunctional gamma)
    : g_(&g), t_(std::move(t)), gamma_(std::move(gamma)) {
  const std::size_t n = g.dim();
  if (gamma_.values().size() != n) throw InvalidArgument("gamma: dimension mismatch");
  generators_.assign(n * n, SparsePoly(n));
  const Rational one_minus_t = 1 - t_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& out = generators_[i * n + j];
      Rational constant;
      for (const auto& term : g.bracket(i, j)) {
        if (t_ != 0) out.add_term(Monomial::variable(n, term.index), t_ * term.coeff);
        constant += term.coeff * gamma_(term.index);
      }
      if (one_minus_t != 0) out.add_term(Monomial(n), one_minus_t * constant);
    }
}

SparsePoly poisson_bracket(const SparsePoly& f, const SparsePoly& g, const BracketPencil& pencil) {
  const std::size_t n = pencil.nvars();
  if (f.nvars() != n || g.nvars() != n) throw InvalidArgument("basis mismatch");
  SparsePoly out(n);
  if (f.is_zero() || g.is_zero()) return out;

  std::vector<SparsePoly> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (dg[j].is_zero()) continue;
      const SparsePoly& b = pencil.generator_bracket(i, j);
      if (b.is_zero()) continue;
      for (const auto& [ma, ca] : df[i].terms()) {
        for (const auto& [mb, cb] : dg[j].terms()) {
          const Monomial mab = ma * mb;
          const Rational cab = ca * cb;
          for (const auto& [mc, cc] : b.terms()) out.add_term(mab * mc, cab * cc);
        }
      }
    }
  }
  return out;
}

Rational gamma_of_bracket(const SparsePoly& x, const SparsePoly& y, const LieAlgebra& g,
                          const GammaFunctional& gamma) {
  if (x.degree() > 1 || y.degree() > 1)
    throw InvalidArgument("gamma_of_bracket: arguments must be linear");
  return gamma(g.lie_bracket(linear_part(x), linear_part(y)));
}

SparsePoly psi_t(const SparsePoly& f, const Rational& t, const GammaFunctional& gamma) {
  if (t == 0) throw InvalidArgument("psi_t: t must be nonzero");
  const std::size_t n = f.nvars();
  if (gamma.values().size() != n) throw InvalidArgument("basis mismatch");
  const Rational inv = 1 / t;
  const Rational shift_factor = (1 - t) / (t * t);
  std::vector<Rational> scale(n, inv), shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = shift_factor * gamma(i);
  return f.affine_substitute(scale, shift);
}

SparsePoly linear_poly(const LieVector& x) {
  SparsePoly p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p.add_term(Monomial::variable(x.size(), i), x[i]);
  return p;
}

LieVector linear_part(const SparsePoly& p) {
  LieVector v(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == 1)
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (m[i] == 1) v[i] = c;
  return v;
}

}  // namespace argshift
