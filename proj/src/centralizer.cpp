#include "argshift/centralizer.hpp"

#include <algorithm>

#include "argshift/errors.hpp"

namespace argshift {

SubspaceMatrix poisson_centralizer(const std::vector<SparsePoly>& qs, unsigned n,
                                   const BracketPencil& pencil) {
  const std::size_t dim = pencil.nvars();
  for (const auto& q : qs) {
    if (q.nvars() != dim) throw InvalidArgument("basis mismatch");
    if (!q.is_homogeneous()) throw InvalidArgument("poisson_centralizer: inhomogeneous element");
  }
  auto image = [&](const Monomial& m) {
    std::vector<SparsePoly> out;
    out.reserve(qs.size());
    const SparsePoly f = SparsePoly::monomial(m);
    for (const auto& q : qs) out.push_back(poisson_bracket(q, f, pencil));
    return out;
  };
  return rref(map_kernel(dim, n, monomials_of_degree(dim, n), image));
}

bool is_balanced(const Monomial& m, const LieAlgebra& g) {
  for (std::size_t k = 0; k < g.roots().num_positive(); ++k) {
    const std::size_t neg = k;
    const std::size_t pos = g.opposite(k);
    if (m[neg] != m[pos]) return false;
  }
  return true;
}

Rational monomial_eigenvalue(const Monomial& m, const SparsePoly& q, const LieAlgebra& g,
                             const GammaFunctional& gamma, const CartanVector& mu,
                             const CartanVector& h) {
  if (q != q_element(g, mu, h))
    throw InvalidArgument("monomial_eigenvalue: q is not the Q_mu element for the given h");
  const RootSystem& rs = g.roots();
  Rational lambda;
  for (const auto& alpha : rs.positive_roots()) {
    const std::size_t pos = g.root_index(alpha);
    const std::size_t neg = g.root_index(negate(alpha));
    const int diff = static_cast<int>(m[neg]) - static_cast<int>(m[pos]);
    if (diff == 0) continue;
    const Rational gamma_h = gamma(g.cartan_from_form(g.coroot_element(alpha)));
    lambda += gamma_h * rs.pairing(alpha, h) / rs.pairing(alpha, mu) * diff;
  }
  return lambda;
}

DegenerateReport degenerate_centralizer_check(const LieAlgebra& g, const CartanVector& mu,
                                              const CartanVector& h, unsigned n) {
  DegenerateReport r;
  r.degree = n;
  r.mu = mu;
  r.h = h;
  const SparsePoly q = q_element(g, mu, h);
  const auto gamma = GammaFunctional::standard(g);
  for (const auto& m : monomials_of_degree(g.dim(), n)) {
    if (is_balanced(m, g)) {
      ++r.balanced;
      continue;
    }
    ++r.unbalanced;
    if (monomial_eigenvalue(m, q, g, gamma, mu, h) == 0) r.offending.push_back(m);
  }
  r.centralizer_dim = poisson_centralizer({q}, n, BracketPencil::gamma_bracket(g)).num_rows();
  return r;
}

DegenerateReport degenerate_centralizer_sampled(const LieAlgebra& g, unsigned n, Rng& rng,
                                                unsigned retries) {
  DegenerateReport last;
  for (unsigned attempt = 0; attempt <= retries; ++attempt) {
    const CartanVector mu = sample_regular(g.roots(), rng);
    // h with every <alpha, h> nonzero is exactly a regular h.
    const CartanVector h = sample_regular(g.roots(), rng);
    last = degenerate_centralizer_check(g, mu, h, n);
    last.resamples = attempt;
    if (last.nondegenerate()) return last;
  }
  std::string msg = "degenerate (mu, h) after " + std::to_string(retries) +
                    " resamples; unbalanced monomials with zero eigenvalue:";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.dim(); ++i) names.push_back(g.name(i));
  for (const auto& m : last.offending) msg += " [" + SparsePoly::monomial(m).to_text(names) + "]";
  throw RetryExhausted(msg);
}

bool TheoremOneReport::passed() const {
  return !degrees.empty() && std::all_of(degrees.begin(), degrees.end(), [](const DegreeRecord& d) {
    return d.containment && d.equal;
  });
}

TheoremOneReport check_theorem1_at(const LieAlgebra& g, const InvariantGeneratorSet& invariants,
                                   const CartanVector& mu, unsigned n_max, bool full_slice) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  TheoremOneReport rep;
  rep.type = g.roots().label();
  rep.rank = g.roots().rank();
  rep.mu = mu;
  const QuadraticSlice slice = build_quadratic_slice(g, mu);
  const ShiftFamily fam = build_shift_family(g, mu, invariants);
  const auto pencil = BracketPencil::lie_poisson(g);

  std::vector<SparsePoly> extended = slice.q_mu;
  for (const auto* block : {&slice.cartan, &slice.cartan_squares})
    extended.insert(extended.end(), block->begin(), block->end());

  for (unsigned n = 1; n <= n_max; ++n) {
    DegreeRecord d;
    d.n = n;
    const SubspaceMatrix cent = poisson_centralizer(slice.q_mu, n, pencil);
    d.dim_centralizer = cent.num_rows();
    const SubspaceMatrix amu = a_mu_space(fam, n);
    d.dim_a_mu = rank(amu);
    d.containment = row_space_contains(cent, amu);
    d.equal = d.containment && d.dim_centralizer == d.dim_a_mu && d.dim_a_mu == amu.num_rows();
    if (full_slice) {
      const SubspaceMatrix cent_full = poisson_centralizer(extended, n, pencil);
      if (cent_full.rows() != cent.rows()) d.equal = false;
    }
    rep.degrees.push_back(d);
  }
  return rep;
}

TheoremOneReport verify_theorem1(const LieAlgebra& g, const InvariantGeneratorSet& invariants,
                                 unsigned n_max, std::uint64_t seed,
                                 const TheoremOneOptions& options) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  Rng rng(seed);
  TheoremOneReport rep;
  std::string failure;
  for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
    const CartanVector mu = sample_regular(g.roots(), rng);
    rep = check_theorem1_at(g, invariants, mu, n_max, options.full_slice);
    rep.seed = seed;
    rep.resamples = attempt;
    rep.last_failure = failure;
    if (rep.passed()) return rep;
    for (const auto& d : rep.degrees)
      if (!d.equal) {
        failure = "degree " + std::to_string(d.n) + ": centralizer " +
                  std::to_string(d.dim_centralizer) + ", subalgebra " + std::to_string(d.dim_a_mu) +
                  (d.containment ? "" : ", containment failed");
        break;
      }
  }
  rep.last_failure = failure;
  return rep;
}

TheoremOneReport verify_theorem1(const std::string& type, unsigned n_max, std::uint64_t seed,
                                 const TheoremOneOptions& options) {
  const LieAlgebra g(RootSystem::from_label(type));
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  const auto invariants = extract_generators(g, table.back());
  return verify_theorem1(g, invariants, n_max, seed, options);
}

}  // namespace argshift
