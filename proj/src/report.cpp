#include "argshift/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "argshift/argshift.hpp"
#include "argshift/centralizer.hpp"
#include "argshift/errors.hpp"
#include "argshift/invariants.hpp"
#include "argshift/pbw.hpp"
#include "argshift/poisson.hpp"
#include "argshift/random.hpp"

namespace argshift {

namespace {

constexpr unsigned kRandomPairs = 100;

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json rationals(const CartanVector& v) { return rationals(v.coords()); }

Json roots_json(const std::vector<Root>& roots) {
  Json a = Json::array();
  for (const auto& r : roots) a.push_back(r);
  return a;
}

LieAlgebra algebra_for(const std::string& type) { return LieAlgebra(RootSystem::from_label(type)); }

SparsePoly jacobiator(std::size_t i, std::size_t j, std::size_t k, const BracketPencil& p) {
  const std::size_t n = p.nvars();
  const auto x = SparsePoly::variable(n, i), y = SparsePoly::variable(n, j),
             z = SparsePoly::variable(n, k);
  return poisson_bracket(x, poisson_bracket(y, z, p), p) +
         poisson_bracket(y, poisson_bracket(z, x, p), p) +
         poisson_bracket(z, poisson_bracket(x, y, p), p);
}

std::vector<Json> pencil_suite(const LieAlgebra& g, const RunConfig& cfg) {
  std::vector<Json> out;
  const std::size_t n = g.dim();
  for (const Rational& t : {Rational(0), Rational(1, 2), Rational(1)}) {
    const BracketPencil pencil(g, t);
    std::size_t triples = 0, failures = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          ++triples;
          if (!jacobiator(i, j, k, pencil).is_zero()) ++failures;
        }
    out.push_back(Json{{"suite", "pencil"}, {"check", "jacobi"}, {"type", g.roots().label()},
                       {"t", to_string(t)}, {"triples", triples}, {"failures", failures},
                       {"ok", failures == 0}});
  }

  Rng rng(cfg.seed);
  const auto gamma = GammaFunctional::standard(g);
  const auto lie = BracketPencil::lie_poisson(g);
  for (const Rational& t : {Rational(1, 2), Rational(-2), Rational(3)}) {
    const BracketPencil pencil(g, t);
    std::size_t failures = 0;
    for (unsigned s = 0; s < kRandomPairs; ++s) {
      const SparsePoly f = random_poly(rng, n, 3, 3);
      const SparsePoly h = random_poly(rng, n, 3, 3);
      const SparsePoly lhs = poisson_bracket(psi_t(f, t, gamma), psi_t(h, t, gamma), pencil);
      if (lhs != psi_t(poisson_bracket(f, h, lie), t, gamma)) ++failures;
    }
    out.push_back(Json{{"suite", "pencil"}, {"check", "psi_t"}, {"type", g.roots().label()},
                       {"t", to_string(t)}, {"pairs", kRandomPairs}, {"failures", failures},
                       {"ok", failures == 0}});
  }

  const CartanVector mu = sample_regular(g.roots(), rng);
  const auto q_mu = build_Q_mu(g, mu);
  bool stable = true;
  for (const Rational& t : {Rational(1, 2), Rational(-2), Rational(3)})
    for (const auto& q : q_mu)
      if (psi_t(q, t, gamma) != q * (1 / (t * t))) stable = false;
  out.push_back(Json{{"suite", "pencil"}, {"check", "psi_t_Q_mu"}, {"type", g.roots().label()},
                     {"mu", rationals(mu)}, {"ok", stable}});
  return out;
}

std::vector<Json> degenerate_suite(const LieAlgebra& g, const RunConfig& cfg) {
  std::vector<Json> out;
  Rng rng(cfg.seed);
  const auto gamma = GammaFunctional::standard(g);
  const auto gpencil = BracketPencil::gamma_bracket(g);
  for (unsigned n = 1; n <= cfg.nmax; ++n) {
    const DegenerateReport r = degenerate_centralizer_sampled(g, n, rng, cfg.retries);
    const SparsePoly q = q_element(g, r.mu, r.h);
    bool identity = true;
    for (const auto& m : monomials_of_degree(g.dim(), n)) {
      const Rational lambda = monomial_eigenvalue(m, q, g, gamma, r.mu, r.h);
      if (poisson_bracket(q, SparsePoly::monomial(m), gpencil) != SparsePoly::monomial(m, lambda))
        identity = false;
    }
    out.push_back(Json{{"suite", "degenerate"}, {"type", g.roots().label()}, {"n", n},
                       {"mu", rationals(r.mu)}, {"h", rationals(r.h)}, {"balanced", r.balanced},
                       {"unbalanced", r.unbalanced}, {"dim_centralizer", r.centralizer_dim},
                       {"monom_identity", identity}, {"resamples", r.resamples},
                       {"ok", identity && r.dims_match()}});
  }
  return out;
}

std::vector<Json> pbw_suite(const LieAlgebra& g, const RunConfig& cfg) {
  std::vector<Json> out;
  Rng rng(cfg.seed);
  EnvelopingAlgebra u(g);
  const CartanVector mu = sample_regular(g.roots(), rng);
  const LiftCheck lift = check_quadratic_lift(u, build_quadratic_slice(g, mu));
  Json witnesses = Json::array();
  for (const auto& w : lift.witnesses)
    witnesses.push_back(Json{{"first", w.first}, {"second", w.second}, {"commutator", w.commutator}});
  out.push_back(Json{{"suite", "pbw"}, {"check", "quadratic_lift"}, {"type", g.roots().label()},
                     {"mu", rationals(mu)}, {"pairs_checked", lift.pairs_checked},
                     {"all_commute", lift.all_commute}, {"witnesses", witnesses},
                     {"ok", lift.all_commute}});

  std::size_t failures = 0;
  for (unsigned s = 0; s < kRandomPairs; ++s) {
    const SparsePoly p = random_poly(rng, g.dim(), 4, 3);
    if (u.symmetrize(p).gr() != p.homogeneous_component(std::max(p.degree(), 0))) ++failures;
  }
  out.push_back(Json{{"suite", "pbw"}, {"check", "gr_symmetrize"}, {"type", g.roots().label()},
                     {"samples", kRandomPairs}, {"failures", failures}, {"ok", failures == 0}});

  const auto lie = BracketPencil::lie_poisson(g);
  std::size_t comm_failures = 0;
  for (unsigned s = 0; s < kRandomPairs; ++s) {
    const SparsePoly a = random_poly(rng, g.dim(), 2, 2).homogeneous_component(2);
    const SparsePoly b = random_poly(rng, g.dim(), 2, 2).homogeneous_component(2);
    const SparsePoly bracket = poisson_bracket(a, b, lie);
    const UEAElement c = u.commutator(u.symmetrize(a), u.symmetrize(b));
    const SparsePoly top = c.as_poly().homogeneous_component(3);
    if (top != bracket || c.filtration_degree() > 3) ++comm_failures;
  }
  out.push_back(Json{{"suite", "pbw"}, {"check", "commutator_gr"}, {"type", g.roots().label()},
                     {"samples", kRandomPairs}, {"failures", comm_failures},
                     {"ok", comm_failures == 0}});
  return out;
}

std::vector<Json> invariants_suite(const LieAlgebra& g, const RunConfig& cfg) {
  std::vector<Json> out;
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  const unsigned top = std::max(cfg.nmax, table.back());
  for (unsigned n = 0; n <= top; ++n) {
    const std::size_t dim = ad_invariant_space(g, n).num_rows();
    const std::size_t expected = free_algebra_dimension(table, n);
    out.push_back(Json{{"suite", "invariants"}, {"type", g.roots().label()}, {"n", n},
                       {"dim", dim}, {"expected", expected}, {"ok", dim == expected}});
  }
  const auto gens = extract_generators(g, table.back());
  const auto lie = BracketPencil::lie_poisson(g);
  bool central = true;
  for (const auto& phi : gens.generators)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!poisson_bracket(SparsePoly::variable(g.dim(), i), phi, lie).is_zero()) central = false;
  out.push_back(Json{{"suite", "invariants"}, {"check", "generators"}, {"type", g.roots().label()},
                     {"degrees", gens.degrees}, {"expected", table}, {"central", central},
                     {"ok", central && gens.degrees == table}});
  return out;
}

std::vector<Json> theorem1_suite(const LieAlgebra& g, const RunConfig& cfg) {
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  const auto invariants = extract_generators(g, table.back());
  TheoremOneOptions opts;
  opts.retries = cfg.retries;
  const TheoremOneReport rep = verify_theorem1(g, invariants, cfg.nmax, cfg.seed, opts);
  Json degrees = Json::array();
  for (const auto& d : rep.degrees)
    degrees.push_back(Json{{"n", d.n}, {"dim_centralizer", d.dim_centralizer},
                           {"dim_a_mu", d.dim_a_mu}, {"containment", d.containment},
                           {"equal", d.equal}});
  Json rec{{"suite", "theorem1"}, {"type", rep.type}, {"mu", rationals(rep.mu)},
           {"seed", rep.seed}, {"degrees", degrees}, {"resamples", rep.resamples}};
  if (!rep.last_failure.empty()) rec["last_failure"] = rep.last_failure;
  rec["ok"] = rep.passed();
  return {rec};
}

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::vector<Suite> parse_suites(const std::string& name) {
  if (name == "theorem1") return {Suite::Theorem1};
  if (name == "pencil") return {Suite::Pencil};
  if (name == "degenerate") return {Suite::Degenerate};
  if (name == "pbw") return {Suite::Pbw};
  if (name == "invariants") return {Suite::Invariants};
  if (name == "all")
    return {Suite::Invariants, Suite::Pencil, Suite::Degenerate, Suite::Theorem1, Suite::Pbw};
  throw InvalidArgument("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Theorem1: return "theorem1";
    case Suite::Pencil: return "pencil";
    case Suite::Degenerate: return "degenerate";
    case Suite::Pbw: return "pbw";
    case Suite::Invariants: return "invariants";
  }
  return "?";
}

std::string RunResult::render(Format format) const {
  std::ostringstream os;
  for (const auto& r : records) {
    if (format == Format::Json) {
      os << r.dump() << '\n';
      continue;
    }
    os << (r.value("ok", false) ? "PASS" : "FAIL");
    for (const auto& [k, v] : r.items())
      if (k != "ok") os << ' ' << k << '=' << render_value(v);
    os << '\n';
  }
  return os.str();
}

RunResult run_verify(const RunConfig& cfg) {
  if (cfg.nmax < 1) throw InvalidArgument("--nmax must be at least 1");
  if (cfg.retries < 1) throw InvalidArgument("--retries must be at least 1");
  const LieAlgebra g = algebra_for(cfg.type);
  RunResult result;
  for (Suite s : cfg.suites) {
    std::vector<Json> recs;
    switch (s) {
      case Suite::Theorem1: recs = theorem1_suite(g, cfg); break;
      case Suite::Pencil: recs = pencil_suite(g, cfg); break;
      case Suite::Degenerate: recs = degenerate_suite(g, cfg); break;
      case Suite::Pbw: recs = pbw_suite(g, cfg); break;
      case Suite::Invariants: recs = invariants_suite(g, cfg); break;
    }
    for (auto& r : recs) {
      result.passed = result.passed && r.value("ok", false);
      result.records.push_back(std::move(r));
    }
  }
  return result;
}

Json describe(const std::string& type) {
  const LieAlgebra g = algebra_for(type);
  const RootSystem& rs = g.roots();
  Json gram = Json::array();
  for (const auto& row : rs.gram()) gram.push_back(rationals(row));
  return Json{{"type", rs.label()},
              {"rank", rs.rank()},
              {"dim", g.dim()},
              {"num_positive_roots", rs.num_positive()},
              {"positive_roots", roots_json(rs.positive_roots())},
              {"cartan_matrix", rs.cartan_matrix()},
              {"gram", gram},
              {"basis", basis_names(g)},
              {"invariant_degrees", invariant_degrees(rs.family(), rs.rank())}};
}

std::string describe_text(const std::string& type) {
  const LieAlgebra g = algebra_for(type);
  const RootSystem& rs = g.roots();
  std::ostringstream os;
  os << "type " << rs.label() << ", rank " << rs.rank() << ", dim " << g.dim() << ", "
     << rs.num_positive() << " positive roots\n";
  os << "cartan matrix:";
  for (const auto& row : rs.cartan_matrix()) {
    os << " [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]";
  }
  os << "\nbasis:";
  for (const auto& n : basis_names(g)) os << ' ' << n;
  os << "\nnonzero brackets:\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto& b = g.bracket(i, j);
      if (b.empty()) continue;
      SparsePoly p(g.dim());
      for (const auto& t : b) p.add_term(Monomial::variable(g.dim(), t.index), t.coeff);
      os << "  [" << g.name(i) << ", " << g.name(j) << "] = " << p.to_text(basis_names(g)) << '\n';
    }
  return os.str();
}

Json invariants_report(const std::string& type, unsigned max_degree) {
  const LieAlgebra g = algebra_for(type);
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  const unsigned top = std::max(max_degree, table.back());
  const auto gens = extract_generators(g, top);
  Json dims = Json::array();
  for (unsigned n = 0; n <= top; ++n) dims.push_back(ad_invariant_space(g, n).num_rows());
  Json polys = Json::array();
  for (const auto& p : gens.generators) polys.push_back(poly_to_json(p, g));
  return Json{{"type", g.roots().label()}, {"degrees", gens.degrees}, {"dims_by_degree", dims},
              {"generators", polys}};
}

Json shift_report(const std::string& type, unsigned nmax, std::uint64_t seed,
                  const std::optional<std::vector<Rational>>& mu_in) {
  const LieAlgebra g = algebra_for(type);
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  const auto invariants = extract_generators(g, table.back());
  CartanVector mu;
  if (mu_in) {
    mu = CartanVector(*mu_in);
    if (mu.size() != g.rank()) throw InvalidArgument("--mu must have " + std::to_string(g.rank()) + " entries");
  } else {
    Rng rng(seed);
    mu = sample_regular(g.roots(), rng);
  }
  const ShiftFamily fam = build_shift_family(g, mu, invariants);
  Json dims = Json::array();
  for (unsigned n = 1; n <= nmax; ++n) dims.push_back(a_mu_graded_dim(fam, n));
  Json polys = Json::array();
  for (const auto& gen : fam.generators) polys.push_back(poly_to_json(gen.poly, g));
  return Json{{"type", g.roots().label()},
              {"mu", rationals(mu)},
              {"degrees", fam.degrees()},
              {"count", fam.generators.size()},
              {"commutative", true},
              {"graded_dims", dims},
              {"generators", polys}};
}

std::vector<std::string> basis_names(const LieAlgebra& g) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.dim(); ++i) names.push_back(g.name(i));
  return names;
}

Json poly_to_json(const SparsePoly& p, const LieAlgebra& g) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (it->first[i]) mono[g.name(i)] = it->first[i];
    terms.push_back(Json{{"coeff", to_string(it->second)}, {"monomial", mono}});
  }
  return terms;
}

SparsePoly poly_from_json(const Json& j, const LieAlgebra& g) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  SparsePoly p(g.dim());
  for (const auto& term : j) {
    Monomial m(g.dim());
    for (const auto& [name, e] : term.at("monomial").items()) {
      auto idx = g.index_of_name(name);
      if (!idx) throw InvalidArgument("unknown basis element '" + name + "'");
      m.set(*idx, m[*idx] + e.get<unsigned>());
    }
    p.add_term(m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return p;
}

void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("io error", "cannot open " + tmp);
    f << contents;
    if (!f.flush()) throw Error("io error", "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error("io error", "cannot rename " + tmp + " to " + path);
  }
}

Json error_object(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace argshift
