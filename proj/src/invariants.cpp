#include "argshift/invariants.hpp"

#include <algorithm>
#include <functional>

#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"

namespace argshift {

std::vector<unsigned> invariant_degrees(Family family, int rank) {
  (void)simple_root_gram(family, rank);  // validates the type
  std::vector<unsigned> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case Family::E:
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t free_algebra_dimension(const std::vector<unsigned>& degrees, unsigned n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (unsigned d : degrees)
    for (unsigned k = d; k <= n; ++k) c[k] += c[k - d];
  return c[n];
}

std::vector<std::vector<std::size_t>> degree_multisets(const std::vector<unsigned>& degrees,
                                                       unsigned n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < degrees.size(); ++i) {
      if (degrees[i] == 0 || degrees[i] > left) continue;
      cur.push_back(i);
      rec(i, left - degrees[i]);
      cur.pop_back();
    }
  };
  rec(0, n);
  return out;
}

SubspaceMatrix ad_invariant_space(const LieAlgebra& g, unsigned n) {
  const std::size_t dim = g.dim();
  std::vector<Monomial> domain;
  for (auto& m : monomials_of_degree(dim, n)) {
    Root w(g.rank(), 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < g.rank() && m[i]; ++k)
        w[k] += static_cast<int>(m[i]) * g.weight(i)[k];
    if (std::all_of(w.begin(), w.end(), [](int k) { return k == 0; })) domain.push_back(std::move(m));
  }

  std::vector<std::size_t> generators;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Root a(g.rank(), 0);
    a[i] = 1;
    generators.push_back(g.root_index(a));
    generators.push_back(g.root_index(negate(a)));
  }
  const auto pencil = BracketPencil::lie_poisson(g);
  auto image = [&](const Monomial& m) {
    std::vector<SparsePoly> out;
    const SparsePoly f = SparsePoly::monomial(m);
    for (std::size_t x : generators)
      out.push_back(poisson_bracket(SparsePoly::variable(dim, x), f, pencil));
    return out;
  };
  return rref(map_kernel(dim, n, std::move(domain), image));
}

InvariantGeneratorSet extract_generators(const LieAlgebra& g, unsigned max_degree) {
  const auto table = invariant_degrees(g.roots().family(), g.roots().rank());
  if (max_degree < table.back())
    throw InvalidArgument("extract_generators: max_degree " + std::to_string(max_degree) +
                          " is below the largest basic degree " + std::to_string(table.back()));
  InvariantGeneratorSet out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const SubspaceMatrix inv = ad_invariant_space(g, d);
    Echelon span(inv.cols());
    for (const auto& ms : degree_multisets(out.degrees, d)) {
      SparsePoly prod = SparsePoly::constant(g.dim(), 1);
      for (std::size_t k : ms) prod = prod * out.generators[k];
      span.insert(inv.row_of(prod));
    }
    const std::size_t expected_new = static_cast<std::size_t>(std::count(table.begin(), table.end(), d));
    if (inv.num_rows() < span.rank() || inv.num_rows() - span.rank() != expected_new)
      throw InternalError("invariant bookkeeping mismatch in degree " + std::to_string(d) + ": " +
                          std::to_string(inv.num_rows()) + " invariants, " +
                          std::to_string(span.rank()) + " from products, expected " +
                          std::to_string(expected_new) + " new");
    for (const auto& row : inv.rows()) {
      if (span.contains(row)) continue;
      span.insert(row);
      out.generators.push_back(inv.poly_of(row).primitive());
      out.degrees.push_back(d);
    }
  }
  return out;
}

}  // namespace argshift
