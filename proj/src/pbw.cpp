#include "argshift/pbw.hpp"

#include <algorithm>

#include "argshift/errors.hpp"

namespace argshift {

UEAElement UEAElement::one(std::size_t nvars) {
  UEAElement e(nvars);
  e.add_term(Monomial(nvars), 1);
  return e;
}

SparsePoly UEAElement::gr() const {
  const int d = filtration_degree();
  if (d < 0) return SparsePoly(nvars());
  return coeffs_.homogeneous_component(static_cast<unsigned>(d));
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  coeffs_ += o.coeffs_;
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  coeffs_ -= o.coeffs_;
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
  coeffs_ *= c;
  return *this;
}

UEAElement EnvelopingAlgebra::generator(std::size_t i) const {
  UEAElement e(nvars());
  e.add_term(Monomial::variable(nvars(), i), 1);
  return e;
}

const UEAElement& EnvelopingAlgebra::left_multiply(std::size_t i, const Monomial& m) {
  auto key = std::make_pair(i, m);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const std::size_t n = nvars();
  std::size_t first = 0;
  while (first < n && m[first] == 0) ++first;

  UEAElement result(n);
  if (first == n || i <= first) {
    Monomial mm = m;
    mm.set(i, m[i] + 1);
    result.add_term(mm, 1);
  } else {
    // x_i x_j rest = x_j (x_i rest) + [x_i, x_j] rest, with j < i the first letter.
    const Monomial rest = m.without(first);
    UEAElement swapped = left_multiply(i, rest);
    result += left_multiply(first, swapped);
    for (const auto& term : g_->bracket(i, first)) {
      UEAElement t = left_multiply(term.index, rest);
      t *= term.coeff;
      result += t;
    }
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

UEAElement EnvelopingAlgebra::left_multiply(std::size_t i, const UEAElement& a) {
  UEAElement out(nvars());
  for (const auto& [m, c] : a.terms()) {
    UEAElement t = left_multiply(i, m);
    t *= c;
    out += t;
  }
  return out;
}

UEAElement EnvelopingAlgebra::straighten(const std::vector<std::size_t>& word) {
  UEAElement acc = UEAElement::one(nvars());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= nvars()) throw InvalidArgument("straighten: letter out of range");
    acc = left_multiply(*it, acc);
  }
  return acc;
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& a, const UEAElement& b) {
  if (a.nvars() != nvars() || b.nvars() != nvars()) throw InvalidArgument("basis mismatch");
  UEAElement out(nvars());
  for (const auto& [m, c] : a.terms()) {
    // The ordered monomial m is the word of its letters in increasing order.
    UEAElement acc = b;
    for (std::size_t i = nvars(); i-- > 0;)
      for (unsigned k = 0; k < m[i]; ++k) acc = left_multiply(i, acc);
    acc *= c;
    out += acc;
  }
  return out;
}

UEAElement EnvelopingAlgebra::commutator(const UEAElement& a, const UEAElement& b) {
  return multiply(a, b) - multiply(b, a);
}

UEAElement EnvelopingAlgebra::symmetrize(const SparsePoly& p) {
  if (p.nvars() != nvars()) throw InvalidArgument("basis mismatch");
  UEAElement out(nvars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::size_t> word;
    Integer multiplicity = 1;
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) word.push_back(i);
      multiplicity *= factorial(m[i]);
    }
    // Each distinct ordering stands for prod(k_i!) of the k! permutations.
    const Rational weight = c * Rational(multiplicity) / Rational(factorial(m.degree()));
    do {
      UEAElement t = straighten(word);
      t *= weight;
      out += t;
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return out;
}

LiftCheck check_quadratic_lift(EnvelopingAlgebra& u, const QuadraticSlice& slice) {
  const auto basis = slice.basis();
  std::vector<UEAElement> lifted;
  lifted.reserve(basis.size());
  for (const auto& p : basis) lifted.push_back(u.symmetrize(p));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < u.nvars(); ++i) names.push_back(u.algebra().name(i));

  LiftCheck out;
  for (std::size_t a = 0; a < lifted.size(); ++a)
    for (std::size_t b = a + 1; b < lifted.size(); ++b) {
      ++out.pairs_checked;
      const UEAElement c = u.commutator(lifted[a], lifted[b]);
      if (!c.is_zero()) {
        out.all_commute = false;
        out.witnesses.push_back({a, b, c.to_text(names)});
      }
    }
  return out;
}

}  // namespace argshift
