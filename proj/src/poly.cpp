#include "argshift/poly.hpp"

#include <algorithm>
#include <functional>

#include "argshift/errors.hpp"

namespace argshift {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255) throw InvalidArgument("exponent too large");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw InvalidArgument("basis mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 255) throw InvalidArgument("exponent too large");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::without(std::size_t i) const {
  Monomial r(*this);
  --r.exps_[i];
  --r.degree_;
  return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned n) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Assign exponents to variables 0..nvars-1 with the largest first, which is
  // already the descending lexicographic order.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      rec(i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(0, n);
  return out;
}

std::size_t count_monomials(std::size_t nvars, unsigned n) {
  if (nvars == 0) return n == 0 ? 1 : 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n + nvars - 1, n);
  return c.get_ui();
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t i) {
  SparsePoly p(nvars);
  p.add_term(Monomial::variable(nvars, i), 1);
  return p;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Rational& c) {
  SparsePoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InvalidArgument("basis mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_same(const SparsePoly& o) const {
  if (o.nvars_ != nvars_) throw InvalidArgument("basis mismatch");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same(b);
  SparsePoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparsePoly SparsePoly::derivative(std::size_t i) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m[i] > 0) r.add_term(m.without(i), c * m[i]);
  return r;
}

SparsePoly SparsePoly::homogeneous_component(unsigned n) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InvalidArgument("evaluate: point has wrong length");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

namespace {

// Expands prod_i (scale_i x_i + shift_i s)^{e_i} for one monomial and hands
// each (monomial, coefficient, power of s) to `emit`.
template <typename Emit>
void expand_monomial(const Monomial& m, const Rational& c, const std::vector<Rational>& scale,
                     const std::vector<Rational>& shift, Emit&& emit) {
  const std::size_t n = m.nvars();
  Monomial cur(n);
  std::function<void(std::size_t, const Rational&, unsigned)> rec =
      [&](std::size_t i, const Rational& coeff, unsigned spow) {
        while (i < n && m[i] == 0) ++i;
        if (i == n) {
          emit(cur, coeff, spow);
          return;
        }
        const unsigned e = m[i];
        if (shift[i] == 0) {
          Rational f = coeff;
          for (unsigned t = 0; t < e; ++t) f *= scale[i];
          cur.set(i, e);
          rec(i + 1, f, spow);
          cur.set(i, 0);
          return;
        }
        for (unsigned k = 0; k <= e; ++k) {
          // C(e,k) scale^{e-k} shift^k
          Integer bin;
          mpz_bin_uiui(bin.get_mpz_t(), e, k);
          Rational f = coeff * Rational(bin);
          for (unsigned t = 0; t < e - k; ++t) f *= scale[i];
          for (unsigned t = 0; t < k; ++t) f *= shift[i];
          if (f == 0) continue;
          cur.set(i, e - k);
          rec(i + 1, f, spow + k);
        }
        cur.set(i, 0);
      };
  rec(0, c, 0);
}

}  // namespace

SparsePoly SparsePoly::affine_substitute(const std::vector<Rational>& scale,
                                         const std::vector<Rational>& shift) const {
  if (scale.size() != nvars_ || shift.size() != nvars_)
    throw InvalidArgument("affine_substitute: wrong length");
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_)
    expand_monomial(m, c, scale, shift,
                    [&](const Monomial& mm, const Rational& cc, unsigned) { r.add_term(mm, cc); });
  return r;
}

std::vector<SparsePoly> SparsePoly::shift_expand(const std::vector<Rational>& direction) const {
  if (direction.size() != nvars_) throw InvalidArgument("shift_expand: wrong length");
  const std::vector<Rational> ones(nvars_, Rational(1));
  std::vector<SparsePoly> out(std::max(degree(), 0) + 1, SparsePoly(nvars_));
  for (const auto& [m, c] : terms_)
    expand_monomial(m, c, ones, direction,
                    [&](const Monomial& mm, const Rational& cc, unsigned k) { out[k].add_term(mm, cc); });
  return out;
}

SparsePoly SparsePoly::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational f(l, g);
  f.canonicalize();
  if (terms_.rbegin()->second < 0) f = -f;
  return *this * f;
}

std::string SparsePoly::to_text(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw InvalidArgument("to_text: wrong number of names");
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second);
    const Monomial& m = it->first;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      s += " * " + names[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace argshift
