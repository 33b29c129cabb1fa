#include "argshift/lie_algebra.hpp"

#include <algorithm>
#include <functional>

#include "argshift/errors.hpp"
#include "argshift/linalg.hpp"

namespace argshift {

namespace {

// Structure constants N_{a,b} of an integral Chevalley basis, derived from the
// extraspecial pairs (all signs +1) through Carter's relations:
//   N_{a,b} = -N_{b,a},  N_{-a,-b} = -N_{a,b},
//   N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)      when a + b + c = 0,
//   and the four-root identity for special pairs.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs) : rs_(rs) {}

  Rational operator()(const Root& a, const Root& b) {
    const Root sum = add(a, b);
    if (!rs_.is_root(sum)) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational value = compute(a, b, sum);
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::map<std::pair<Root, Root>, Rational> take() { return std::move(memo_); }

  // Largest p with b - p a a root.
  int string_below(const Root& a, const Root& b) const {
    int p = 0;
    Root r = b;
    for (;;) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
      if (!rs_.is_root(r)) return p;
      ++p;
    }
  }

 private:
  Rational compute(const Root& a, const Root& b, const Root& sum) {
    const bool pa = is_positive(a);
    const bool pb = is_positive(b);
    if (pa && pb) return positive_pair(a, b, sum);
    if (!pa && !pb) return -(*this)(negate(a), negate(b));
    const Root c = negate(sum);
    const bool pc = is_positive(c);
    if (pc == pb) return rs_.squared_length(c) / rs_.squared_length(a) * (*this)(b, c);
    return rs_.squared_length(c) / rs_.squared_length(b) * (*this)(c, a);
  }

  Rational positive_pair(const Root& a, const Root& b, const Root& xi) {
    if (root_order_less(b, a)) return -(*this)(b, a);
    // Extraspecial pair (a1, b1) of xi: a1 is the first positive root in the
    // canonical order with xi - a1 positive.
    Root a1, b1;
    for (const auto& r : rs_.positive_roots()) {
      Root rest = xi;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= r[i];
      if (is_positive(rest) && rs_.positive_index(rest)) {
        a1 = r;
        b1 = rest;
        break;
      }
    }
    if (a1.empty()) throw InternalError("no extraspecial pair found");
    if (a == a1) return string_below(a, b) + 1;

    const Root na1 = negate(a1);
    const Root nb1 = negate(b1);
    Rational rhs;
    const Root s1 = add(b, na1);
    if (rs_.is_root(s1))
      rhs -= (*this)(b, na1) * (*this)(a, nb1) / rs_.squared_length(s1);
    const Root s2 = add(na1, a);
    if (rs_.is_root(s2))
      rhs -= (*this)(na1, a) * (*this)(b, nb1) / rs_.squared_length(s2);
    return rhs * rs_.squared_length(xi) / (*this)(na1, nb1);
  }

  const RootSystem& rs_;
  std::map<std::pair<Root, Root>, Rational> memo_;
};

std::string root_name(const Root& r) {
  const bool pos = is_positive(r);
  std::string s = pos ? "e[+" : "e[-";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pos ? r[i] : -r[i]);
  }
  return s + "]";
}

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs)
    : rs_(std::move(rs)), num_pos_(rs_.num_positive()), dim_(rs_.lie_dimension()) {
  const auto& pos = rs_.positive_roots();
  const std::size_t l = rank();
  weights_.reserve(dim_);
  for (const auto& a : pos) weights_.push_back(negate(a));
  for (std::size_t i = 0; i < l; ++i) weights_.push_back(Root(l, 0));
  for (const auto& a : pos) weights_.push_back(a);

  for (std::size_t i = 0; i < dim_; ++i) {
    std::string n = kind(i) == BasisKind::Cartan ? "h[" + std::to_string(i - num_pos_ + 1) + "]"
                                                 : root_name(weights_[i]);
    name_index_.emplace(n, i);
    names_.push_back(std::move(n));
  }

  ChevalleyConstants nconst(rs_);
  // Scale of e_alpha relative to the Chevalley vector x_alpha.
  auto scale = [&](const Root& r) -> Rational {
    return is_positive(r) ? Rational(1) : rs_.squared_length(r) / 2;
  };

  table_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      auto& out = table_[i * dim_ + j];
      const BasisKind ki = kind(i), kj = kind(j);
      if (ki == BasisKind::Cartan && kj == BasisKind::Cartan) continue;
      if (ki == BasisKind::Cartan) {
        Root ai(l, 0);
        ai[i - num_pos_] = 1;
        Rational c = rs_.inner(weights_[j], ai);
        if (c != 0) out.push_back({j, c});
        continue;
      }
      if (kj == BasisKind::Cartan) {
        Root aj(l, 0);
        aj[j - num_pos_] = 1;
        Rational c = -rs_.inner(weights_[i], aj);
        if (c != 0) out.push_back({i, c});
        continue;
      }
      const Root& a = weights_[i];
      const Root& b = weights_[j];
      const Root sum = add(a, b);
      if (std::all_of(sum.begin(), sum.end(), [](int k) { return k == 0; })) {
        // [e_a, e_{-a}] = h_a = sum_k a_k h_{alpha_k}
        for (std::size_t k = 0; k < l; ++k)
          if (a[k] != 0) out.push_back({num_pos_ + k, Rational(a[k])});
        continue;
      }
      if (!rs_.is_root(sum)) continue;
      const Rational n = nconst(a, b);
      const int p = nconst.string_below(a, b);
      if (abs(n) != p + 1)
        throw InternalError("Chevalley sign consistency failure for " + root_name(a) + ", " +
                            root_name(b));
      out.push_back({root_index(sum), scale(a) * scale(b) * n / scale(sum)});
    }
  }
  chevalley_ = nconst.take();

  form_.assign(dim_, std::vector<Rational>(dim_));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) form_[num_pos_ + i][num_pos_ + j] = rs_.gram()[i][j];
  for (std::size_t k = 0; k < num_pos_; ++k) {
    form_[k][num_pos_ + l + k] = 1;
    form_[num_pos_ + l + k][k] = 1;
  }
}

std::size_t LieAlgebra::root_index(const Root& alpha) const {
  if (is_positive(alpha)) {
    if (auto idx = rs_.positive_index(alpha)) return num_pos_ + rank() + *idx;
  } else if (auto idx = rs_.positive_index(negate(alpha))) {
    return *idx;
  }
  throw InvalidArgument("not a root");
}

BasisKind LieAlgebra::kind(std::size_t i) const {
  if (i < num_pos_) return BasisKind::NegativeRoot;
  if (i < num_pos_ + rank()) return BasisKind::Cartan;
  return BasisKind::PositiveRoot;
}

std::size_t LieAlgebra::opposite(std::size_t i) const {
  switch (kind(i)) {
    case BasisKind::NegativeRoot: return i + num_pos_ + rank();
    case BasisKind::PositiveRoot: return i - num_pos_ - rank();
    case BasisKind::Cartan: break;
  }
  throw InvalidArgument("Cartan element has no opposite root vector");
}

std::size_t LieAlgebra::positive_root_of(std::size_t i) const {
  switch (kind(i)) {
    case BasisKind::NegativeRoot: return i;
    case BasisKind::PositiveRoot: return i - num_pos_ - rank();
    case BasisKind::Cartan: break;
  }
  throw InvalidArgument("Cartan element has no root");
}

std::optional<std::size_t> LieAlgebra::index_of_name(const std::string& name) const {
  if (auto it = name_index_.find(name); it != name_index_.end()) return it->second;
  return std::nullopt;
}

LieVector LieAlgebra::basis_vector(std::size_t i) const {
  LieVector v(dim_);
  v[i] = 1;
  return v;
}

LieVector LieAlgebra::lie_bracket(const LieVector& x, const LieVector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw InvalidArgument("lie_bracket: dimension mismatch");
  LieVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (const auto& t : bracket(i, j)) out[t.index] += x[i] * y[j] * t.coeff;
    }
  }
  return out;
}

Rational LieAlgebra::form(const LieVector& x, const LieVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InvalidArgument("form: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (y[j] != 0 && form_[i][j] != 0) s += x[i] * form_[i][j] * y[j];
  }
  return s;
}

Rational LieAlgebra::chevalley_constant(const Root& a, const Root& b) const {
  if (auto it = chevalley_.find({a, b}); it != chevalley_.end()) return it->second;
  return 0;
}

LieVector LieAlgebra::cartan_from_form(const CartanVector& mu) const {
  if (mu.size() != rank()) throw InvalidArgument("Cartan vector has wrong length");
  LieVector v(dim_);
  for (std::size_t i = 0; i < rank(); ++i) v[num_pos_ + i] = mu[i];
  return v;
}

LieVector LieAlgebra::cartan_from_functional(const std::vector<Rational>& values) const {
  if (values.size() != rank()) throw InvalidArgument("functional has wrong length");
  return cartan_from_form(CartanVector(solve_dense(rs_.gram(), values)));
}

std::vector<Rational> LieAlgebra::dual_coordinates(const LieVector& x) const {
  if (x.size() != dim_) throw InvalidArgument("dual_coordinates: dimension mismatch");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (form_[i][j] != 0) out[j] += x[i] * form_[i][j];
  }
  return out;
}

CartanVector LieAlgebra::coroot_element(const Root& alpha) const {
  if (!rs_.is_root(alpha)) throw InvalidArgument("not a root");
  std::vector<Rational> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = alpha[i];
  return CartanVector(std::move(c));
}

}  // namespace argshift
