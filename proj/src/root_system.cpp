#include "argshift/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

RationalMatrix chain_gram(int rank) {
  RationalMatrix g(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i) {
    g[i][i] = 2;
    if (i + 1 < rank) g[i][i + 1] = g[i + 1][i] = -1;
  }
  return g;
}

void link(RationalMatrix& g, int i, int j, const Rational& v) { g[i][j] = g[j][i] = v; }

char family_char(Family f) {
  static constexpr char chars[] = "ABCDEFG";
  return chars[static_cast<int>(f)];
}

}  // namespace

RationalMatrix simple_root_gram(Family family, int rank) {
  auto unsupported = [&] {
    return UnsupportedType("unsupported type " + std::string(1, family_char(family)) +
                           std::to_string(rank));
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw unsupported();
      return chain_gram(rank);
    case Family::B: {
      if (rank < 2) throw unsupported();
      auto g = chain_gram(rank);
      g[rank - 1][rank - 1] = 1;
      return g;
    }
    case Family::C: {
      if (rank < 2) throw unsupported();
      RationalMatrix g(rank, std::vector<Rational>(rank));
      for (int i = 0; i + 1 < rank; ++i) {
        g[i][i] = 1;
        link(g, i, i + 1, Rational(-1, 2));
      }
      g[rank - 1][rank - 1] = 2;
      link(g, rank - 2, rank - 1, -1);
      return g;
    }
    case Family::D: {
      if (rank < 4) throw unsupported();
      auto g = chain_gram(rank);
      link(g, rank - 2, rank - 1, 0);
      link(g, rank - 3, rank - 1, -1);
      return g;
    }
    case Family::E: {
      if (rank < 6 || rank > 8) throw unsupported();
      // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
      RationalMatrix g(rank, std::vector<Rational>(rank));
      for (int i = 0; i < rank; ++i) g[i][i] = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (int i = 2; i + 1 < rank; ++i) link(g, i, i + 1, -1);
      return g;
    }
    case Family::F: {
      if (rank != 4) throw unsupported();
      auto g = chain_gram(4);
      g[2][2] = g[3][3] = 1;
      link(g, 2, 3, Rational(-1, 2));
      return g;
    }
    case Family::G: {
      if (rank != 2) throw unsupported();
      RationalMatrix g(2, std::vector<Rational>(2));
      g[0][0] = Rational(2, 3);
      g[1][1] = 2;
      link(g, 0, 1, -1);
      return g;
    }
  }
  throw unsupported();
}

bool root_order_less(const Root& a, const Root& b) {
  const int ha = std::accumulate(a.begin(), a.end(), 0);
  const int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Root negate(const Root& a) {
  Root r(a);
  for (auto& k : r) k = -k;
  return r;
}

Root add(const Root& a, const Root& b) {
  Root r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool is_positive(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int k) { return k >= 0; }) &&
         std::any_of(a.begin(), a.end(), [](int k) { return k > 0; });
}

std::vector<Root> close_positive_roots(const RationalMatrix& gram, std::vector<Root> roots) {
  const int rank = static_cast<int>(gram.size());
  std::set<Root> known(roots.begin(), roots.end());
  auto inner_simple = [&](const Root& beta, int i) {
    Rational s;
    for (int j = 0; j < rank; ++j) s += beta[j] * gram[j][i];
    return s;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> current(known.begin(), known.end());
    for (const auto& beta : current) {
      for (int i = 0; i < rank; ++i) {
        // p = length of the alpha_i-string below beta.
        int p = 0;
        Root down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const Rational coroot_pairing = 2 * inner_simple(beta, i) / gram[i][i];
        if (!coroot_pairing.get_den().fits_sint_p() || coroot_pairing.get_den() != 1)
          throw InternalError("non-integral Cartan pairing during root closure");
        const int q = p - static_cast<int>(coroot_pairing.get_num().get_si());
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          if (known.insert(up).second) grew = true;
        }
      }
    }
  }
  std::vector<Root> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), root_order_less);
  return out;
}

RootSystem::RootSystem(Family family, int rank)
    : family_(family), rank_(rank), gram_(simple_root_gram(family, rank)) {
  cartan_.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = 2 * gram_[i][j] / gram_[j][j];
      cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }
  std::vector<Root> simple;
  for (int i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    simple.push_back(r);
  }
  positive_ = close_positive_roots(gram_, simple);
}

RootSystem RootSystem::from_label(std::string_view label) {
  auto bad = [&] { return UnsupportedType("unsupported type '" + std::string(label) + "'"); };
  if (label.size() < 2) throw bad();
  Family f;
  switch (label[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw bad();
  }
  int rank = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw bad();
    rank = rank * 10 + (c - '0');
    if (rank > 99) throw bad();
  }
  return RootSystem(f, rank);
}

std::string RootSystem::label() const { return family_char(family_) + std::to_string(rank_); }

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (a[i] != 0 && b[j] != 0) s += a[i] * b[j] * gram_[i][j];
  return s;
}

int RootSystem::height(const Root& a) const { return std::accumulate(a.begin(), a.end(), 0); }

std::optional<std::size_t> RootSystem::positive_index(const Root& a) const {
  if (static_cast<int>(a.size()) != rank_) return std::nullopt;
  auto it = std::lower_bound(positive_.begin(), positive_.end(), a, root_order_less);
  if (it != positive_.end() && *it == a) return static_cast<std::size_t>(it - positive_.begin());
  return std::nullopt;
}

bool RootSystem::is_root(const Root& a) const {
  if (static_cast<int>(a.size()) != rank_) return false;
  return positive_index(a).has_value() || positive_index(negate(a)).has_value();
}

Rational RootSystem::pairing(const Root& alpha, const CartanVector& x) const {
  if (!is_root(alpha)) throw InvalidArgument("pairing: argument is not a root");
  if (static_cast<int>(x.size()) != rank_)
    throw InvalidArgument("pairing: Cartan vector has wrong length");
  Rational s;
  for (int i = 0; i < rank_; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += alpha[i] * gram_[i][j] * x[j];
  }
  return s;
}

std::optional<Root> RootSystem::vanishing_root(const CartanVector& mu) const {
  if (static_cast<int>(mu.size()) != rank_)
    throw InvalidArgument("Cartan vector has wrong length");
  for (const auto& a : positive_)
    if (pairing(a, mu) == 0) return a;
  return std::nullopt;
}

bool RootSystem::is_regular(const CartanVector& mu) const {
  if (static_cast<int>(mu.size()) != rank_) return false;
  return !vanishing_root(mu).has_value();
}

}  // namespace argshift
