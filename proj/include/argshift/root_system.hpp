#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argshift/rational.hpp"

namespace argshift {

enum class Family { A, B, C, D, E, F, G };

/// A root written in the basis of simple roots. Positive roots have all
/// coordinates >= 0, negative roots all <= 0.
using Root = std::vector<int>;

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<int>>;

/// Element of the Cartan subalgebra in the basis h_{alpha_1}, ..., h_{alpha_l}.
class CartanVector {
 public:
  CartanVector() = default;
  explicit CartanVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static CartanVector zero(std::size_t rank) {
    return CartanVector(std::vector<Rational>(rank));
  }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const CartanVector&, const CartanVector&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Finite crystallographic root system, immutable after construction.
///
/// The invariant form is normalized so that long roots have squared length 2.
/// Positive roots are listed by height, ties broken by descending
/// lexicographic order of the coordinates (so alpha_1 precedes alpha_2).
class RootSystem {
 public:
  /// Throws UnsupportedType for an invalid (family, rank) pair.
  RootSystem(Family family, int rank);

  /// Parses labels such as "A2", "B2", "G2".
  static RootSystem from_label(std::string_view label);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  /// dim g = l + 2|positive roots|.
  std::size_t lie_dimension() const { return rank_ + 2 * positive_.size(); }

  /// Cartan matrix A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Gram matrix (alpha_i, alpha_j) of the simple roots.
  const RationalMatrix& gram() const { return gram_; }

  Rational inner(const Root& a, const Root& b) const;
  Rational squared_length(const Root& a) const { return inner(a, a); }
  int height(const Root& a) const;

  /// Index of a positive root, or nullopt.
  std::optional<std::size_t> positive_index(const Root& a) const;
  bool is_root(const Root& a) const;
  Root highest_root() const { return positive_.back(); }

  /// <alpha, x> for x in the Cartan subalgebra. Throws InvalidArgument if
  /// alpha is not a root or x has the wrong length.
  Rational pairing(const Root& alpha, const CartanVector& x) const;

  /// True iff no positive root annihilates mu.
  bool is_regular(const CartanVector& mu) const;
  /// First positive root with <alpha, mu> = 0, if any.
  std::optional<Root> vanishing_root(const CartanVector& mu) const;

 private:
  Family family_;
  int rank_;
  RationalMatrix gram_;
  IntMatrix cartan_;
  std::vector<Root> positive_;
};

/// Gram matrix of the simple roots for a finite type (long roots of squared
/// length 2). Throws UnsupportedType.
RationalMatrix simple_root_gram(Family family, int rank);

/// Closes a set of positive roots under simple-root strings: adds beta + alpha_i
/// whenever the alpha_i-string through beta continues upward. Starting from the
/// simple roots this yields all positive roots. Output is sorted in the
/// canonical root order.
std::vector<Root> close_positive_roots(const RationalMatrix& gram, std::vector<Root> roots);

/// Canonical order on roots: height, then descending lexicographic coordinates.
bool root_order_less(const Root& a, const Root& b);

Root negate(const Root& a);
Root add(const Root& a, const Root& b);
bool is_positive(const Root& a);

}  // namespace argshift
