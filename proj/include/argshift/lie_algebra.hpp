#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argshift/rational.hpp"
#include "argshift/root_system.hpp"

namespace argshift {

/// Coefficient vector of an element of g in the ordered Lie basis.
using LieVector = std::vector<Rational>;

/// One nonzero entry c_{ij}^k of a structure-constant row.
struct BasisTerm {
  std::size_t index;
  Rational coeff;
};

enum class BasisKind { NegativeRoot, Cartan, PositiveRoot };

/// Semisimple Lie algebra on the basis
///   e_{-alpha} (alpha positive, root order), h_{alpha_1..alpha_l}, e_{alpha} (root order)
/// normalized so that (e_alpha, e_{-alpha}) = 1 and [e_alpha, e_{-alpha}] = h_alpha,
/// where h_alpha is the element of h representing alpha under the invariant form.
///
/// Signs come from an integral Chevalley basis with every extraspecial pair
/// given N = +(p + 1); negative root vectors are then rescaled by (alpha, alpha)/2.
class LieAlgebra {
 public:
  explicit LieAlgebra(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return static_cast<std::size_t>(rs_.rank()); }

  /// Basis index of e_alpha for any root alpha (positive or negative).
  std::size_t root_index(const Root& alpha) const;
  /// Basis index of h_{alpha_i}, i in [0, rank).
  std::size_t cartan_index(std::size_t i) const { return num_pos_ + i; }
  BasisKind kind(std::size_t i) const;
  /// Weight of basis element i (zero vector for Cartan elements).
  const Root& weight(std::size_t i) const { return weights_[i]; }
  /// For root vectors, the index of the opposite root vector.
  std::size_t opposite(std::size_t i) const;
  /// Positive root index of the root underlying basis element i.
  std::size_t positive_root_of(std::size_t i) const;

  /// Basis element names: "e[+1,0]", "e[-1,1]", "h[1]" (1-based Cartan index).
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of_name(const std::string& name) const;

  /// Nonzero entries of [x_i, x_j].
  const std::vector<BasisTerm>& bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  /// Invariant form on basis elements.
  const Rational& form(std::size_t i, std::size_t j) const { return form_[i][j]; }

  LieVector basis_vector(std::size_t i) const;
  /// Bilinear extension of the structure constants. Throws InvalidArgument on
  /// dimension mismatch.
  LieVector lie_bracket(const LieVector& x, const LieVector& y) const;
  Rational form(const LieVector& x, const LieVector& y) const;

  /// Integral Chevalley structure constant N_{alpha,beta} ([x_a, x_b] = N x_{a+b}).
  Rational chevalley_constant(const Root& a, const Root& b) const;

  /// Embeds mu (coordinates in h_{alpha_i}) into g.
  LieVector cartan_from_form(const CartanVector& mu) const;
  /// Element h of the Cartan subalgebra with (h, h_{alpha_j}) = values[j]:
  /// the image of a functional on h under the identification g = g*.
  LieVector cartan_from_functional(const std::vector<Rational>& values) const;
  /// Values (x, b_i) of the invariant form against every basis element b_i:
  /// the coordinates of x viewed as a point of g*, i.e. how each variable of
  /// S(g) = C[g*] moves when the argument is shifted by x.
  std::vector<Rational> dual_coordinates(const LieVector& x) const;
  /// Element h_alpha = [e_alpha, e_{-alpha}] as a Cartan vector.
  CartanVector coroot_element(const Root& alpha) const;

 private:
  RootSystem rs_;
  std::size_t num_pos_;
  std::size_t dim_;
  std::vector<Root> weights_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> name_index_;
  std::vector<std::vector<BasisTerm>> table_;
  RationalMatrix form_;
  std::map<std::pair<Root, Root>, Rational> chevalley_;
};

}  // namespace argshift
