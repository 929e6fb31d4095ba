#pragma once

// Root systems of the simple Lie algebras and Chevalley structure constants.
//
// Simple roots are numbered as in Bourbaki. Positive roots are ordered by
// height, ties broken by comparing coefficient vectors lexicographically in
// descending order, so that positive_roots()[i] = alpha_{i+1} for i < rank.

#include "nilorb/exactla.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

class TypeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct TypeRank {
  char letter = 'A';
  int rank = 1;

  /// Accepts "E8", "e8", "G2", ...; throws TypeError when inadmissible.
  static TypeRank parse(std::string_view text);

  bool admissible() const;
  std::string name() const { return std::string(1, letter) + std::to_string(rank); }

  friend bool operator==(const TypeRank&, const TypeRank&) = default;
};

/// Coordinates over the simple roots.
using RootCoeffs = Eigen::VectorXi;

struct Root {
  RootCoeffs coeffs;

  int height() const { return coeffs.sum(); }
  bool positive() const { return height() > 0; }
  Root operator-() const { return Root{-coeffs}; }
  friend Root operator+(const Root& a, const Root& b) { return Root{a.coeffs + b.coeffs}; }
  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
};

/// Immutable after construction.
///
/// Roots are addressed by a signed-style index: 0..N-1 are the positive roots
/// in order, N..2N-1 their negatives (index i + N is -positive_roots()[i]).
class RootSystem {
public:
  explicit RootSystem(TypeRank t);

  const TypeRank& type_rank() const { return type_; }
  int rank() const { return type_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }

  /// cartan()(i, j) = <alpha_i^vee, alpha_j>.
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  /// Symmetric form on the simple roots, short roots of squared length 2.
  const Eigen::MatrixXi& form() const { return form_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  Root root(int index) const;

  std::optional<int> index_of(const RootCoeffs& c) const;
  int index_of(const Root& r) const; // throws TypeError if not a root

  /// Index of root(a) + root(b), -1 if not a root, -2 if zero.
  int sum_index(int a, int b) const { return sum_[static_cast<std::size_t>(a * num_roots() + b)]; }

  /// N(a, b) for root indices with root(a)+root(b) a root; 0 if the sum is
  /// not a root. The a+b=0 case must be handled by the caller.
  int structure_constant(int a, int b) const {
    return structconst_[static_cast<std::size_t>(a * num_roots() + b)];
  }

  int inner_product(const RootCoeffs& a, const RootCoeffs& b) const;
  int norm(int index) const { return norms_[static_cast<std::size_t>(index % num_positive())]; }

  /// <beta, alpha_i^vee> for each i.
  Eigen::VectorXi pairings(const RootCoeffs& beta) const { return cartan_ * beta; }

  /// Coroot of root(index) in the basis of simple coroots (integral).
  Eigen::VectorXi coroot(int index) const;

private:
  void build_roots();
  void build_structure_constants();
  int special_constant(int a, int b) const;
  int mixed_constant(int a, int b) const;

  TypeRank type_;
  Eigen::MatrixXi cartan_;
  Eigen::MatrixXi form_;
  std::vector<Root> positive_;
  std::vector<int> norms_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<int> sum_;
  std::vector<int> structconst_;
  // N for pairs of positive roots (a, b), a before b in the ordering.
  std::vector<int> special_;
};

RootSystem build_root_system(TypeRank t);

/// N(a, b) for roots a, b. Throws TypeError if either is not a root.
int structure_constant(const RootSystem& rs, const Root& a, const Root& b);

/// W-conjugate of h (coordinates over the simple coroots) with alpha_i(h) >= 0
/// for all i, reached by repeated simple reflections.
RatVector dominant_weyl_representative(const RootSystem& rs, const RatVector& h_coords);

/// (alpha_1(h), ..., alpha_l(h)) for h given over the simple coroots.
RatVector simple_root_values(const RootSystem& rs, const RatVector& h_coords);

} // namespace nilorb
