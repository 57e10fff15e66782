#ifndef HOMCART_LIE_ALGEBRA_HPP
#define HOMCART_LIE_ALGEBRA_HPP

#include <array>
#include <string>
#include <vector>

#include "homcart/subspace.hpp"

namespace homcart {

/// One sparse structure constant: [e_i, e_j] += c * e_k, stored with i < j;
/// the antisymmetric completion is implied.
struct StructureEntry {
  int i, j, k;
  double c;
};

struct JacobiReport {
  double max_violation;
  bool ok;
};

/// Finite-dimensional real Lie algebra given by structure constants over a
/// fixed basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;  // unset placeholder, dim 0
  LieAlgebra(int dim, std::vector<StructureEntry> entries,
             std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<StructureEntry>& structure() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vector bracket(const Vector& x, const Vector& y) const;

  /// ad(e_i) as a matrix: column j holds [e_i, e_j].
  const Matrix& ad_basis(int i) const;

  /// ad(x) = sum_i x_i ad(e_i).
  Matrix ad(const Vector& x) const;

  /// Max over distinct basis triples of || [e_i,[e_j,e_k]] + cyclic ||_inf.
  JacobiReport check_jacobi(double tol = kDefaultTol) const;

 private:
  int dim_ = 0;
  std::vector<StructureEntry> entries_;
  std::vector<std::string> labels_;
  std::vector<Matrix> ad_;
};

/// Extracts a structure table from a faithful matrix realization: brackets of
/// basis matrices are commutators, decomposed back onto the basis by least
/// squares. Throws construction_error when the matrices do not close.
LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis,
                                 std::vector<std::string> labels = {},
                                 double drop_tol = 1e-12);

/// Smallest bracket-closed subspace containing S.
Subspace bracket_closure(const LieAlgebra& L, const Subspace& S, double tol = kDefaultTol);

/// Signature (n_plus, n_minus, n_zero) of the Killing form of the subalgebra
/// spanned by S, computed intrinsically from the restricted structure
/// constants. Throws precondition_error when S is not bracket-closed.
std::array<int, 3> killing_signature(const LieAlgebra& L, const Subspace& S,
                                     double tol = kDefaultTol);
std::array<int, 3> killing_signature(const LieAlgebra& L, double tol = kDefaultTol);

}  // namespace homcart

#endif
