#ifndef HOMCART_CONNECTION_HPP
#define HOMCART_CONNECTION_HPP

#include <array>
#include <vector>

#include "homcart/lie_algebra.hpp"
#include "homcart/subspace.hpp"

namespace homcart {

enum class ConnectionKind { Principal, Cartan };

/// Algebra-level data of an invariant principal or Cartan connection on a
/// homogeneous bundle: the pair of algebras (h, g), the isotropy subalgebra k
/// inside h, the structure subalgebra p inside g (all of g in the principal
/// case), and the connection map alpha: h -> g, one column per h-basis vector.
/// psi' is alpha restricted to k, so only its p-membership is a condition.
struct ConnectionData {
  ConnectionKind kind = ConnectionKind::Principal;
  LieAlgebra h;
  LieAlgebra g;
  Subspace k_basis;  // subspace of h
  Subspace p_basis;  // subspace of g
  Matrix alpha;      // dim g x dim h
  bool simply_connected = false;

  Vector alpha_of(const Vector& x) const { return alpha * x; }
};

struct ValidationReport {
  double c1_residual = 0.0;  // max p-membership residual of alpha over the k-basis
  double c2_residual = 0.0;  // max || alpha([Z,X]) - [alpha Z, alpha X] ||_inf
  bool c1_ok = false;
  bool c2_ok = false;
  bool c3_checked = false;  // Cartan kind only
  int c3_rank = 0;
  int c3_expected = 0;
  bool c3_ok = true;
  bool ok = false;
  double tol = kDefaultTol;
};

ValidationReport validate(const ConnectionData& c, double tol = kDefaultTol);

/// Curvature 2-form on a complement of k in h: values rho(n_i, n_j) in g for
/// i < j; antisymmetry by storage convention.
struct CurvatureForm {
  Matrix complement;  // rows: h-vectors spanning a complement of k
  std::vector<Vector> values;

  int size() const { return static_cast<int>(complement.rows()); }
  static int pair_index(int i, int j, int n);
  Vector value(int i, int j) const;  // antisymmetric accessor
  double max_abs() const;
};

/// rho(n_i, n_j) = [alpha n_i, alpha n_j]_g - alpha([n_i, n_j]_h) on the
/// deterministic complement (standard basis vectors of h at the non-pivot
/// columns of k_basis). Throws precondition_error when validation fails.
CurvatureForm curvature(const ConnectionData& c, double tol = kDefaultTol);

/// Same, over a caller-chosen complement basis (rows).
CurvatureForm curvature(const ConnectionData& c, const Matrix& complement_rows,
                        double tol = kDefaultTol);

/// Span of the curvature values in g.
Subspace curvature_image(const CurvatureForm& f, double tol = kDefaultTol);

/// Holonomy algebra: the h-module generated by the curvature image, i.e. the
/// fixed point of closing Im(rho) under all ad_g(alpha(e_i)).
Subspace wang_holonomy(const ConnectionData& c, double tol = kDefaultTol);

struct HolonomyReport {
  int dim = 0;
  std::array<int, 3> killing_signature = {0, 0, 0};
  bool is_subalgebra = false;
  bool equals_g = false;
  Subspace algebra;
};

HolonomyReport holonomy_report(const ConnectionData& c, double tol = kDefaultTol);

}  // namespace homcart

#endif
