#ifndef HOMCART_SUBSPACE_HPP
#define HOMCART_SUBSPACE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <vector>

namespace homcart {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A square matrix acting on coordinate vectors of the ambient algebra.
using LinearOperator = Eigen::MatrixXd;

/// Any linear action given as a callable (used where materializing a matrix
/// on End(g) would be wasteful).
using LinearMap = std::function<Vector(const Vector&)>;

inline constexpr double kDefaultTol = 1e-9;

/// Subspace of R^n held as a row-reduced basis under a pivot tolerance.
///
/// The basis is kept in reduced row-echelon form: every row has entry 1 at its
/// pivot column and zeros at the pivot columns of all other rows. Thresholds
/// are relative: a pivot candidate counts as zero when its magnitude is below
/// tol * (largest absolute entry seen). Membership of v is decided by the
/// max-norm of v after eliminating against the basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim, double tol = kDefaultTol);

  static Subspace zero(int ambient_dim, double tol = kDefaultTol);
  static Subspace full(int ambient_dim, double tol = kDefaultTol);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(pivots_.size()); }
  double tol() const { return tol_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// True when some accepted pivot fell in the gray zone [thr, 10*thr).
  bool rank_ambiguous() const { return ambiguous_; }

  /// Raises the reference scale used by the relative threshold. Callers that
  /// insert derived quantities (curvature values, operator commutators) seed
  /// this with the magnitude of the data that produced them, so that vectors
  /// of pure rounding noise do not count toward the rank.
  void absorb_scale(double s) { scale_ = std::max(scale_, s); }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vector& v);

  /// Max-norm of v after eliminating against the basis.
  double residual(const Vector& v) const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool same_span(const Subspace& other) const;

  /// Coefficients c with v = c^T * basis; throws precondition_error when v is
  /// not a member within tolerance.
  Vector coordinates(const Vector& v) const;

 private:
  int ambient_ = 0;
  double tol_ = kDefaultTol;
  double scale_ = 0.0;  // largest |entry| seen among inserted vectors
  bool ambiguous_ = false;
  Matrix basis_;  // dim() rows, ambient_ cols, RREF
  std::vector<int> pivots_;

  friend Subspace span(const Matrix&, double);
};

/// Span of a set of vectors: full Gaussian elimination with partial pivoting
/// and relative pivot threshold. Empty input yields the zero subspace.
Subspace span(const std::vector<Vector>& vectors, double tol = kDefaultTol);
Subspace span(const Matrix& rows, double tol = kDefaultTol);

/// Smallest subspace containing `start` and invariant under every operator,
/// by breadth-first fixed-point iteration (each round applies every operator
/// to every vector found so far, in a fixed order). `dims_trace`, when given,
/// receives the dimension after each round.
Subspace close_under_operators(const Subspace& start,
                               const std::vector<LinearOperator>& ops,
                               double tol = kDefaultTol,
                               std::vector<int>* dims_trace = nullptr);

Subspace close_under_maps(const Subspace& start,
                          const std::vector<LinearMap>& maps,
                          double tol = kDefaultTol,
                          std::vector<int>* dims_trace = nullptr);

/// Rows span the kernel {x : m x = 0}, computed from the RREF of m.
Matrix kernel_basis(const Matrix& m, double tol = kDefaultTol);

}  // namespace homcart

#endif
