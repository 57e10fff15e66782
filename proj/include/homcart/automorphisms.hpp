#ifndef HOMCART_AUTOMORPHISMS_HPP
#define HOMCART_AUTOMORPHISMS_HPP

#include <string>
#include <vector>

#include "homcart/connection.hpp"

namespace homcart {

/// Curvature of a Cartan connection reinterpreted as a bilinear map
/// (g/p) x (g/p) -> g through the isomorphism h/k = g/p induced by alpha.
/// Evaluation on arbitrary g-vectors first projects both slots to g/p.
class QuotientKappa {
 public:
  QuotientKappa(const ConnectionData& c, const CurvatureForm& f, double tol = kDefaultTol);

  int quotient_dim() const { return static_cast<int>(coeff_map_.rows()); }

  /// kappa-bar(u, v) for u, v in g coordinates.
  Vector eval(const Vector& u, const Vector& v) const;

  /// Matrix of Y |-> kappa-bar(Y, v) (the moving argument in the first slot).
  Matrix first_slot_operator(const Vector& v) const;

  /// Coefficients of Pi(u) in the basis {Pi(alpha(n_i))}.
  Vector quotient_coefficients(const Vector& u) const { return coeff_map_ * u; }

 private:
  CurvatureForm form_;
  Matrix coeff_map_;  // nu x dim g
};

QuotientKappa kappa_on_quotient(const ConnectionData& c, const CurvatureForm& f,
                                double tol = kDefaultTol);

/// The modified connection on gl(g): one operator per h-basis vector,
/// hat(e_i) Y = [alpha(e_i), Y] + kappa-bar(Y, alpha(e_i)).
struct HatConnection {
  std::vector<Matrix> operators;
  double check_residual = 0.0;  // worst self-check violation (see build_hat)
  ConnectionData base;
};

/// Builds the hat connection and verifies its two defining identities:
/// hat(Z) = ad(psi'(Z)) on the k-basis, and hat(e_i)(alpha e_j) =
/// alpha([e_i, e_j]) on all h-basis pairs. Violations above tol raise
/// construction_error.
HatConnection build_hat(const ConnectionData& c, double tol = kDefaultTol);

/// Wang holonomy of the hat connection inside End(g): matrices flattened to
/// vectors of length (dim g)^2, curvature spans closed under T -> [hat_i, T].
Subspace hat_holonomy(const HatConnection& hc, double tol = kDefaultTol);

struct InfAutResult {
  Subspace algebra;           // subspace of g
  int hat_holonomy_dim = 0;
  double alpha_image_residual = 0.0;  // max residual of alpha(h-basis) in the kernel
  bool simply_connected = false;
  std::vector<std::string> warnings;
};

/// Joint kernel of the hat holonomy: the infinitesimal-automorphism algebra
/// when the model is simply connected; otherwise the result describes the
/// simply connected cover and a warning is attached.
InfAutResult infinitesimal_automorphisms(const ConnectionData& c, double tol = kDefaultTol);

/// Same, from an already-computed hat connection and its holonomy.
InfAutResult infinitesimal_automorphisms(const HatConnection& hc, const Subspace& hat_hol,
                                         double tol = kDefaultTol);

/// Flatten/unflatten between End(g) and R^{n^2} (column-major).
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, int n);

}  // namespace homcart

#endif
