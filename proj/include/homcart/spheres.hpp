#ifndef HOMCART_SPHERES_HPP
#define HOMCART_SPHERES_HPP

#include <utility>
#include <vector>

#include "homcart/automorphisms.hpp"
#include "homcart/connection.hpp"

namespace homcart {

/// Parameters of the conformal product-of-spheres geometry: sphere dimensions
/// p, q >= 1 with p + q >= 3 and the metric weights s > 0, s' != 0 of the two
/// factors.
struct SphereParams {
  int p = 2;
  int q = 2;
  double s = 1.0;
  double s_prime = 1.0;
};

void validate_params(const SphereParams& params);  // throws input_error

enum class TensorRole { Metric, Ricci, Rho };

/// Symmetric two-tensor on R^{p+q}; every tensor arising here is block
/// diagonal (c1 I_p, c2 I_q).
struct TwoTensor {
  Matrix mat;
  TensorRole role = TensorRole::Metric;
};

/// h = so(p+1) + so(q+1) with basis ordered (R^p, R^q, so(p), so(q)); the
/// isotropy subalgebra k is the pair of so-blocks and n = R^p + R^q.
struct HSplit {
  LieAlgebra algebra;
  Subspace k_basis;
  Subspace n_basis;
  std::vector<int> n_indices;
  std::vector<int> k_indices;
};

HSplit build_h(const SphereParams& params);

/// The graded orthogonal algebra g = g_{-1} + g_0 + g_1 realized with the
/// light-cone form [[0,0,1],[0,ghat,0],[1,0,0]], ghat = diag(I_p, sgn(s')I_q).
/// Basis order: (g_{-1}, scaling element, so(ghat) block, g_1); the scaling
/// element acts as +1 on g_{-1} and -1 on g_1.
struct GradedG {
  LieAlgebra algebra;
  int p = 0, q = 0;
  int form_sign = 1;
  std::vector<int> idx_gm1, idx_g0, idx_g1;
  Vector metric_diag;  // diagonal of ghat, length p+q

  int n() const { return p + q; }
  int scaling_index() const { return n(); }
  int so_index(int a, int b) const;  // 0 <= a < b < n

  /// Full matrix realization of a coordinate vector.
  Matrix realize(const Vector& coords) const;
  Vector coords_of(const Matrix& m, double tol = kDefaultTol) const;

  /// Action of the g_0 component of a coordinate vector on g_{-1} = R^n.
  Matrix g0_action(const Vector& coords) const;

  Vector embed_gm1(const Vector& x) const;
  Vector embed_g1(const Vector& z) const;
  /// Coordinates of A + a*scaling for A in so(ghat); checks membership.
  Vector embed_g0(const Matrix& a_block, double scaling,
                  double tol = kDefaultTol) const;

  Subspace p_subspace(double tol = kDefaultTol) const;
};

GradedG build_g(const SphereParams& params);

/// The connection extending the isotropy inclusion by the weighted block
/// isometry n -> g_{-1}; (dim g) x (dim h), one column per h-basis vector.
Matrix alpha0(const SphereParams& params, const HSplit& h, const GradedG& g);

/// Closed-form Ricci tensor and scalar curvature of the product metric.
std::pair<TwoTensor, double> ricci_scalar(const SphereParams& params);

/// Closed-form rho tensor (the trace adjustment of Ricci).
TwoTensor rho_tensor(const SphereParams& params);

/// The same tensor from its definition, A = -1/(n-2) (Ric - scal/(2(n-1)) g),
/// used as the independent route for cross-checks.
TwoTensor rho_from_ricci(const SphereParams& params);

/// s' value that makes the product metric Einstein; undefined for q = 1.
double einstein_ratio(const SphereParams& params);

/// The connection data for alpha0 (no rho correction).
ConnectionData alpha0_connection(const SphereParams& params);

/// The normal Cartan connection alpha = alpha0 + rho-correction, packaged with
/// h, g and the subalgebra data; validated by construction.
ConnectionData normal_connection(const SphereParams& params);

/// Closed-form curvature of the normal connection on the n-complement,
/// independent of the bracket-based route.
CurvatureForm kappa_closed_form(const SphereParams& params);

/// Everything the generator derives for one parameter point.
struct SphereModel {
  SphereParams params;
  HSplit h;
  GradedG g;
  TwoTensor ricci;
  double scalar = 0.0;
  TwoTensor rho;
  Matrix alpha0_map;
  Matrix alpha_map;
  bool simply_connected = false;

  ConnectionData connection(bool unnormalized = false) const;
};

SphereModel build_sphere_model(const SphereParams& params);

/// Residuals of the two conformal normalization conditions for a curvature
/// form of a sphere model: conf1 = largest g_{-1} component, conf2 = largest
/// entry of the Ricci-type contraction of the g_0 component.
struct ConformalResiduals {
  double conf1 = 0.0;
  double conf2 = 0.0;
};

ConformalResiduals conformal_residuals(const SphereModel& m, const ConnectionData& c,
                                       const CurvatureForm& f, double tol = kDefaultTol);

/// Ricci-type contraction R_ij = sum_a (kappa-bar(u_a, u_i))^a_j of the g_0
/// part of the curvature, in g_{-1} indices.
Matrix ricci_contraction(const SphereModel& m, const ConnectionData& c, const CurvatureForm& f,
                         double tol = kDefaultTol);

/// The parameter grid used by the property and acceptance suites:
/// p, q in {1,2,3} with 3 <= p+q <= 6, s in {1,2},
/// s' in {-s, 1, -1, 3, -3} plus the Einstein ratio when defined.
std::vector<SphereParams> parameter_grid();

}  // namespace homcart

#endif
