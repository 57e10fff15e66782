#include "homcart/automorphisms.hpp"

#include <algorithm>
#include <cmath>

#include "homcart/errors.hpp"

namespace homcart {

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unflatten(const Vector& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n)
    throw input_error("unflatten: length is not n^2");
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

QuotientKappa::QuotientKappa(const ConnectionData& c, const CurvatureForm& f, double tol)
    : form_(f) {
  if (c.kind != ConnectionKind::Cartan)
    throw precondition_error("kappa_on_quotient: requires a Cartan connection");
  const ValidationReport rep = validate(c, tol);
  if (!rep.ok) throw precondition_error("kappa_on_quotient: connection data fails validation");

  const int nu = c.h.dim() - c.k_basis.dim();
  if (f.size() != nu) throw input_error("kappa_on_quotient: curvature form has wrong complement size");

  // Projection g -> g/p in the coordinates of the complement columns of
  // p_basis, then the inverse of the (C.3) isomorphism n_i -> Pi(alpha n_i).
  const auto& ppiv = c.p_basis.pivots();
  std::vector<int> comp_cols;
  std::size_t pi = 0;
  for (int col = 0; col < c.g.dim(); ++col) {
    if (pi < ppiv.size() && ppiv[pi] == col)
      ++pi;
    else
      comp_cols.push_back(col);
  }
  if (static_cast<int>(comp_cols.size()) != nu)
    throw precondition_error("kappa_on_quotient: dim g - dim p does not match dim h - dim k");

  Matrix projector = Matrix::Zero(nu, c.g.dim());
  {
    // Row r of the projector reads off coordinate comp_cols[r] after
    // eliminating the p-components.
    Matrix elim = Matrix::Identity(c.g.dim(), c.g.dim());
    for (int k = 0; k < c.p_basis.dim(); ++k) {
      const int pc = ppiv[static_cast<std::size_t>(k)];
      elim -= Vector(c.p_basis.basis().row(k).transpose()) * elim.row(pc);
    }
    for (int r = 0; r < nu; ++r) projector.row(r) = elim.row(comp_cols[static_cast<std::size_t>(r)]);
  }

  Matrix iso(nu, nu);
  for (int i = 0; i < nu; ++i)
    iso.col(i) = projector * (c.alpha * f.complement.row(i).transpose());
  Eigen::FullPivLU<Matrix> lu(iso);
  lu.setThreshold(tol * std::max(1.0, iso.cwiseAbs().maxCoeff()));
  if (lu.rank() < nu)
    throw precondition_error("kappa_on_quotient: the (C.3) map is rank-deficient");
  coeff_map_ = lu.solve(projector);
}

Vector QuotientKappa::eval(const Vector& u, const Vector& v) const {
  const Vector a = coeff_map_ * u;
  const Vector b = coeff_map_ * v;
  const int nu = quotient_dim();
  Vector out = Vector::Zero(coeff_map_.cols());
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j)
      out += (a[i] * b[j] - a[j] * b[i]) *
             form_.values[static_cast<std::size_t>(CurvatureForm::pair_index(i, j, nu))];
  return out;
}

Matrix QuotientKappa::first_slot_operator(const Vector& v) const {
  const int dim_g = static_cast<int>(coeff_map_.cols());
  const int nu = quotient_dim();
  const Vector b = coeff_map_ * v;
  Matrix w = Matrix::Zero(dim_g, nu);  // column a: sum_b b_b rho(a, b)
  for (int a = 0; a < nu; ++a)
    for (int j = 0; j < nu; ++j) {
      if (j == a || b[j] == 0.0) continue;
      const int idx = a < j ? CurvatureForm::pair_index(a, j, nu)
                            : CurvatureForm::pair_index(j, a, nu);
      const double sign = a < j ? 1.0 : -1.0;
      w.col(a) += sign * b[j] * form_.values[static_cast<std::size_t>(idx)];
    }
  return w * coeff_map_;
}

QuotientKappa kappa_on_quotient(const ConnectionData& c, const CurvatureForm& f, double tol) {
  return QuotientKappa(c, f, tol);
}

HatConnection build_hat(const ConnectionData& c, double tol) {
  if (c.kind != ConnectionKind::Cartan)
    throw precondition_error("build_hat: requires a Cartan connection");
  const CurvatureForm f = curvature(c, tol);
  const QuotientKappa qk(c, f, tol);

  HatConnection hc;
  hc.base = c;
  hc.operators.reserve(static_cast<std::size_t>(c.h.dim()));
  for (int j = 0; j < c.h.dim(); ++j) {
    const Vector aj = c.alpha.col(j);
    hc.operators.push_back(c.g.ad(aj) + qk.first_slot_operator(aj));
  }

  const double scale = std::max(1.0, c.alpha.cwiseAbs().maxCoeff());
  double worst = 0.0;
  // hat(Z) reduces to ad(psi'(Z)) on k.
  for (int z = 0; z < c.k_basis.dim(); ++z) {
    const Vector zk = c.k_basis.basis().row(z).transpose();
    Matrix hz = Matrix::Zero(c.g.dim(), c.g.dim());
    for (int j = 0; j < c.h.dim(); ++j)
      if (zk[j] != 0.0) hz += zk[j] * hc.operators[static_cast<std::size_t>(j)];
    worst = std::max(worst, (hz - c.g.ad(Vector(c.alpha * zk))).cwiseAbs().maxCoeff());
  }
  // hat(e_i)(alpha e_j) = alpha([e_i, e_j]).
  for (int i = 0; i < c.h.dim(); ++i)
    for (int j = 0; j < c.h.dim(); ++j) {
      const Vector lhs = hc.operators[static_cast<std::size_t>(i)] * (c.alpha.col(j));
      const Vector rhs =
          c.alpha * c.h.bracket(Vector::Unit(c.h.dim(), i), Vector::Unit(c.h.dim(), j));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  hc.check_residual = worst;
  if (worst > tol * scale * scale)
    throw construction_error("build_hat: self-check failed, inconsistent connection data");
  return hc;
}

Subspace hat_holonomy(const HatConnection& hc, double tol) {
  const ConnectionData& c = hc.base;
  const int ng = c.g.dim();
  const int nh = c.h.dim();

  std::vector<Vector> curvature_values;
  curvature_values.reserve(static_cast<std::size_t>(nh * (nh - 1) / 2));
  for (int i = 0; i < nh; ++i)
    for (int j = i + 1; j < nh; ++j) {
      const Matrix& ti = hc.operators[static_cast<std::size_t>(i)];
      const Matrix& tj = hc.operators[static_cast<std::size_t>(j)];
      Matrix comm = ti * tj - tj * ti;
      const Vector bij = c.h.bracket(Vector::Unit(nh, i), Vector::Unit(nh, j));
      for (int k = 0; k < nh; ++k)
        if (bij[k] != 0.0) comm -= bij[k] * hc.operators[static_cast<std::size_t>(k)];
      curvature_values.push_back(flatten(comm));
    }

  Subspace rhat(ng * ng, tol);
  double opscale = 1.0;
  for (const auto& t : hc.operators) opscale = std::max(opscale, t.cwiseAbs().maxCoeff());
  rhat.absorb_scale(opscale * opscale);
  for (const auto& v : curvature_values) rhat.insert(v);

  std::vector<LinearMap> maps;
  maps.reserve(static_cast<std::size_t>(nh));
  for (int i = 0; i < nh; ++i) {
    const Matrix& ti = hc.operators[static_cast<std::size_t>(i)];
    maps.emplace_back([&ti, ng](const Vector& v) -> Vector {
      const Matrix t = unflatten(v, ng);
      return flatten(ti * t - t * ti);
    });
  }
  return close_under_maps(rhat, maps, tol);
}

InfAutResult infinitesimal_automorphisms(const ConnectionData& c, double tol) {
  const HatConnection hc = build_hat(c, tol);
  return infinitesimal_automorphisms(hc, hat_holonomy(hc, tol), tol);
}

InfAutResult infinitesimal_automorphisms(const HatConnection& hc, const Subspace& hol,
                                         double tol) {
  const ConnectionData& c = hc.base;
  const int ng = c.g.dim();

  InfAutResult out;
  out.hat_holonomy_dim = hol.dim();
  out.simply_connected = c.simply_connected;
  if (!c.simply_connected)
    out.warnings.push_back(
        "simple connectivity not asserted: result is the automorphism algebra of the simply "
        "connected cover");

  if (hol.dim() == 0) {
    out.algebra = Subspace::full(ng, tol);
  } else {
    Matrix stacked(hol.dim() * ng, ng);
    for (int r = 0; r < hol.dim(); ++r)
      stacked.middleRows(r * ng, ng) = unflatten(Vector(hol.basis().row(r).transpose()), ng);
    out.algebra = span(kernel_basis(stacked, tol), tol);
  }

  for (int j = 0; j < c.h.dim(); ++j)
    out.alpha_image_residual =
        std::max(out.alpha_image_residual, out.algebra.residual(Vector(c.alpha.col(j))));
  return out;
}

}  // namespace homcart
