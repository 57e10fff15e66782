#include "homcart/connection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homcart/errors.hpp"

namespace homcart {

namespace {

void check_shapes(const ConnectionData& c) {
  if (c.alpha.rows() != c.g.dim() || c.alpha.cols() != c.h.dim())
    throw input_error("connection: alpha must be (dim g) x (dim h)");
  if (c.k_basis.ambient_dim() != c.h.dim())
    throw input_error("connection: k_basis must live in h");
  if (c.p_basis.ambient_dim() != c.g.dim())
    throw input_error("connection: p_basis must live in g");
}

// Standard basis vectors of h at the non-pivot columns of k_basis.
Matrix default_complement(const ConnectionData& c) {
  const auto& piv = c.k_basis.pivots();
  std::vector<int> comp;
  std::size_t pi = 0;
  for (int col = 0; col < c.h.dim(); ++col) {
    if (pi < piv.size() && piv[pi] == col)
      ++pi;
    else
      comp.push_back(col);
  }
  Matrix rows = Matrix::Zero(static_cast<int>(comp.size()), c.h.dim());
  for (std::size_t r = 0; r < comp.size(); ++r) rows(static_cast<int>(r), comp[r]) = 1.0;
  return rows;
}

}  // namespace

ValidationReport validate(const ConnectionData& c, double tol) {
  if (tol <= 0.0) throw input_error("validate: tolerance must be positive");
  check_shapes(c);

  ValidationReport rep;
  rep.tol = tol;
  const double scale = std::max(1.0, c.alpha.size() == 0 ? 0.0 : c.alpha.cwiseAbs().maxCoeff());

  // (C.1): alpha restricted to k lands in p.
  for (int z = 0; z < c.k_basis.dim(); ++z) {
    const Vector az = c.alpha * c.k_basis.basis().row(z).transpose();
    rep.c1_residual = std::max(rep.c1_residual, c.p_basis.residual(az));
  }
  rep.c1_ok = rep.c1_residual <= tol * scale;

  // Infinitesimal (C.2): alpha([Z, X]) = [alpha Z, alpha X] for Z in the
  // k-basis and X running over the h-basis.
  for (int z = 0; z < c.k_basis.dim(); ++z) {
    const Vector zk = c.k_basis.basis().row(z).transpose();
    const Vector az = c.alpha * zk;
    for (int j = 0; j < c.h.dim(); ++j) {
      const Vector lhs = c.alpha * c.h.bracket(zk, Vector::Unit(c.h.dim(), j));
      const Vector rhs = c.g.bracket(az, Vector(c.alpha.col(j)));
      rep.c2_residual = std::max(rep.c2_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  rep.c2_ok = rep.c2_residual <= tol * scale * scale;

  // (C.3), Cartan kind: alpha followed by the projection g -> g/p has rank
  // dim h - dim k = dim g - dim p (kernel exactly k given (C.1)).
  if (c.kind == ConnectionKind::Cartan) {
    rep.c3_checked = true;
    const int quotient_dim = c.g.dim() - c.p_basis.dim();
    rep.c3_expected = c.h.dim() - c.k_basis.dim();

    const auto& ppiv = c.p_basis.pivots();
    std::vector<int> comp_cols;
    std::size_t pi = 0;
    for (int col = 0; col < c.g.dim(); ++col) {
      if (pi < ppiv.size() && ppiv[pi] == col)
        ++pi;
      else
        comp_cols.push_back(col);
    }
    Matrix projected(quotient_dim, c.h.dim());
    for (int j = 0; j < c.h.dim(); ++j) {
      Vector w = c.alpha.col(j);
      for (int k = 0; k < c.p_basis.dim(); ++k)
        w -= w[ppiv[static_cast<std::size_t>(k)]] * c.p_basis.basis().row(k).transpose();
      for (int r = 0; r < quotient_dim; ++r) projected(r, j) = w[comp_cols[static_cast<std::size_t>(r)]];
    }
    rep.c3_rank = span(Matrix(projected.transpose()), tol).dim();
    rep.c3_ok = rep.c3_rank == rep.c3_expected && rep.c3_expected == quotient_dim;
  }

  rep.ok = rep.c1_ok && rep.c2_ok && rep.c3_ok;
  return rep;
}

int CurvatureForm::pair_index(int i, int j, int n) {
  // lexicographic position of (i, j), i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vector CurvatureForm::value(int i, int j) const {
  const int n = size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw input_error("CurvatureForm::value: index out of range");
  if (i == j) {
    if (values.empty()) throw input_error("CurvatureForm::value: empty form");
    return Vector::Zero(values.front().size());
  }
  if (i < j) return values[static_cast<std::size_t>(pair_index(i, j, n))];
  return -values[static_cast<std::size_t>(pair_index(j, i, n))];
}

double CurvatureForm::max_abs() const {
  double mx = 0.0;
  for (const auto& v : values) mx = std::max(mx, v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff());
  return mx;
}

CurvatureForm curvature(const ConnectionData& c, double tol) {
  return curvature(c, default_complement(c), tol);
}

CurvatureForm curvature(const ConnectionData& c, const Matrix& complement_rows, double tol) {
  const ValidationReport rep = validate(c, tol);
  if (!rep.ok)
    throw precondition_error(std::string("curvature: connection data fails validation (") +
                             (!rep.c1_ok ? "C.1" : (!rep.c2_ok ? "C.2" : "C.3")) + ")");
  if (complement_rows.cols() != c.h.dim())
    throw input_error("curvature: complement vectors must live in h");
  if (static_cast<int>(complement_rows.rows()) != c.h.dim() - c.k_basis.dim())
    throw input_error("curvature: complement must have dim h - dim k vectors");
  {
    Matrix all(c.k_basis.dim() + complement_rows.rows(), c.h.dim());
    all.topRows(c.k_basis.dim()) = c.k_basis.basis();
    all.bottomRows(complement_rows.rows()) = complement_rows;
    if (span(all, tol).dim() != c.h.dim())
      throw input_error("curvature: complement does not complete k_basis to all of h");
  }

  CurvatureForm f;
  f.complement = complement_rows;
  const int n = f.size();
  f.values.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    const Vector ni = complement_rows.row(i).transpose();
    const Vector ai = c.alpha * ni;
    for (int j = i + 1; j < n; ++j) {
      const Vector nj = complement_rows.row(j).transpose();
      f.values.push_back(c.g.bracket(ai, Vector(c.alpha * nj)) - c.alpha * c.h.bracket(ni, nj));
    }
  }
  return f;
}

Subspace curvature_image(const CurvatureForm& f, double tol) {
  if (f.values.empty()) {
    // k = h: empty complement, zero holonomy input
    return Subspace(0, tol);
  }
  // Floor the rank scale at 1: the values live in coordinates of an O(1)
  // structure table, so entries below tol are rounding noise, not rank.
  Subspace image(static_cast<int>(f.values.front().size()), tol);
  image.absorb_scale(1.0);
  for (const auto& v : f.values) image.insert(v);
  return image;
}

Subspace wang_holonomy(const ConnectionData& c, double tol) {
  const CurvatureForm f = curvature(c, tol);
  Subspace rhat(c.g.dim(), tol);
  const double ascale = std::max(1.0, c.alpha.cwiseAbs().maxCoeff());
  rhat.absorb_scale(ascale * ascale);
  for (const auto& v : f.values) rhat.insert(v);
  std::vector<LinearOperator> ops;
  ops.reserve(static_cast<std::size_t>(c.h.dim()));
  for (int j = 0; j < c.h.dim(); ++j) ops.push_back(c.g.ad(Vector(c.alpha.col(j))));
  return close_under_operators(rhat, ops, tol);
}

HolonomyReport holonomy_report(const ConnectionData& c, double tol) {
  HolonomyReport rep;
  rep.algebra = wang_holonomy(c, tol);
  rep.dim = rep.algebra.dim();
  rep.equals_g = rep.dim == c.g.dim();
  rep.is_subalgebra = bracket_closure(c.g, rep.algebra, tol).dim() == rep.dim;
  if (rep.is_subalgebra) rep.killing_signature = killing_signature(c.g, rep.algebra, tol);
  return rep;
}

}  // namespace homcart
