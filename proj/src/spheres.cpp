#include "homcart/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "homcart/errors.hpp"

namespace homcart {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

std::string pair_label(const std::string& head, int a, int b) {
  return head + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

}  // namespace

void validate_params(const SphereParams& params) {
  if (params.p < 1 || params.q < 1) throw input_error("sphere params: p, q must be >= 1");
  if (params.p + params.q < 3) throw input_error("sphere params: p + q must be >= 3");
  if (!(params.s > 0.0)) throw input_error("sphere params: s must be positive");
  if (params.s_prime == 0.0) throw input_error("sphere params: s' must be nonzero");
}

HSplit build_h(const SphereParams& params) {
  validate_params(params);
  const int p = params.p, q = params.q;
  const int np = p + 1, nq = q + 1, nn = np + nq;

  // so(p+1) + so(q+1) as block-diagonal matrices; v+A convention with v the
  // first column of each block.
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  std::vector<int> n_indices, k_indices;

  auto add = [&](const Matrix& m, const std::string& label, bool is_n) {
    if (is_n)
      n_indices.push_back(static_cast<int>(basis.size()));
    else
      k_indices.push_back(static_cast<int>(basis.size()));
    basis.push_back(m);
    labels.push_back(label);
  };

  for (int a = 0; a < p; ++a) {
    Matrix m = Matrix::Zero(nn, nn);
    m(1 + a, 0) = 1.0;
    m(0, 1 + a) = -1.0;
    add(m, "v" + std::to_string(a + 1), true);
  }
  for (int b = 0; b < q; ++b) {
    Matrix m = Matrix::Zero(nn, nn);
    m(np + 1 + b, np) = 1.0;
    m(np, np + 1 + b) = -1.0;
    add(m, "w" + std::to_string(b + 1), true);
  }
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      Matrix m = Matrix::Zero(nn, nn);
      m(1 + a, 1 + b) = 1.0;
      m(1 + b, 1 + a) = -1.0;
      add(m, pair_label("A", a, b), false);
    }
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Matrix m = Matrix::Zero(nn, nn);
      m(np + 1 + a, np + 1 + b) = 1.0;
      m(np + 1 + b, np + 1 + a) = -1.0;
      add(m, pair_label("B", a, b), false);
    }

  HSplit out{algebra_from_matrices(basis, labels), Subspace(), Subspace(), n_indices, k_indices};
  const int dim = out.algebra.dim();
  Matrix krows = Matrix::Zero(static_cast<int>(k_indices.size()), dim);
  for (std::size_t r = 0; r < k_indices.size(); ++r) krows(static_cast<int>(r), k_indices[r]) = 1.0;
  Matrix nrows = Matrix::Zero(static_cast<int>(n_indices.size()), dim);
  for (std::size_t r = 0; r < n_indices.size(); ++r) nrows(static_cast<int>(r), n_indices[r]) = 1.0;
  out.k_basis = span(krows);
  out.n_basis = span(nrows);
  return out;
}

int GradedG::so_index(int a, int b) const {
  if (a < 0 || b <= a || b >= n()) throw input_error("GradedG::so_index: need 0 <= a < b < n");
  return n() + 1 + a * n() - a * (a + 1) / 2 + (b - a - 1);
}

Matrix GradedG::realize(const Vector& coords) const {
  if (coords.size() != algebra.dim()) throw input_error("GradedG::realize: wrong coordinate length");
  const int m = n();
  Matrix out = Matrix::Zero(m + 2, m + 2);
  const double a = coords[scaling_index()];
  out(0, 0) = -a;
  out(m + 1, m + 1) = a;
  for (int i = 0; i < m; ++i) {
    const double x = coords[idx_gm1[static_cast<std::size_t>(i)]];
    out(1 + i, 0) += x;
    out(m + 1, 1 + i) += -metric_diag[i] * x;
    const double z = coords[idx_g1[static_cast<std::size_t>(i)]];
    out(0, 1 + i) += z;
    out(1 + i, m + 1) += -metric_diag[i] * z;
  }
  for (int aa = 0; aa < m; ++aa)
    for (int bb = aa + 1; bb < m; ++bb) {
      const double c = coords[so_index(aa, bb)];
      out(1 + aa, 1 + bb) += c;
      out(1 + bb, 1 + aa) += -metric_diag[aa] * metric_diag[bb] * c;
    }
  return out;
}

Vector GradedG::coords_of(const Matrix& m, double tol) const {
  const int nn = n();
  if (m.rows() != nn + 2 || m.cols() != nn + 2)
    throw input_error("GradedG::coords_of: wrong matrix shape");
  Vector coords = Vector::Zero(algebra.dim());
  coords[scaling_index()] = m(nn + 1, nn + 1);
  for (int i = 0; i < nn; ++i) {
    coords[idx_gm1[static_cast<std::size_t>(i)]] = m(1 + i, 0);
    coords[idx_g1[static_cast<std::size_t>(i)]] = m(0, 1 + i);
  }
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b) coords[so_index(a, b)] = m(1 + a, 1 + b);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((realize(coords) - m).cwiseAbs().maxCoeff() > tol * scale)
    throw input_error("GradedG::coords_of: matrix is not in the algebra");
  return coords;
}

Matrix GradedG::g0_action(const Vector& coords) const {
  if (coords.size() != algebra.dim())
    throw input_error("GradedG::g0_action: wrong coordinate length");
  const int m = n();
  Matrix out = Matrix::Identity(m, m) * coords[scaling_index()];
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const double c = coords[so_index(a, b)];
      out(a, b) += c;
      out(b, a) += -metric_diag[a] * metric_diag[b] * c;
    }
  return out;
}

Vector GradedG::embed_gm1(const Vector& x) const {
  if (x.size() != n()) throw input_error("GradedG::embed_gm1: wrong length");
  Vector coords = Vector::Zero(algebra.dim());
  for (int i = 0; i < n(); ++i) coords[idx_gm1[static_cast<std::size_t>(i)]] = x[i];
  return coords;
}

Vector GradedG::embed_g1(const Vector& z) const {
  if (z.size() != n()) throw input_error("GradedG::embed_g1: wrong length");
  Vector coords = Vector::Zero(algebra.dim());
  for (int i = 0; i < n(); ++i) coords[idx_g1[static_cast<std::size_t>(i)]] = z[i];
  return coords;
}

Vector GradedG::embed_g0(const Matrix& a_block, double scaling, double tol) const {
  const int m = n();
  if (a_block.rows() != m || a_block.cols() != m)
    throw input_error("GradedG::embed_g0: wrong block shape");
  Vector coords = Vector::Zero(algebra.dim());
  coords[scaling_index()] = scaling;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) coords[so_index(a, b)] = a_block(a, b);
  // membership check: ghat * A must be antisymmetric and consistent with the
  // stored upper triangle
  const Matrix rebuilt = g0_action(coords) - Matrix::Identity(m, m) * scaling;
  const double scale = std::max(1.0, a_block.cwiseAbs().maxCoeff());
  if ((rebuilt - a_block).cwiseAbs().maxCoeff() > tol * scale)
    throw input_error("GradedG::embed_g0: block is not in so(ghat)");
  return coords;
}

Subspace GradedG::p_subspace(double tol) const {
  const int dim = algebra.dim();
  Matrix rows = Matrix::Zero(static_cast<int>(idx_g0.size() + idx_g1.size()), dim);
  int r = 0;
  for (int i : idx_g0) rows(r++, i) = 1.0;
  for (int i : idx_g1) rows(r++, i) = 1.0;
  return span(rows, tol);
}

GradedG build_g(const SphereParams& params) {
  validate_params(params);
  const int p = params.p, q = params.q, n = p + q;
  const int sigma = sign_of(params.s_prime);

  GradedG g;
  g.p = p;
  g.q = q;
  g.form_sign = sigma;
  g.metric_diag = Vector::Ones(n);
  for (int i = p; i < n; ++i) g.metric_diag[i] = sigma;

  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  auto blank = [n]() { return Matrix::Zero(n + 2, n + 2); };

  for (int i = 0; i < n; ++i) {
    Matrix m = blank();
    m(1 + i, 0) = 1.0;
    m(n + 1, 1 + i) = -g.metric_diag[i];
    g.idx_gm1.push_back(static_cast<int>(basis.size()));
    basis.push_back(m);
    labels.push_back("x" + std::to_string(i + 1));
  }
  {
    Matrix m = blank();
    m(0, 0) = -1.0;
    m(n + 1, n + 1) = 1.0;
    g.idx_g0.push_back(static_cast<int>(basis.size()));
    basis.push_back(m);
    labels.push_back("d");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Matrix m = blank();
      m(1 + a, 1 + b) = 1.0;
      m(1 + b, 1 + a) = -g.metric_diag[a] * g.metric_diag[b];
      g.idx_g0.push_back(static_cast<int>(basis.size()));
      basis.push_back(m);
      labels.push_back(pair_label("m", a, b));
    }
  for (int i = 0; i < n; ++i) {
    Matrix m = blank();
    m(0, 1 + i) = 1.0;
    m(1 + i, n + 1) = -g.metric_diag[i];
    g.idx_g1.push_back(static_cast<int>(basis.size()));
    basis.push_back(m);
    labels.push_back("z" + std::to_string(i + 1));
  }

  g.algebra = algebra_from_matrices(basis, labels);
  return g;
}

Matrix alpha0(const SphereParams& params, const HSplit& h, const GradedG& g) {
  validate_params(params);
  const int p = params.p, q = params.q, n = p + q;
  if (static_cast<int>(h.n_indices.size()) != n || g.n() != n)
    throw input_error("alpha0: h and g were not built from these parameters");
  const double cp = 1.0 / std::sqrt(params.s);
  const double cq = 1.0 / std::sqrt(std::abs(params.s_prime));

  Matrix a = Matrix::Zero(g.algebra.dim(), h.algebra.dim());
  for (int i = 0; i < n; ++i)
    a(g.idx_gm1[static_cast<std::size_t>(i)], h.n_indices[static_cast<std::size_t>(i)]) =
        i < p ? cp : cq;

  // isotropy inclusion so(p)+so(q) -> so(ghat): block-diagonal, so(q) offset
  // by p in both row and column
  std::size_t col = 0;
  for (int aa = 0; aa < p; ++aa)
    for (int bb = aa + 1; bb < p; ++bb)
      a(g.so_index(aa, bb), h.k_indices[col++]) = 1.0;
  for (int aa = 0; aa < q; ++aa)
    for (int bb = aa + 1; bb < q; ++bb)
      a(g.so_index(p + aa, p + bb), h.k_indices[col++]) = 1.0;
  return a;
}

std::pair<TwoTensor, double> ricci_scalar(const SphereParams& params) {
  validate_params(params);
  const int p = params.p, q = params.q, n = p + q;
  const double s = params.s, sp = params.s_prime;
  const int sigma = sign_of(sp);

  TwoTensor ricci{Matrix::Zero(n, n), TensorRole::Ricci};
  for (int i = 0; i < p; ++i) ricci.mat(i, i) = s * (p - 1);
  for (int i = p; i < n; ++i) ricci.mat(i, i) = sp * (q - 1) * sigma;
  const double scalar = s * p * (p - 1) + sp * q * (q - 1);
  return {ricci, scalar};
}

TwoTensor rho_tensor(const SphereParams& params) {
  validate_params(params);
  const int p = params.p, q = params.q, n = p + q;
  const double s = params.s, sp = params.s_prime;
  const int sigma = sign_of(sp);
  const double delta = static_cast<double>(n - 1) * (n - 2);
  const double cap_delta = static_cast<double>(p - 1) * (q - 1);
  const double m = s * p * (p - 1) - sp * q * (q - 1);

  TwoTensor rho{Matrix::Zero(n, n), TensorRole::Rho};
  const double c1 = -(2.0 * s * cap_delta + m) / (2.0 * delta);
  const double c2 = -(2.0 * sp * cap_delta - m) * sigma / (2.0 * delta);
  for (int i = 0; i < p; ++i) rho.mat(i, i) = c1;
  for (int i = p; i < n; ++i) rho.mat(i, i) = c2;
  return rho;
}

TwoTensor rho_from_ricci(const SphereParams& params) {
  const int n = params.p + params.q;
  const auto [ricci, scalar] = ricci_scalar(params);
  Matrix g = Matrix::Identity(n, n);
  for (int i = params.p; i < n; ++i) g(i, i) = sign_of(params.s_prime);
  TwoTensor rho{Matrix::Zero(n, n), TensorRole::Rho};
  rho.mat = -(ricci.mat - scalar / (2.0 * (n - 1)) * g) / (n - 2);
  return rho;
}

double einstein_ratio(const SphereParams& params) {
  validate_params(params);
  if (params.q == 1) throw input_error("einstein_ratio: undefined for q = 1");
  return (params.p - 1.0) / (params.q - 1.0) * params.s;
}

namespace {

ConnectionData assemble_connection(const SphereParams& params, const HSplit& h, const GradedG& g,
                                   const Matrix& alpha) {
  ConnectionData c;
  c.kind = ConnectionKind::Cartan;
  c.h = h.algebra;
  c.g = g.algebra;
  c.k_basis = h.k_basis;
  c.p_basis = g.p_subspace();
  c.alpha = alpha;
  c.simply_connected = params.p >= 2 && params.q >= 2;
  return c;
}

Matrix normal_alpha(const SphereParams& params, const HSplit& h, const GradedG& g) {
  const Matrix a0 = alpha0(params, h, g);
  const Matrix rho = rho_tensor(params).mat;
  Matrix a = a0;
  const int n = g.n();
  for (int j = 0; j < h.algebra.dim(); ++j) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = a0(g.idx_gm1[static_cast<std::size_t>(i)], j);
    const Vector z = rho * x;  // covector A(x)
    for (int i = 0; i < n; ++i) a(g.idx_g1[static_cast<std::size_t>(i)], j) += z[i];
  }
  return a;
}

}  // namespace

ConnectionData alpha0_connection(const SphereParams& params) {
  const HSplit h = build_h(params);
  const GradedG g = build_g(params);
  return assemble_connection(params, h, g, alpha0(params, h, g));
}

ConnectionData normal_connection(const SphereParams& params) {
  const HSplit h = build_h(params);
  const GradedG g = build_g(params);
  return assemble_connection(params, h, g, normal_alpha(params, h, g));
}

CurvatureForm kappa_closed_form(const SphereParams& params) {
  validate_params(params);
  const GradedG g = build_g(params);
  const int p = params.p, q = params.q, n = p + q;
  const double s = params.s, sp = params.s_prime;
  const int sigma = sign_of(sp);
  const double delta = static_cast<double>(n - 1) * (n - 2);
  const double cap_delta = static_cast<double>(p - 1) * (q - 1);
  const double m = s * p * (p - 1) - sp * q * (q - 1);

  const double c1 = s - (m + 2.0 * s * cap_delta) / delta;
  const double c2 = sp + (m - 2.0 * sp * cap_delta) / delta;
  const double c3 = cap_delta / delta * (s + sp);

  // kappa-tilde_{ij}^r_s is supported on E_{ij}; the coefficient by block:
  auto coef = [&](int i, int j) -> double {
    const bool i1 = i < p, j1 = j < p;
    if (i1 && j1) return c1;
    if (!i1 && !j1) return sigma * c2;
    if (i1 && !j1) return -sigma * c3;
    return -c3;
  };

  const double cp = 1.0 / std::sqrt(s);
  const double cq = 1.0 / std::sqrt(std::abs(sp));

  CurvatureForm f;
  // complement rows in h coordinates: the n-block occupies the first n
  // h-basis vectors by the build_h ordering
  const int dim_h = n + p * (p - 1) / 2 + q * (q - 1) / 2;
  f.complement = Matrix::Zero(n, dim_h);
  for (int i = 0; i < n; ++i) f.complement(i, i) = 1.0;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // skew-symmetrization of kappa-tilde in (i, j)
      Matrix op = Matrix::Zero(n, n);
      op(i, j) += coef(i, j);
      op(j, i) -= coef(j, i);
      const double scale = (i < p ? cp : cq) * (j < p ? cp : cq);
      f.values.push_back(scale * g.embed_g0(op, 0.0));
    }
  return f;
}

ConnectionData SphereModel::connection(bool unnormalized) const {
  return assemble_connection(params, h, g, unnormalized ? alpha0_map : alpha_map);
}

SphereModel build_sphere_model(const SphereParams& params) {
  SphereModel m;
  m.params = params;
  m.h = build_h(params);
  m.g = build_g(params);
  auto rs = ricci_scalar(params);
  m.ricci = rs.first;
  m.scalar = rs.second;
  m.rho = rho_tensor(params);
  m.alpha0_map = alpha0(params, m.h, m.g);
  m.alpha_map = normal_alpha(params, m.h, m.g);
  m.simply_connected = params.p >= 2 && params.q >= 2;
  return m;
}

Matrix ricci_contraction(const SphereModel& m, const ConnectionData& c, const CurvatureForm& f,
                         double tol) {
  const QuotientKappa qk(c, f, tol);
  const int n = m.g.n();
  std::vector<Vector> embedded;
  embedded.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) embedded.push_back(m.g.embed_gm1(Vector(Vector::Unit(n, i))));

  Matrix r = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      if (a == i) continue;
      const Matrix op = m.g.g0_action(qk.eval(embedded[static_cast<std::size_t>(a)],
                                              embedded[static_cast<std::size_t>(i)]));
      r.row(i) += op.row(a);
    }
  return r;
}

ConformalResiduals conformal_residuals(const SphereModel& m, const ConnectionData& c,
                                       const CurvatureForm& f, double tol) {
  ConformalResiduals out;
  for (const auto& v : f.values)
    for (int idx : m.g.idx_gm1) out.conf1 = std::max(out.conf1, std::abs(v[idx]));
  const Matrix contraction = ricci_contraction(m, c, f, tol);
  out.conf2 = contraction.cwiseAbs().maxCoeff();
  return out;
}

std::vector<SphereParams> parameter_grid() {
  std::vector<SphereParams> grid;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      if (p + q < 3 || p + q > 6) continue;
      for (double s : {1.0, 2.0}) {
        std::vector<double> sprimes = {-s, 1.0, -1.0, 3.0, -3.0};
        if (p >= 2 && q >= 2) sprimes.push_back(einstein_ratio({p, q, s, 1.0}));
        std::vector<double> uniq;
        for (double v : sprimes) {
          if (v == 0.0) continue;
          bool dup = false;
          for (double u : uniq) dup = dup || std::abs(u - v) < 1e-12;
          if (!dup) uniq.push_back(v);
        }
        for (double v : uniq) grid.push_back({p, q, s, v});
      }
    }
  return grid;
}

}  // namespace homcart
