#include "homcart/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "homcart/errors.hpp"

namespace homcart {

namespace {

// Index of the largest |entry| of v; ties resolved to the smallest index.
int argmax_abs(const Vector& v) {
  int best = 0;
  double mx = std::abs(v[0]);
  for (int i = 1; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > mx) {
      mx = a;
      best = i;
    }
  }
  return best;
}

}  // namespace

Subspace::Subspace(int ambient_dim, double tol) : ambient_(ambient_dim), tol_(tol) {
  if (ambient_dim < 0) throw input_error("Subspace: negative ambient dimension");
  if (tol <= 0.0) throw input_error("Subspace: tolerance must be positive");
  basis_.resize(0, ambient_);
}

Subspace Subspace::zero(int ambient_dim, double tol) { return Subspace(ambient_dim, tol); }

Subspace Subspace::full(int ambient_dim, double tol) {
  Subspace s(ambient_dim, tol);
  s.basis_ = Matrix::Identity(ambient_dim, ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  s.scale_ = 1.0;
  return s;
}

bool Subspace::insert(const Vector& v) {
  if (v.size() != ambient_)
    throw input_error("Subspace::insert: vector length does not match ambient dimension");
  if (ambient_ == 0) return false;
  scale_ = std::max(scale_, v.cwiseAbs().maxCoeff());
  if (scale_ == 0.0) return false;
  const double thr = tol_ * scale_;

  // Full RREF makes the elimination order-free: other rows vanish at each
  // pivot, so the coefficients are just v at the pivot columns (one GEMV).
  Vector w = v;
  if (dim() > 0) {
    Vector coef(dim());
    for (int k = 0; k < dim(); ++k) coef[k] = v[pivots_[k]];
    w.noalias() -= basis_.transpose() * coef;
  }
  const int j = argmax_abs(w);
  const double mx = std::abs(w[j]);
  if (mx <= thr) return false;
  if (mx <= 10.0 * thr) ambiguous_ = true;

  w /= w[j];
  for (int i = 0; i < ambient_; ++i)
    if (std::abs(w[i]) <= tol_) w[i] = 0.0;
  w[j] = 1.0;

  // Eliminate the new pivot column from existing rows, then insert the row
  // keeping pivots sorted.
  if (dim() > 0) {
    const Vector colj = basis_.col(j);
    basis_.noalias() -= colj * w.transpose();
  }
  int pos = 0;
  while (pos < dim() && pivots_[pos] < j) ++pos;
  Matrix nb(dim() + 1, ambient_);
  nb.topRows(pos) = basis_.topRows(pos);
  nb.row(pos) = w.transpose();
  nb.bottomRows(dim() - pos) = basis_.bottomRows(dim() - pos);
  basis_.swap(nb);
  pivots_.insert(pivots_.begin() + pos, j);
  return true;
}

double Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_)
    throw input_error("Subspace::residual: vector length does not match ambient dimension");
  if (ambient_ == 0) return 0.0;
  Vector w = v;
  if (dim() > 0) {
    Vector coef(dim());
    for (int k = 0; k < dim(); ++k) coef[k] = v[pivots_[k]];
    w.noalias() -= basis_.transpose() * coef;
  }
  return w.cwiseAbs().maxCoeff();
}

bool Subspace::contains(const Vector& v) const {
  const double r = residual(v);
  const double vmax = ambient_ == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  return r <= tol_ * std::max({1.0, scale_, vmax});
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_)
    throw input_error("Subspace::contains: ambient dimensions differ");
  for (int k = 0; k < other.dim(); ++k)
    if (!contains(Vector(other.basis().row(k).transpose()))) return false;
  return true;
}

bool Subspace::same_span(const Subspace& other) const {
  return dim() == other.dim() && contains(other) && other.contains(*this);
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_)
    throw input_error("Subspace::coordinates: vector length does not match ambient dimension");
  Vector c(dim());
  for (int k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  const double vmax = ambient_ == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (residual(v) > tol_ * std::max({1.0, scale_, vmax}))
    throw precondition_error("Subspace::coordinates: vector is not a member");
  return c;
}

Subspace span(const std::vector<Vector>& vectors, double tol) {
  if (vectors.empty()) return Subspace(0, tol);
  const int n = static_cast<int>(vectors[0].size());
  Matrix rows(static_cast<int>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw input_error("span: vectors of unequal length");
    rows.row(static_cast<int>(i)) = vectors[i].transpose();
  }
  return span(rows, tol);
}

Subspace span(const Matrix& rows, double tol) {
  const int n = static_cast<int>(rows.cols());
  Subspace out(n, tol);
  if (rows.rows() == 0 || n == 0) return out;

  Matrix m = rows;
  const double scale = m.cwiseAbs().maxCoeff();
  out.scale_ = scale;
  if (scale == 0.0) return out;
  const double thr = tol * scale;

  int r = 0;
  const int nrows = static_cast<int>(m.rows());
  for (int col = 0; col < n && r < nrows; ++col) {
    int imax = r;
    double vmax = std::abs(m(r, col));
    for (int i = r + 1; i < nrows; ++i) {
      const double a = std::abs(m(i, col));
      if (a > vmax) {
        vmax = a;
        imax = i;
      }
    }
    if (vmax <= thr) continue;
    if (vmax <= 10.0 * thr) out.ambiguous_ = true;
    m.row(imax).swap(m.row(r));
    m.row(r) /= m(r, col);
    for (int i = 0; i < nrows; ++i)
      if (i != r) m.row(i) -= m(i, col) * m.row(r);
    out.pivots_.push_back(col);
    ++r;
  }

  out.basis_ = m.topRows(r);
  const double snap = tol * std::max(1.0, r > 0 ? out.basis_.cwiseAbs().maxCoeff() : 1.0);
  for (int i = 0; i < r; ++i)
    for (int jj = 0; jj < n; ++jj)
      if (std::abs(out.basis_(i, jj)) <= snap) out.basis_(i, jj) = 0.0;
  for (int i = 0; i < r; ++i) out.basis_(i, out.pivots_[static_cast<std::size_t>(i)]) = 1.0;
  return out;
}

Subspace close_under_maps(const Subspace& start, const std::vector<LinearMap>& maps, double tol,
                          std::vector<int>* dims_trace) {
  Subspace cur(start.ambient_dim(), tol);
  std::vector<Vector> reps;
  for (int k = 0; k < start.dim(); ++k) {
    Vector v = start.basis().row(k).transpose();
    if (cur.insert(v)) reps.push_back(v);
  }
  if (dims_trace) {
    dims_trace->clear();
    dims_trace->push_back(cur.dim());
  }

  // reps spans cur at all times; a round maps every vector discovered so far
  // and stops once nothing new appears.
  std::size_t processed = 0;
  while (processed < reps.size()) {
    const std::size_t end = reps.size();
    for (const auto& f : maps) {
      for (std::size_t i = 0; i < end; ++i) {
        Vector w = f(reps[i]);
        if (cur.insert(w)) reps.push_back(w);
      }
    }
    processed = end;
    if (dims_trace) dims_trace->push_back(cur.dim());
    if (reps.size() == end) break;
  }
  return cur;
}

Subspace close_under_operators(const Subspace& start, const std::vector<LinearOperator>& ops,
                               double tol, std::vector<int>* dims_trace) {
  for (const auto& op : ops)
    if (op.rows() != start.ambient_dim() || op.cols() != start.ambient_dim())
      throw input_error("close_under_operators: operator shape does not match ambient dimension");
  std::vector<LinearMap> maps;
  maps.reserve(ops.size());
  for (const auto& op : ops) maps.emplace_back([&op](const Vector& v) -> Vector { return op * v; });
  return close_under_maps(start, maps, tol, dims_trace);
}

Matrix kernel_basis(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.cols());
  const Subspace row_space = span(m, tol);
  const auto& piv = row_space.pivots();
  std::vector<int> free_cols;
  free_cols.reserve(n);
  {
    std::size_t pi = 0;
    for (int c = 0; c < n; ++c) {
      if (pi < piv.size() && piv[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix out(static_cast<int>(free_cols.size()), n);
  out.setZero();
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const int f = free_cols[fi];
    out(static_cast<int>(fi), f) = 1.0;
    for (int k = 0; k < row_space.dim(); ++k)
      out(static_cast<int>(fi), piv[static_cast<std::size_t>(k)]) = -row_space.basis()(k, f);
  }
  return out;
}

}  // namespace homcart
