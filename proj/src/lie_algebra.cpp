#include "homcart/lie_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

#include "homcart/errors.hpp"

namespace homcart {

LieAlgebra::LieAlgebra(int dim, std::vector<StructureEntry> entries,
                       std::vector<std::string> labels)
    : dim_(dim), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (dim_ <= 0) throw input_error("LieAlgebra: dimension must be positive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != dim_)
    throw input_error("LieAlgebra: label count does not match dimension");
  std::set<std::array<int, 3>> seen;
  for (const auto& e : entries_) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
      throw input_error("LieAlgebra: structure index out of range");
    if (e.i >= e.j) throw input_error("LieAlgebra: structure entries require i < j");
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw input_error("LieAlgebra: duplicate structure entry");
  }
  ad_.assign(static_cast<std::size_t>(dim_), Matrix::Zero(dim_, dim_));
  for (const auto& e : entries_) {
    ad_[static_cast<std::size_t>(e.i)](e.k, e.j) += e.c;
    ad_[static_cast<std::size_t>(e.j)](e.k, e.i) -= e.c;
  }
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw input_error("bracket: vector length does not match algebra dimension");
  Vector out = Vector::Zero(dim_);
  for (const auto& e : entries_) out[e.k] += e.c * (x[e.i] * y[e.j] - x[e.j] * y[e.i]);
  return out;
}

const Matrix& LieAlgebra::ad_basis(int i) const {
  if (i < 0 || i >= dim_) throw input_error("ad_basis: index out of range");
  return ad_[static_cast<std::size_t>(i)];
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw input_error("ad: vector length does not match algebra dimension");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) out += x[i] * ad_[static_cast<std::size_t>(i)];
  return out;
}

JacobiReport LieAlgebra::check_jacobi(double tol) const {
  if (tol <= 0.0) throw input_error("check_jacobi: tolerance must be positive");
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const Matrix& adi = ad_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < dim_; ++j) {
      const Matrix& adj = ad_[static_cast<std::size_t>(j)];
      for (int k = j + 1; k < dim_; ++k) {
        const Matrix& adk = ad_[static_cast<std::size_t>(k)];
        // [e_i,[e_j,e_k]] + [e_k,[e_i,e_j]] + [e_j,[e_k,e_i]]
        const Vector sum = adi * adj.col(k) + adk * adi.col(j) - adj * adi.col(k);
        worst = std::max(worst, sum.cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst, worst < tol};
}

LieAlgebra algebra_from_matrices(const std::vector<Matrix>& basis,
                                 std::vector<std::string> labels, double drop_tol) {
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw input_error("algebra_from_matrices: empty basis");
  const Eigen::Index r = basis[0].rows(), c = basis[0].cols();
  if (r != c) throw input_error("algebra_from_matrices: basis matrices must be square");
  Matrix flat(r * c, n);
  for (int i = 0; i < n; ++i) {
    if (basis[static_cast<std::size_t>(i)].rows() != r ||
        basis[static_cast<std::size_t>(i)].cols() != c)
      throw input_error("algebra_from_matrices: basis matrices of unequal shape");
    flat.col(i) = Eigen::Map<const Vector>(basis[static_cast<std::size_t>(i)].data(), r * c);
  }
  const Eigen::ColPivHouseholderQR<Matrix> qr(flat);
  if (qr.rank() < n)
    throw input_error("algebra_from_matrices: basis matrices are linearly dependent");

  const double scale = std::max(1.0, flat.cwiseAbs().maxCoeff());
  std::vector<StructureEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix comm = basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)] -
                          basis[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(i)];
      const Vector rhs = Eigen::Map<const Vector>(comm.data(), r * c);
      const Vector coef = qr.solve(rhs);
      if ((flat * coef - rhs).cwiseAbs().maxCoeff() > 1e-9 * scale * scale)
        throw construction_error("algebra_from_matrices: commutators do not close on the basis");
      for (int k = 0; k < n; ++k)
        if (std::abs(coef[k]) > drop_tol) entries.push_back({i, j, k, coef[k]});
    }
  return LieAlgebra(n, std::move(entries), std::move(labels));
}

Subspace bracket_closure(const LieAlgebra& L, const Subspace& S, double tol) {
  if (S.ambient_dim() != L.dim())
    throw input_error("bracket_closure: subspace ambient dimension does not match algebra");
  Subspace cur(L.dim(), tol);
  std::vector<Vector> reps;
  for (int k = 0; k < S.dim(); ++k) {
    Vector v = S.basis().row(k).transpose();
    if (cur.insert(v)) reps.push_back(v);
  }
  std::size_t processed = 0;
  while (processed < reps.size()) {
    const std::size_t end = reps.size();
    for (std::size_t b = processed; b < end; ++b)
      for (std::size_t a = 0; a < b; ++a) {
        Vector w = L.bracket(reps[a], reps[b]);
        if (cur.insert(w)) reps.push_back(w);
      }
    processed = end;
  }
  return cur;
}

namespace {

bool is_bracket_closed(const LieAlgebra& L, const Subspace& S) {
  for (int a = 0; a < S.dim(); ++a)
    for (int b = a + 1; b < S.dim(); ++b) {
      const Vector w =
          L.bracket(Vector(S.basis().row(a).transpose()), Vector(S.basis().row(b).transpose()));
      if (!S.contains(w)) return false;
    }
  return true;
}

}  // namespace

std::array<int, 3> killing_signature(const LieAlgebra& L, const Subspace& S, double tol) {
  if (S.ambient_dim() != L.dim())
    throw input_error("killing_signature: subspace ambient dimension does not match algebra");
  if (!is_bracket_closed(L, S))
    throw precondition_error("killing_signature: subspace is not bracket-closed");
  const int m = S.dim();
  if (m == 0) return {0, 0, 0};

  // Structure constants of the restricted algebra in the S-basis.
  std::vector<Matrix> ad_sub(static_cast<std::size_t>(m), Matrix::Zero(m, m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const Vector w =
          L.bracket(Vector(S.basis().row(a).transpose()), Vector(S.basis().row(b).transpose()));
      ad_sub[static_cast<std::size_t>(a)].col(b) = S.coordinates(w);
    }

  Matrix killing(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const double v =
          (ad_sub[static_cast<std::size_t>(a)] * ad_sub[static_cast<std::size_t>(b)]).trace();
      killing(a, b) = v;
      killing(b, a) = v;
    }

  const Eigen::SelfAdjointEigenSolver<Matrix> es(killing);
  const double thr = tol * std::max(1.0, killing.cwiseAbs().maxCoeff());
  std::array<int, 3> sig = {0, 0, 0};
  for (int i = 0; i < m; ++i) {
    const double lambda = es.eigenvalues()[i];
    if (lambda > thr)
      ++sig[0];
    else if (lambda < -thr)
      ++sig[1];
    else
      ++sig[2];
  }
  return sig;
}

std::array<int, 3> killing_signature(const LieAlgebra& L, double tol) {
  return killing_signature(L, Subspace::full(L.dim(), tol), tol);
}

}  // namespace homcart
