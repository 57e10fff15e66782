// Validation of connection data, the curvature form and Wang holonomy on
// small hand-checkable data. The so(3)/so(2) datum with abelian structure
// algebra R is evaluated against the formulas by hand:
//   rho(e1,e2) = [alpha e1, alpha e2] - alpha([e1,e2]) = 0 - alpha(e3) = -1.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcart/connection.hpp"
#include "homcart/errors.hpp"
#include "test_util.hpp"

using namespace homcart;
using namespace homcart::testutil;

namespace {

// h = so(3), k = span{e3}, g = p = R, alpha = (0 0 1).
ConnectionData toy_principal() {
  ConnectionData c;
  c.kind = ConnectionKind::Principal;
  c.h = make_so3();
  c.g = make_abelian(1);
  Subspace k(3, 1e-9);
  k.insert(Vector::Unit(3, 2));
  c.k_basis = k;
  c.p_basis = Subspace::full(1, 1e-9);
  c.alpha = Matrix::Zero(1, 3);
  c.alpha(0, 2) = 1.0;
  return c;
}

}  // namespace

TEST_CASE("toy so(3)/so(2) datum validates and reproduces the hand values") {
  const ConnectionData c = toy_principal();
  const ValidationReport rep = validate(c);
  CHECK(rep.ok);
  CHECK(rep.c1_residual == 0.0);
  CHECK(rep.c2_residual == 0.0);
  CHECK_FALSE(rep.c3_checked);

  const CurvatureForm f = curvature(c);
  REQUIRE(f.size() == 2);
  CHECK(f.value(0, 1)[0] == doctest::Approx(-1.0));
  CHECK(f.value(1, 0)[0] == doctest::Approx(1.0));
  CHECK(f.value(0, 0)[0] == 0.0);

  CHECK(curvature_image(f).dim() == 1);
  CHECK(wang_holonomy(c).dim() == 1);

  const HolonomyReport hol = holonomy_report(c);
  CHECK(hol.dim == 1);
  CHECK(hol.is_subalgebra);
  CHECK(hol.equals_g);
  CHECK(hol.killing_signature == std::array<int, 3>{0, 0, 1});
}

TEST_CASE("(C.1) violation: alpha sends k outside p") {
  ConnectionData c;
  c.kind = ConnectionKind::Principal;
  c.h = make_so3();
  c.g = make_abelian(2);
  Subspace k(3, 1e-9);
  k.insert(Vector::Unit(3, 2));
  c.k_basis = k;
  Subspace p(2, 1e-9);
  p.insert(Vector::Unit(2, 0));
  c.p_basis = p;
  c.alpha = Matrix::Zero(2, 3);
  c.alpha(1, 2) = 1.0;  // alpha(e3) = (0,1), not in p
  const ValidationReport rep = validate(c);
  CHECK_FALSE(rep.c1_ok);
  CHECK(rep.c1_residual == doctest::Approx(1.0));
  CHECK(rep.c2_ok);
  CHECK_FALSE(rep.ok);
  CHECK_THROWS_AS(curvature(c), precondition_error);
}

TEST_CASE("(C.2) violation: alpha not k-equivariant") {
  ConnectionData c;
  c.kind = ConnectionKind::Principal;
  c.h = make_so3();
  c.g = make_so3();
  Subspace k(3, 1e-9);
  k.insert(Vector::Unit(3, 2));
  c.k_basis = k;
  c.p_basis = Subspace::full(3, 1e-9);
  c.alpha = Matrix::Identity(3, 3);
  c.alpha(0, 2) = 1.0;  // alpha(e3) = e3 + e1 breaks [alpha e3, alpha e2]
  const ValidationReport rep = validate(c);
  CHECK(rep.c1_ok);
  CHECK_FALSE(rep.c2_ok);
}

TEST_CASE("(C.3) violation: zero map on the complement") {
  ConnectionData c;
  c.kind = ConnectionKind::Cartan;
  c.h = make_so3();
  c.g = make_abelian(2);
  Subspace k(3, 1e-9);
  k.insert(Vector::Unit(3, 2));
  c.k_basis = k;
  c.p_basis = Subspace::zero(2, 1e-9);
  c.alpha = Matrix::Zero(2, 3);
  const ValidationReport rep = validate(c);
  CHECK(rep.c1_ok);
  CHECK(rep.c2_ok);
  CHECK(rep.c3_checked);
  CHECK_FALSE(rep.c3_ok);
  CHECK(rep.c3_rank == 0);
  CHECK(rep.c3_expected == 2);  // rank deficit dim h - dim k
}

TEST_CASE("a homomorphism has vanishing curvature") {
  ConnectionData c;
  c.kind = ConnectionKind::Principal;
  c.h = make_so3();
  c.g = make_so3();
  c.k_basis = Subspace::zero(3, 1e-9);
  c.p_basis = Subspace::full(3, 1e-9);
  c.alpha = Matrix::Identity(3, 3);
  CHECK(validate(c).ok);
  const CurvatureForm f = curvature(c);
  CHECK(f.size() == 3);
  CHECK(f.max_abs() == 0.0);
  CHECK(wang_holonomy(c).dim() == 0);
}

TEST_CASE("degenerate k = h: empty curvature, zero holonomy") {
  ConnectionData c;
  c.kind = ConnectionKind::Principal;
  c.h = make_so3();
  c.g = make_so3();
  c.k_basis = Subspace::full(3, 1e-9);
  c.p_basis = Subspace::full(3, 1e-9);
  c.alpha = Matrix::Identity(3, 3);
  CHECK(validate(c).ok);
  const CurvatureForm f = curvature(c);
  CHECK(f.size() == 0);
  CHECK(f.values.empty());
  CHECK(wang_holonomy(c).dim() == 0);
}

TEST_CASE("curvature over a custom complement: image is unchanged") {
  const ConnectionData c = toy_principal();
  Matrix comp(2, 3);
  comp << 1.0, 0.0, 0.5,   // e1 shifted along k
      1.0, 1.0, 0.0;       // e1 + e2
  const CurvatureForm f = curvature(c, comp);
  const CurvatureForm fdef = curvature(c);
  CHECK(curvature_image(f).same_span(curvature_image(fdef)));

  Matrix bad(2, 3);
  bad << 1.0, 0.0, 0.0, 0.0, 0.0, 1.0;  // does not complete k = span{e3}
  CHECK_THROWS_AS(curvature(c, bad), input_error);
}

TEST_CASE("wang iteration dims are strictly increasing then stable") {
  const ConnectionData c = toy_principal();
  const CurvatureForm f = curvature(c);
  Subspace rhat = curvature_image(f);
  std::vector<LinearOperator> ops;
  for (int j = 0; j < 3; ++j) ops.push_back(c.g.ad(Vector(c.alpha.col(j))));
  std::vector<int> trace;
  const Subspace hol = close_under_operators(rhat, ops, 1e-9, &trace);
  REQUIRE(trace.size() >= 2);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    CHECK(trace[i] <= trace[i + 1]);
    if (i + 2 < trace.size()) CHECK(trace[i] < trace[i + 1]);
  }
  CHECK(trace.back() <= c.g.dim());
  CHECK(hol.dim() == trace.back());
}

TEST_CASE("input errors for inconsistent shapes") {
  ConnectionData c = toy_principal();
  c.alpha = Matrix::Zero(2, 3);
  CHECK_THROWS_AS(validate(c), input_error);
}
