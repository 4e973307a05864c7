#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <functional>
#include <vector>

#include "hss/algebra.hpp"
#include "hss/error.hpp"

using namespace hss;

namespace {

Err kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return Err::BadFile;
}

Vector basis(std::size_t d, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("ground field has the one-dimensional trace form") {
  const Algebra a = Algebra::ground_field();
  CHECK(a.dim() == 1);
  CHECK(a.metric()(0, 0) == cplx(1.0));
  CHECK(a.inv_metric()(0, 0) == cplx(1.0));
  CHECK(a.unit()(0) == cplx(1.0));
  CHECK(a.form(a.unit(), a.unit()) == cplx(1.0));
}

TEST_CASE("group algebra of Z/2: metric, lowered constants, propagator") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  REQUIRE(a.dim() == 2);

  // g_ij = tr(L_i L_j) = 2 delta_{i+j=0 mod 2} -> diag(2, 2).
  CHECK(a.metric()(0, 0) == cplx(2.0));
  CHECK(a.metric()(1, 1) == cplx(2.0));
  CHECK(a.metric()(0, 1) == cplx(0.0));
  CHECK(a.inv_metric()(0, 0) == cplx(0.5));
  CHECK(a.inv_metric()(1, 1) == cplx(0.5));

  // Lowered constants are 2 exactly when i + j + k = 0 mod 2.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        const cplx want = ((i + j + k) % 2 == 0) ? cplx(2.0) : cplx(0.0);
        CHECK(a.lowered(i, j, k) == want);
      }

  // The shift element acts by the swap matrix.
  const Matrix ls = a.left_mult_matrix(basis(2, 1));
  CHECK(ls(0, 0) == cplx(0.0));
  CHECK(ls(0, 1) == cplx(1.0));
  CHECK(ls(1, 0) == cplx(1.0));
  CHECK(ls(1, 1) == cplx(0.0));
}

TEST_CASE("group algebra of Z/3 trace form pairs inverse elements") {
  const Algebra a = Algebra::cyclic_group_algebra(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const cplx want = ((i + j) % 3 == 0) ? cplx(3.0) : cplx(0.0);
      CHECK(a.metric()(static_cast<Eigen::Index>(i),
                       static_cast<Eigen::Index>(j)) == want);
    }
}

TEST_CASE("matrix algebra in the unit basis") {
  const Algebra a = Algebra::matrix_algebra(2);
  REQUIRE(a.dim() == 4);

  // e_ab e_cd = delta_bc e_ad; index of e_ab is 2a + b.
  const Vector e01 = basis(4, 1), e10 = basis(4, 2), e11 = basis(4, 3);
  CHECK((a.multiply(e01, e10) - basis(4, 0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.multiply(e10, e01) - e11).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.multiply(e01, e01).cwiseAbs().maxCoeff() == 0.0);

  // g(e_ab, e_cd) = n delta_bc delta_da with n = 2.
  CHECK(a.metric()(1, 2) == cplx(2.0));  // g(e01, e10)
  CHECK(a.metric()(0, 0) == cplx(2.0));  // g(e00, e00)
  CHECK(a.metric()(1, 1) == cplx(0.0));
  CHECK(a.metric()(0, 3) == cplx(0.0));

  // Unit is e00 + e11 and g(1,1) = n^2.
  CHECK(a.unit()(0) == cplx(1.0));
  CHECK(a.unit()(3) == cplx(1.0));
  CHECK(a.form(a.unit(), a.unit()) == cplx(4.0));
}

TEST_CASE("direct sum multiplies blockwise") {
  const Algebra a =
      Algebra::direct_sum(Algebra::matrix_algebra(2), Algebra::ground_field());
  REQUIRE(a.dim() == 5);
  // Cross-block products vanish.
  CHECK(a.multiply(basis(5, 0), basis(5, 4)).cwiseAbs().maxCoeff() == 0.0);
  // The summand units add up to the unit.
  Vector u = Vector::Zero(5);
  u(0) = 1.0;
  u(3) = 1.0;
  u(4) = 1.0;
  CHECK((a.unit() - u).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.form(a.unit(), a.unit()) == cplx(5.0));
}

TEST_CASE("center has one dimension per matrix block") {
  CHECK(Algebra::ground_field().center_basis().size() == 1);
  CHECK(Algebra::cyclic_group_algebra(2).center_basis().size() == 2);
  CHECK(Algebra::cyclic_group_algebra(3).center_basis().size() == 3);
  CHECK(Algebra::matrix_algebra(2).center_basis().size() == 1);
  CHECK(Algebra::direct_sum(Algebra::matrix_algebra(2),
                            Algebra::ground_field())
            .center_basis()
            .size() == 2);
}

TEST_CASE("lowered constants are cyclically invariant") {
  const Algebra a = Algebra::matrix_algebra(2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(a.lowered(i, j, k) - a.lowered(j, k, i)) <= 1e-12);
        CHECK(std::abs(a.lowered(i, j, k) - a.lowered(k, i, j)) <= 1e-12);
      }
}

TEST_CASE("invertibility of single elements") {
  const Algebra m2 = Algebra::matrix_algebra(2);
  CHECK(m2.is_invertible(m2.unit()));
  CHECK(!m2.is_invertible(basis(4, 0)));  // e00 is a projector
  const Algebra cz2 = Algebra::cyclic_group_algebra(2);
  CHECK(cz2.is_invertible(basis(2, 1)));  // the shift generator
  CHECK(!cz2.is_invertible(Vector::Zero(2)));
}

TEST_CASE("dual numbers are rejected for their singular trace form") {
  std::vector<cplx> structure, unit;
  Algebra::dual_numbers_inputs(structure, unit);
  CHECK(kind_of([&] { Algebra::make(2, structure, unit); }) ==
        Err::SingularMetric);
}

TEST_CASE("broken associativity and broken unit are distinguished") {
  const Algebra m2 = Algebra::matrix_algebra(2);
  const Vector& u = m2.unit();
  const std::vector<cplx> unit(u.data(), u.data() + u.size());

  std::vector<cplx> bad = m2.structure();
  bad[(1 * 4 + 2) * 4 + 0] = 0.7;  // e01 e10 = 0.7 e00
  CHECK(kind_of([&] { Algebra::make(4, bad, unit); }) == Err::NotAssociative);

  std::vector<cplx> partial(4, cplx(0.0));
  partial[0] = 1.0;  // e00 is not a two-sided unit
  CHECK(kind_of([&] { Algebra::make(4, m2.structure(), partial); }) ==
        Err::BadUnit);
}

TEST_CASE("structure array length must match the declared dimension") {
  std::vector<cplx> structure(7, cplx(0.0));
  std::vector<cplx> unit(2, cplx(0.0));
  CHECK(kind_of([&] { Algebra::make(2, structure, unit); }) ==
        Err::DimensionMismatch);
}

TEST_CASE("form is the symmetric trace pairing") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  const Vector x = basis(2, 0) + 2.0 * basis(2, 1);
  const Vector y = 3.0 * basis(2, 0) - basis(2, 1);
  // g(x, y) = 2*(x0 y0 + x1 y1) for C[Z/2].
  CHECK(a.form(x, y) == cplx(2.0 * (3.0 - 2.0)));
  CHECK(a.form(x, y) == a.form(y, x));
  // Frobenius compatibility g(xy, z) = g(x, yz) on a sample.
  const Vector z = basis(2, 1);
  CHECK(std::abs(a.form(a.multiply(x, y), z) - a.form(x, a.multiply(y, z))) <=
        1e-12);
}
