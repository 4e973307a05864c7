#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <functional>
#include <vector>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/error.hpp"
#include "hss/group.hpp"

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

TEST_CASE("trivial action leaves constants untouched, exactly") {
  const Algebra a = Algebra::matrix_algebra(2);
  const FiniteAbelianGroup g = make_group({2, 2});
  const GAction act = GAction::trivial(g, a);
  CHECK(act.is_trivial());
  CHECK(act.twisted_constants(GroupElement{{1, 1}}) == a.structure());
  CHECK((act.image(GroupElement{{1, 0}}) - a.unit()).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("sign action on the group algebra of Z/2") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  // phi(generator) = the shift element s.
  const GAction act = GAction::make(g, a, {basis(2, 1)});
  CHECK(!act.is_trivial());

  // phi([1]) = s, phi([0]) = 1.
  CHECK((act.image(GroupElement{{1}}) - basis(2, 1)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK((act.image(GroupElement{{0}}) - a.unit()).cwiseAbs().maxCoeff() == 0.0);

  // Acting by [1] shifts basis elements.
  CHECK((act.act(GroupElement{{1}}, basis(2, 0)) - basis(2, 1))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  // Twisted constants C(g)_ij^k describe a s b: index shifts by one.
  const std::vector<cplx> tw = act.twisted_constants(GroupElement{{1}});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        const cplx want = ((i + j + 1) % 2 == k) ? cplx(1.0) : cplx(0.0);
        CHECK(tw[(i * 2 + j) * 2 + k] == want);
      }

  // Identity label reproduces the untouched constants exactly.
  CHECK(act.twisted_constants(GroupElement{{0}}) == a.structure());
  CHECK(act.twisted_constants(GroupElement{{2}}) == a.structure());
}

TEST_CASE("phase action on the ground field") {
  const Algebra a = Algebra::ground_field();
  const FiniteAbelianGroup g = make_group({4});
  Vector i_img(1);
  i_img(0) = cplx(0.0, 1.0);
  const GAction act = GAction::make(g, a, {i_img});
  for (long k = 0; k < 4; ++k) {
    const cplx want = std::pow(cplx(0.0, 1.0), static_cast<double>(k));
    CHECK(std::abs(act.image(GroupElement{{k}})(0) - want) <= 1e-12);
  }
}

TEST_CASE("minus identity is a legal order-two image on the matrix algebra") {
  const Algebra a = Algebra::matrix_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  const GAction act = GAction::make(g, a, {-a.unit()});
  CHECK((act.image(GroupElement{{1}}) + a.unit()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((act.image(GroupElement{{0}}) - a.unit()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("two-factor actions compose their generator images") {
  const Algebra a = Algebra::cyclic_group_algebra(3);
  const FiniteAbelianGroup g = make_group({2, 3});
  // Order 2: the identity works; order 3: the shift s (s^3 = 1).
  const GAction act = GAction::make(g, a, {a.unit(), basis(3, 1)});
  const Vector v = act.image(GroupElement{{1, 2}});
  // phi([1,2]) = 1 * s^2 = e_2.
  CHECK((v - basis(3, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("non-central images are rejected before invertibility") {
  const Algebra a = Algebra::matrix_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  Vector swap = Vector::Zero(4);
  swap(1) = 1.0;  // e01
  swap(2) = 1.0;  // e10: swap is invertible and of order 2, but not central
  CHECK(kind_of([&] { GAction::make(g, a, {swap}); }) == Err::NotCentral);
}

TEST_CASE("central non-invertible images are rejected") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  CHECK(kind_of([&] { GAction::make(g, a, {Vector::Zero(2)}); }) ==
        Err::NotInvertible);
}

TEST_CASE("images must have the generator's multiplicative order") {
  const Algebra a = Algebra::matrix_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  CHECK(kind_of([&] {
          GAction::make(g, a, {cplx(0.0, 1.0) * a.unit()});
        }) == Err::OrderViolation);
}

TEST_CASE("image count and length must match group and algebra") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  const FiniteAbelianGroup g = make_group({2, 2});
  CHECK(kind_of([&] { GAction::make(g, a, {a.unit()}); }) ==
        Err::DimensionMismatch);
  CHECK(kind_of([&] {
          GAction::make(g, a, {a.unit(), Vector::Ones(3)});
        }) == Err::DimensionMismatch);
}

TEST_CASE("twisting by an element of the wrong group is rejected") {
  const Algebra a = Algebra::cyclic_group_algebra(2);
  const FiniteAbelianGroup g = make_group({2});
  const GAction act = GAction::make(g, a, {basis(2, 1)});
  CHECK_THROWS_AS(act.image(GroupElement{{1, 0}}), Error);
}
