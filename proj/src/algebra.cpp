#include "hss/algebra.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace hss {

namespace {

std::string cplx_str(const cplx& z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

Algebra Algebra::make(std::size_t dim, std::vector<cplx> structure,
                      std::vector<cplx> unit, double tolerance) {
  if (dim == 0 || structure.size() != dim * dim * dim ||
      unit.size() != dim) {
    std::ostringstream os;
    os << "algebra data sizes inconsistent: dim=" << dim << ", structure has "
       << structure.size() << " entries (want " << dim * dim * dim
       << "), unit has " << unit.size();
    fail(Err::DimensionMismatch, os.str());
  }

  Algebra alg;
  alg.dim_ = dim;
  alg.tol_ = tolerance;
  alg.structure_ = std::move(structure);
  alg.unit_ = Vector(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    alg.unit_[static_cast<Eigen::Index>(i)] = unit[i];

  const std::size_t d = dim;
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) {
    return alg.structure_[(i * d + j) * d + k];
  };

  // Associativity: sum_m C_ij^m C_mk^l == sum_m C_jk^m C_im^l for all i,j,k,l.
  double worst = 0.0;
  std::size_t wi = 0, wj = 0, wk = 0, wl = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          cplx lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += C(i, j, m) * C(m, k, l);
            rhs += C(j, k, m) * C(i, m, l);
          }
          double res = std::abs(lhs - rhs);
          if (res > worst) {
            worst = res;
            wi = i; wj = j; wk = k; wl = l;
          }
        }
  if (worst > tolerance) {
    std::ostringstream os;
    os << "associativity fails at (i,j,k,l)=(" << wi << "," << wj << ","
       << wk << "," << wl << ") with residual " << worst;
    fail(Err::NotAssociative, os.str());
  }

  // Unit law: u e_j = e_j u = e_j for every basis vector.
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      cplx left = 0, right = 0;
      for (std::size_t i = 0; i < d; ++i) {
        left += alg.unit_[static_cast<Eigen::Index>(i)] * C(i, j, k);
        right += alg.unit_[static_cast<Eigen::Index>(i)] * C(j, i, k);
      }
      cplx want = (j == k) ? cplx(1.0) : cplx(0.0);
      if (std::abs(left - want) > tolerance ||
          std::abs(right - want) > tolerance) {
        std::ostringstream os;
        os << "unit law fails on basis vector " << j << ": (u e_" << j
           << ")_" << k << "=" << cplx_str(left) << ", (e_" << j << " u)_"
           << k << "=" << cplx_str(right) << ", want "
           << cplx_str(want);
        fail(Err::BadUnit, os.str());
      }
    }

  // Trace metric g_ij = sum_{k,l} C_ik^l C_jl^k = tr(L_i L_j).
  alg.metric_ = Matrix::Zero(static_cast<Eigen::Index>(d),
                             static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx g = 0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          g += C(i, k, l) * C(j, l, k);
      alg.metric_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g;
    }

  // Invert via SVD; rank deficiency at tolerance * sigma_max means the
  // algebra is not semisimple and the state sum is undefined.
  Eigen::JacobiSVD<Matrix> svd(alg.metric_,
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  if (smax <= 0.0 || sv(sv.size() - 1) <= tolerance * smax) {
    std::ostringstream os;
    os << "trace metric is singular (singular values ";
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      os << (i ? ", " : "") << sv(i);
    os << "); algebra is not semisimple";
    fail(Err::SingularMetric, os.str());
  }
  Vector inv_sv(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    inv_sv(i) = cplx(1.0 / sv(i));
  alg.inv_metric_ =
      svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();

  // Lowered constants C_ijk = sum_m C_ij^m g_mk, cyclic for the trace form.
  alg.lowered_.assign(d * d * d, cplx(0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        cplx v = 0;
        for (std::size_t m = 0; m < d; ++m)
          v += C(i, j, m) * alg.metric_(static_cast<Eigen::Index>(m),
                                        static_cast<Eigen::Index>(k));
        alg.lowered_[(i * d + j) * d + k] = v;
      }
  double cyc = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        cyc = std::max(cyc, std::abs(alg.lowered_[(i * d + j) * d + k] -
                                     alg.lowered_[(j * d + k) * d + i]));
  if (cyc > tolerance) {
    std::ostringstream os;
    os << "lowered structure constants are not cyclic (max deviation " << cyc
       << "); trace form is not symmetric-invariant";
    fail(Err::NotAssociative, os.str());
  }

  return alg;
}

cplx Algebra::form(const Vector& a, const Vector& b) const {
  return (a.transpose() * metric_ * b)(0);
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  if (a.size() != d || b.size() != d)
    fail(Err::DimensionMismatch, "vector length does not match algebra dim");
  Vector out = Vector::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (a(i) == cplx(0.0)) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (b(j) == cplx(0.0)) continue;
      cplx ab = a(i) * b(j);
      for (Eigen::Index k = 0; k < d; ++k)
        out(k) += ab * c(static_cast<std::size_t>(i),
                         static_cast<std::size_t>(j),
                         static_cast<std::size_t>(k));
    }
  }
  return out;
}

Matrix Algebra::left_mult_matrix(const Vector& a) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  if (a.size() != d)
    fail(Err::DimensionMismatch, "vector length does not match algebra dim");
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k)
        m(k, j) += a(i) * c(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j),
                            static_cast<std::size_t>(k));
  return m;
}

Matrix Algebra::right_mult_matrix(const Vector& a) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  if (a.size() != d)
    fail(Err::DimensionMismatch, "vector length does not match algebra dim");
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k)
        m(k, j) += a(i) * c(static_cast<std::size_t>(j),
                            static_cast<std::size_t>(i),
                            static_cast<std::size_t>(k));
  return m;
}

std::vector<Vector> Algebra::center_basis() const {
  const auto d = static_cast<Eigen::Index>(dim_);
  // Stack the d commutator conditions [e_j, x] = 0 into one (d*d) x d system.
  Matrix sys(d * d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector ej = Vector::Zero(d);
    ej(j) = 1.0;
    sys.block(j * d, 0, d, d) = left_mult_matrix(ej) - right_mult_matrix(ej);
  }
  Eigen::JacobiSVD<Matrix> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol_ * smax) ++rank;
  std::vector<Vector> basis;
  for (Eigen::Index i = rank; i < d; ++i)
    basis.push_back(svd.matrixV().col(i));
  return basis;
}

bool Algebra::is_invertible(const Vector& a) const {
  Matrix la = left_mult_matrix(a);
  Eigen::JacobiSVD<Matrix> svd(la);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  return smax > 0.0 && sv(sv.size() - 1) > tol_ * smax;
}

Algebra Algebra::ground_field(double tolerance) {
  return make(1, {cplx(1.0)}, {cplx(1.0)}, tolerance);
}

Algebra Algebra::cyclic_group_algebra(int n, double tolerance) {
  if (n <= 0) fail(Err::NonPositiveOrder, "cyclic group algebra needs n >= 1");
  const auto d = static_cast<std::size_t>(n);
  std::vector<cplx> structure(d * d * d, cplx(0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      structure[(i * d + j) * d + (i + j) % d] = 1.0;
  std::vector<cplx> unit(d, cplx(0.0));
  unit[0] = 1.0;
  return make(d, std::move(structure), std::move(unit), tolerance);
}

Algebra Algebra::matrix_algebra(int n, double tolerance) {
  if (n <= 0) fail(Err::NonPositiveOrder, "matrix algebra needs n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t d = nn * nn;
  // e_{ab} e_{cd} = delta_{bc} e_{ad}, basis index of e_{ab} is a*n+b.
  std::vector<cplx> structure(d * d * d, cplx(0.0));
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b)
      for (std::size_t e = 0; e < nn; ++e) {
        std::size_t i = a * nn + b;
        std::size_t j = b * nn + e;
        std::size_t k = a * nn + e;
        structure[(i * d + j) * d + k] = 1.0;
      }
  std::vector<cplx> unit(d, cplx(0.0));
  for (std::size_t a = 0; a < nn; ++a) unit[a * nn + a] = 1.0;
  return make(d, std::move(structure), std::move(unit), tolerance);
}

void Algebra::dual_numbers_inputs(std::vector<cplx>& structure,
                                  std::vector<cplx>& unit) {
  // C[x]/(x^2) in basis {1, x}: 1*1=1, 1*x=x*1=x, x*x=0.
  structure.assign(8, cplx(0.0));
  structure[(0 * 2 + 0) * 2 + 0] = 1.0;
  structure[(0 * 2 + 1) * 2 + 1] = 1.0;
  structure[(1 * 2 + 0) * 2 + 1] = 1.0;
  unit = {cplx(1.0), cplx(0.0)};
}

Algebra Algebra::direct_sum(const Algebra& a, const Algebra& b,
                            double tolerance) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<cplx> structure(d * d * d, cplx(0.0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        structure[(i * d + j) * d + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        structure[((da + i) * d + (da + j)) * d + (da + k)] = b.c(i, j, k);
  std::vector<cplx> unit(d, cplx(0.0));
  for (std::size_t i = 0; i < da; ++i)
    unit[i] = a.unit()[static_cast<Eigen::Index>(i)];
  for (std::size_t i = 0; i < db; ++i)
    unit[da + i] = b.unit()[static_cast<Eigen::Index>(i)];
  return make(d, std::move(structure), std::move(unit), tolerance);
}

}  // namespace hss
