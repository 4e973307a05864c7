#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "hss/error.hpp"

namespace hss {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Finite-dimensional associative algebra over C given by structure
/// constants C_ij^k (e_i e_j = sum_k C_ij^k e_k) and a unit vector.
///
/// Construction validates associativity and the unit law, then derives the
/// trace metric g_ij = sum_{k,l} C_ik^l C_jl^k and its inverse. A singular
/// metric (non-semisimple algebra) is rejected. Lowered constants
/// C_ijk = sum_m C_ij^m g_mk are precomputed; for the trace metric they are
/// invariant under cyclic index permutations, which is checked as well.
class Algebra {
 public:
  /// structure is the d*d*d array C_ij^k flattened as [(i*d + j)*d + k].
  static Algebra make(std::size_t dim, std::vector<cplx> structure,
                      std::vector<cplx> unit, double tolerance = 1e-9);

  std::size_t dim() const { return dim_; }
  double tolerance() const { return tol_; }

  cplx c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  cplx lowered(std::size_t i, std::size_t j, std::size_t k) const {
    return lowered_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<cplx>& structure() const { return structure_; }
  const std::vector<cplx>& lowered_constants() const { return lowered_; }

  const Vector& unit() const { return unit_; }
  const Matrix& metric() const { return metric_; }
  const Matrix& inv_metric() const { return inv_metric_; }

  /// Bilinear form g(a, b) = a^T g b (no conjugation; the form is bilinear).
  cplx form(const Vector& a, const Vector& b) const;

  Vector multiply(const Vector& a, const Vector& b) const;

  /// L_a with (L_a)_kj = sum_i a_i C_ij^k, so L_a * b = multiply(a, b).
  Matrix left_mult_matrix(const Vector& a) const;

  /// R_a with R_a * b = multiply(b, a).
  Matrix right_mult_matrix(const Vector& a) const;

  /// Basis of the center, from the nullspace of the stacked commutator
  /// system { L_{e_j} x - R_{e_j} x = 0 }, singular values thresholded at
  /// tolerance * sigma_max.
  std::vector<Vector> center_basis() const;

  /// True if left multiplication by a is invertible at the tolerance.
  bool is_invertible(const Vector& a) const;

  // Stock algebras used across tests and the CLI.
  static Algebra ground_field(double tolerance = 1e-9);
  /// Group algebra C[Z/n] in the basis of group elements.
  static Algebra cyclic_group_algebra(int n, double tolerance = 1e-9);
  /// Full matrix algebra M_n in the matrix-unit basis e_{ab} (index a*n+b).
  static Algebra matrix_algebra(int n, double tolerance = 1e-9);
  /// Dual numbers C[x]/(x^2): not semisimple, make() rejects it. Provided
  /// as raw inputs for tests of the SingularMetric path.
  static void dual_numbers_inputs(std::vector<cplx>& structure,
                                  std::vector<cplx>& unit);
  static Algebra direct_sum(const Algebra& a, const Algebra& b,
                            double tolerance = 1e-9);

 private:
  Algebra() = default;

  std::size_t dim_ = 0;
  double tol_ = 1e-9;
  std::vector<cplx> structure_;
  std::vector<cplx> lowered_;
  Vector unit_;
  Matrix metric_;
  Matrix inv_metric_;
};

inline Algebra make_algebra(std::size_t dim, std::vector<cplx> structure,
                            std::vector<cplx> unit, double tolerance = 1e-9) {
  return Algebra::make(dim, std::move(structure), std::move(unit), tolerance);
}

}  // namespace hss
