#include "hss/action.hpp"

#include <sstream>

namespace hss {

GAction GAction::make(const FiniteAbelianGroup& group, const Algebra& algebra,
                      std::vector<Vector> generator_images) {
  if (generator_images.size() != group.rank()) {
    std::ostringstream os;
    os << "expected " << group.rank() << " generator images, got "
       << generator_images.size();
    fail(Err::DimensionMismatch, os.str());
  }
  const double tol = algebra.tolerance();
  const auto d = static_cast<Eigen::Index>(algebra.dim());
  for (std::size_t f = 0; f < generator_images.size(); ++f) {
    const Vector& v = generator_images[f];
    if (v.size() != d) {
      std::ostringstream os;
      os << "generator image " << f << " has length " << v.size()
         << ", algebra dim is " << d;
      fail(Err::DimensionMismatch, os.str());
    }
    Matrix comm = algebra.left_mult_matrix(v) - algebra.right_mult_matrix(v);
    double c = comm.cwiseAbs().maxCoeff();
    if (c > tol) {
      std::ostringstream os;
      os << "image of generator " << f << " is not central (max commutator "
         << "entry " << c << ")";
      fail(Err::NotCentral, os.str());
    }
    if (!algebra.is_invertible(v)) {
      std::ostringstream os;
      os << "image of generator " << f << " is not invertible";
      fail(Err::NotInvertible, os.str());
    }
    // phi(gen_f)^{order_f} must be the unit.
    Vector p = algebra.unit();
    for (long k = 0; k < group.orders()[f]; ++k) p = algebra.multiply(p, v);
    double res = (p - algebra.unit()).cwiseAbs().maxCoeff();
    if (res > tol) {
      std::ostringstream os;
      os << "image of generator " << f << " does not have order dividing "
         << group.orders()[f] << " (residual " << res << ")";
      fail(Err::OrderViolation, os.str());
    }
  }
  return GAction(group, algebra, std::move(generator_images));
}

GAction GAction::trivial(const FiniteAbelianGroup& group,
                         const Algebra& algebra) {
  std::vector<Vector> gens(group.rank(), algebra.unit());
  return GAction(group, algebra, std::move(gens));
}

Vector GAction::image(const GroupElement& g) const {
  GroupElement r = group_.reduce(g.residues);
  Vector out = algebra_.unit();
  for (std::size_t f = 0; f < gens_.size(); ++f)
    for (long k = 0; k < r.residues[f]; ++k)
      out = algebra_.multiply(out, gens_[f]);
  return out;
}

Vector GAction::act(const GroupElement& g, const Vector& a) const {
  return algebra_.multiply(image(g), a);
}

std::vector<cplx> GAction::twisted_constants(const GroupElement& g) const {
  GroupElement r = group_.reduce(g.residues);
  bool ident = true;
  for (long v : r.residues)
    if (v != 0) ident = false;
  if (ident || is_trivial()) return algebra_.structure();

  const std::size_t d = algebra_.dim();
  Matrix lphi = algebra_.left_mult_matrix(image(r));
  // C(g)_ij^k = sum_m C_ij^m (L_phi)_km: multiply-then-twist; centrality of
  // phi(g) makes the placement immaterial.
  std::vector<cplx> out(d * d * d, cplx(0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        cplx v = 0;
        for (std::size_t m = 0; m < d; ++m)
          v += algebra_.c(i, j, m) *
               lphi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m));
        out[(i * d + j) * d + k] = v;
      }
  return out;
}

bool GAction::is_trivial() const {
  for (const Vector& v : gens_)
    if ((v - algebra_.unit()).cwiseAbs().maxCoeff() > algebra_.tolerance())
      return false;
  return true;
}

}  // namespace hss
