#pragma once

#include <vector>

#include "hss/algebra.hpp"
#include "hss/group.hpp"

namespace hss {

/// Homomorphism from a finite abelian group into the group of central
/// invertible elements of an algebra, given by images of the cyclic-factor
/// generators. Validation checks each generator image is central, invertible,
/// and of the right multiplicative order (phi(g)^{n_f} = 1 for factor order
/// n_f); being a homomorphism on the whole group then follows because the
/// images commute.
class GAction {
 public:
  static GAction make(const FiniteAbelianGroup& group, const Algebra& algebra,
                      std::vector<Vector> generator_images);

  /// Trivial action: every generator maps to the unit.
  static GAction trivial(const FiniteAbelianGroup& group,
                         const Algebra& algebra);

  const FiniteAbelianGroup& group() const { return group_; }
  const Algebra& algebra() const { return algebra_; }
  const std::vector<Vector>& generator_images() const { return gens_; }

  /// phi(g) as an element of the algebra.
  Vector image(const GroupElement& g) const;

  /// phi(g) * a.
  Vector act(const GroupElement& g, const Vector& a) const;

  /// Twisted structure constants C(g)_ij^k of the product
  /// (a, b) -> a * phi(g) * b, flattened like Algebra::structure().
  /// For the identity element this returns the original constants exactly.
  std::vector<cplx> twisted_constants(const GroupElement& g) const;

  bool is_trivial() const;

 private:
  GAction(FiniteAbelianGroup group, Algebra algebra, std::vector<Vector> gens)
      : group_(std::move(group)),
        algebra_(std::move(algebra)),
        gens_(std::move(gens)) {}

  FiniteAbelianGroup group_;
  Algebra algebra_;  // owned copy; the action stays valid on its own
  std::vector<Vector> gens_;
};

}  // namespace hss
