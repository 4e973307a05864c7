#pragma once

#include <random>
#include <string>
#include <vector>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/surface.hpp"

namespace hss {

/// A semisimple algebra together with its matrix-block decomposition data:
/// block b is an M_{n_b} summand and block_units[b] is its central
/// idempotent. Central invertible elements of prescribed multiplicative
/// order are root-of-unity combinations of the block units.
struct BlockAlgebra {
  std::string name;
  Algebra algebra;
  std::vector<int> blocks;
  std::vector<Vector> block_units;
};

BlockAlgebra fixture_ground_field(double tolerance = 1e-9);
BlockAlgebra fixture_cyclic_2(double tolerance = 1e-9);   // C[Z/2]
BlockAlgebra fixture_cyclic_3(double tolerance = 1e-9);   // C[Z/3]
BlockAlgebra fixture_matrix_2(double tolerance = 1e-9);   // M_2
BlockAlgebra fixture_m2_plus_c(double tolerance = 1e-9);  // M_2 (+) C

/// All five stock algebras above.
std::vector<BlockAlgebra> fixture_algebras(double tolerance = 1e-9);

/// Random direct sum of matrix blocks with total dimension <= max_dim.
BlockAlgebra random_block_algebra(std::mt19937_64& rng, int max_dim = 6,
                                  double tolerance = 1e-9);

/// sum_b exp(2 pi i exponents[b] / order) * block_unit[b]: a central
/// invertible element whose order divides `order`.
Vector central_image(const BlockAlgebra& ba, const std::vector<long>& exponents,
                     long order);

/// Action with one random root-of-unity phase per block and group factor.
GAction random_action(std::mt19937_64& rng, const FiniteAbelianGroup& group,
                      const BlockAlgebra& ba);

/// The enumerated T <= 4 closed-surface fixture set (spheres, tori,
/// self-gluings, a disconnected example), labels all identity.
std::vector<LabeledSurface> small_closed_surfaces(
    const FiniteAbelianGroup& group);

/// One random Pachner move (1-3 / 3-1 / 2-2) keeping T <= max_triangles;
/// returns the surface unchanged when no legal move of the drawn kind
/// exists.
LabeledSurface random_pachner_move(std::mt19937_64& rng,
                                   const LabeledSurface& surface,
                                   std::size_t max_triangles);

/// Random connected surface: random genus in [0,2], grown by random 1-3
/// moves and shuffled by 2-2 moves, with random labels.
LabeledSurface random_surface(std::mt19937_64& rng,
                              const FiniteAbelianGroup& group,
                              std::size_t max_triangles);

/// New random labels with the same per-component totals.
LabeledSurface redistribute_labels(std::mt19937_64& rng,
                                   const LabeledSurface& surface);

/// Representative abelian groups of order <= 12.
std::vector<FiniteAbelianGroup> small_groups();

}  // namespace hss
