#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/surface.hpp"

namespace hss {

/// |a - b| <= tol * (1 + max(|a|,|b|)): absolute near zero, relative when
/// large.
bool nearly_equal(cplx a, cplx b, double tol);

/// Lowered twisted constants C(g)_ijk = sum_m C(g)_ij^m g_mk, flat with
/// index (i*d + j)*d + k.
std::vector<cplx> lowered_twisted_constants(const Algebra& alg,
                                            const GAction& action,
                                            const GroupElement& g);

/// Rank-3 tensor (flat, slot 0 most significant) of lowered twisted
/// constants C(g)_ijk for the triangle's label g.
std::vector<cplx> vertex_tensor(int triangle, const LabeledSurface& surface,
                                const Algebra& alg, const GAction& action);

/// The propagator g^{kk'} assigned to every dual edge.
Matrix edge_propagator(const Algebra& alg);

struct PlanStep {
  std::size_t a = 0;  // surviving cluster (smaller representative)
  std::size_t b = 0;  // cluster merged into a
  int rank_a = 0;     // open indices of a before the merge
  int rank_b = 0;
  int shared = 0;     // dual edges contracted by this merge
};

struct ContractionPlan {
  std::vector<PlanStep> steps;
  /// Work estimate: sum over steps of d^(rank_a + rank_b - shared).
  double cost(std::size_t d) const;
  /// Largest open rank any merged cluster attains.
  int max_rank() const;
};

/// Greedy deterministic plan over an arbitrary multigraph: repeatedly merge
/// the connected cluster pair minimizing the merged open-index count
/// rank_a + rank_b - 2*shared, ties broken by lowest cluster indices.
/// Self-loop edges must already be absorbed into the ranks.
ContractionPlan plan_contraction(
    std::size_t num_vertices, std::vector<int> ranks,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Plan for a dual graph: vertex rank 3 minus two per self-loop gluing.
ContractionPlan plan_contraction(const DualGraph& graph);

struct EvalOptions {
  /// PlanOverflow when an intermediate tensor would exceed this many
  /// entries.
  double size_cap = 1e8;
};

/// Contract the labeled dual-graph tensor network along the greedy plan.
/// The empty surface gives 1; disconnected surfaces give the product of
/// their components.
cplx evaluate(const LabeledSurface& surface, const Algebra& alg,
              const GAction& action, const EvalOptions& opts = {});

struct OracleOptions {
  /// TooLarge when d^(3T) colorings exceed this guard.
  double guard = 1e7;
};

/// Literal state sum: for every assignment of a basis index to each of the
/// 3T flags, multiply all vertex entries and edge propagator entries, and
/// add everything up. Independent of the planner path.
cplx evaluate_bruteforce(const LabeledSurface& surface, const Algebra& alg,
                         const GAction& action, const OracleOptions& opts = {});

}  // namespace hss
