#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "hss/error.hpp"
#include "hss/group.hpp"

namespace hss {

/// Edge slot e of triangle t: the directed edge from corner e to corner
/// (e+1 mod 3) in the triangle's boundary orientation.
struct Slot {
  int tri = 0;
  int edge = 0;
  auto operator<=>(const Slot&) const = default;
};

/// An identification of two edge slots. Orientability requires the directed
/// edges to be identified head-to-tail (direction reversing): corner a.edge
/// of a.tri meets corner (b.edge+1)%3 of b.tri, and corner (a.edge+1)%3 of
/// a.tri meets corner b.edge of b.tri. head_to_tail=false encodes the
/// direction-preserving identification, which construction rejects.
struct Gluing {
  Slot a;
  Slot b;
  bool head_to_tail = true;
  bool operator==(const Gluing&) const = default;
};

/// A corner of a triangle (0, 1, or 2); corner classes under the gluing
/// identifications are the vertices of the surface.
struct Corner {
  int tri = 0;
  int corner = 0;
  auto operator<=>(const Corner&) const = default;
};

/// Closed oriented triangulated surface with a group label per triangle.
/// Immutable; every move returns a new surface.
class LabeledSurface {
 public:
  /// Validates that every slot appears in exactly one gluing, that no slot
  /// is glued to itself, and that all gluings are head-to-tail. Labels may
  /// be shorter than num_triangles; missing labels default to the identity.
  static LabeledSurface make(const FiniteAbelianGroup& group,
                             std::size_t num_triangles,
                             std::vector<GroupElement> labels,
                             std::vector<Gluing> gluings);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t num_triangles() const { return labels_.size(); }
  const std::vector<GroupElement>& labels() const { return labels_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  /// The slot glued to the given one.
  Slot partner(Slot s) const;

  /// Corner classes under the gluing identifications (the vertices), each
  /// sorted, the list sorted by first member.
  std::vector<std::vector<Corner>> corner_classes() const;

  /// chi = V - E + F with V = #corner classes, E = 3T/2, F = T.
  int euler_characteristic() const;

  /// Triangle index sets of the connected components, ordered by smallest
  /// member.
  std::vector<std::vector<int>> components() const;

  /// (2 - chi)/2 for a connected surface.
  int genus() const;

  /// Sum of the labels in each connected component (component order as in
  /// components()).
  std::vector<GroupElement> total_class() const;

  /// Moves: each returns a new surface; chi and per-component total class
  /// are preserved.
  LabeledSurface homotopy_shift(int from, int to) const;
  LabeledSurface pachner_22(std::size_t gluing_index) const;
  LabeledSurface pachner_13(int triangle) const;
  LabeledSurface pachner_31(Corner vertex) const;

  LabeledSurface with_labels(std::vector<GroupElement> labels) const;

  /// Corners eligible for pachner_31: classes of degree exactly 3 with
  /// pairwise distinct triangles. Returns one representative per class.
  std::vector<Corner> collapsible_corners() const;

 private:
  LabeledSurface(FiniteAbelianGroup group, std::vector<GroupElement> labels,
                 std::vector<Gluing> gluings)
      : group_(std::move(group)),
        labels_(std::move(labels)),
        gluings_(std::move(gluings)) {}

  FiniteAbelianGroup group_;
  std::vector<GroupElement> labels_;
  std::vector<Gluing> gluings_;
};

/// One vertex per triangle carrying its label; flags in slot order 0,1,2
/// (the cyclic order induced by the boundary orientation); one edge per
/// gluing joining two flags.
struct DualGraph {
  std::size_t num_vertices = 0;
  std::vector<GroupElement> labels;
  std::vector<std::pair<Slot, Slot>> edges;

  std::size_t num_flags() const { return 3 * num_vertices; }
};

DualGraph dual_graph(const LabeledSurface& surface);

/// Standard small surfaces.
LabeledSurface make_sphere(const FiniteAbelianGroup& group);
LabeledSurface make_torus(const FiniteAbelianGroup& group);

/// Genus-h surface with the given total class on triangle 0 (identity
/// elsewhere): h = 0 is the 2-triangle sphere, h >= 1 the fan-triangulated
/// 4h-gon with the a b a' b' edge pairing (T = 4h - 2).
LabeledSurface make_genus_surface(int h, const FiniteAbelianGroup& group,
                                  const GroupElement& total);

/// Disjoint union, relabeling the second surface's triangles after the
/// first's.
LabeledSurface disjoint_union(const LabeledSurface& a,
                              const LabeledSurface& b);

}  // namespace hss
