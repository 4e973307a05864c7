#include "hss/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hss {

namespace {

std::string slot_str(Slot s) {
  std::ostringstream os;
  os << "(" << s.tri << "," << s.edge << ")";
  return os.str();
}

std::string gluing_str(const Gluing& g) {
  return slot_str(g.a) + "~" + slot_str(g.b);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LabeledSurface LabeledSurface::make(const FiniteAbelianGroup& group,
                                    std::size_t num_triangles,
                                    std::vector<GroupElement> labels,
                                    std::vector<Gluing> gluings) {
  if (labels.size() > num_triangles) {
    std::ostringstream os;
    os << labels.size() << " labels for " << num_triangles << " triangles";
    fail(Err::DimensionMismatch, os.str());
  }
  for (GroupElement& l : labels) l = group.reduce(l.residues);
  while (labels.size() < num_triangles) labels.push_back(group.identity());

  auto check_slot = [&](Slot s) {
    if (s.tri < 0 || static_cast<std::size_t>(s.tri) >= num_triangles ||
        s.edge < 0 || s.edge > 2) {
      fail(Err::DimensionMismatch,
           "slot " + slot_str(s) + " out of range for " +
               std::to_string(num_triangles) + " triangles");
    }
  };

  std::vector<int> seen(3 * num_triangles, 0);
  for (const Gluing& g : gluings) {
    check_slot(g.a);
    check_slot(g.b);
    if (g.a == g.b)
      fail(Err::DuplicateSlot, "slot " + slot_str(g.a) + " glued to itself");
    if (!g.head_to_tail)
      fail(Err::NonOrientableGluing,
           "gluing " + gluing_str(g) +
               " preserves edge direction; orientable surfaces require "
               "head-to-tail identifications");
    for (Slot s : {g.a, g.b}) {
      int& count = seen[static_cast<std::size_t>(3 * s.tri + s.edge)];
      if (++count > 1)
        fail(Err::DuplicateSlot,
             "slot " + slot_str(s) + " appears in more than one gluing");
    }
  }
  for (std::size_t t = 0; t < num_triangles; ++t)
    for (int e = 0; e < 3; ++e)
      if (!seen[3 * t + static_cast<std::size_t>(e)])
        fail(Err::OpenSlot, "slot (" + std::to_string(t) + "," +
                                std::to_string(e) + ") is not glued");

  return LabeledSurface(group, std::move(labels), std::move(gluings));
}

Slot LabeledSurface::partner(Slot s) const {
  for (const Gluing& g : gluings_) {
    if (g.a == s) return g.b;
    if (g.b == s) return g.a;
  }
  fail(Err::OpenSlot, "slot " + slot_str(s) + " is not glued");
}

std::vector<std::vector<Corner>> LabeledSurface::corner_classes() const {
  const std::size_t n = 3 * num_triangles();
  UnionFind uf(n);
  auto id = [](Slot s, int corner_offset) {
    return static_cast<std::size_t>(3 * s.tri + (s.edge + corner_offset) % 3);
  };
  for (const Gluing& g : gluings_) {
    // Tail of a meets head of b; head of a meets tail of b.
    uf.unite(id(g.a, 0), id(g.b, 1));
    uf.unite(id(g.a, 1), id(g.b, 0));
  }
  std::map<std::size_t, std::vector<Corner>> classes;
  for (std::size_t c = 0; c < n; ++c)
    classes[uf.find(c)].push_back(
        Corner{static_cast<int>(c / 3), static_cast<int>(c % 3)});
  std::vector<std::vector<Corner>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

int LabeledSurface::euler_characteristic() const {
  const int T = static_cast<int>(num_triangles());
  const int V = static_cast<int>(corner_classes().size());
  return V - (3 * T) / 2 + T;
}

std::vector<std::vector<int>> LabeledSurface::components() const {
  const std::size_t T = num_triangles();
  UnionFind uf(T == 0 ? 1 : T);
  for (const Gluing& g : gluings_)
    uf.unite(static_cast<std::size_t>(g.a.tri),
             static_cast<std::size_t>(g.b.tri));
  std::map<std::size_t, std::vector<int>> comps;
  for (std::size_t t = 0; t < T; ++t)
    comps[uf.find(t)].push_back(static_cast<int>(t));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

int LabeledSurface::genus() const {
  if (components().size() != 1)
    fail(Err::Disconnected,
         "genus requires a connected surface; this one has " +
             std::to_string(components().size()) + " components");
  int chi = euler_characteristic();
  if ((2 - chi) % 2 != 0)
    fail(Err::OddChi, "Euler characteristic " + std::to_string(chi) +
                          " is odd; surface data is inconsistent");
  return (2 - chi) / 2;
}

std::vector<GroupElement> LabeledSurface::total_class() const {
  std::vector<GroupElement> out;
  for (const auto& comp : components()) {
    GroupElement total = group_.identity();
    for (int t : comp) total = group_.op(total, labels_[static_cast<std::size_t>(t)]);
    out.push_back(total);
  }
  return out;
}

LabeledSurface LabeledSurface::homotopy_shift(int from, int to) const {
  const auto T = static_cast<int>(num_triangles());
  if (from < 0 || from >= T || to < 0 || to >= T)
    fail(Err::DimensionMismatch, "triangle index out of range");
  bool adjacent = false;
  for (const Gluing& g : gluings_) {
    if ((g.a.tri == from && g.b.tri == to) ||
        (g.a.tri == to && g.b.tri == from))
      adjacent = true;
  }
  if (!adjacent)
    fail(Err::NotAdjacent, "triangles " + std::to_string(from) + " and " +
                               std::to_string(to) + " share no gluing");
  if (from == to) return *this;
  std::vector<GroupElement> labels = labels_;
  labels[static_cast<std::size_t>(to)] =
      group_.op(labels[static_cast<std::size_t>(from)],
                labels[static_cast<std::size_t>(to)]);
  labels[static_cast<std::size_t>(from)] = group_.identity();
  return LabeledSurface(group_, std::move(labels), gluings_);
}

LabeledSurface LabeledSurface::pachner_22(std::size_t gluing_index) const {
  if (gluing_index >= gluings_.size())
    fail(Err::DimensionMismatch, "gluing index out of range");
  const Gluing& g = gluings_[gluing_index];
  const int t1 = g.a.tri, t2 = g.b.tri;
  if (t1 == t2)
    fail(Err::SelfGluing, "gluing " + gluing_str(g) +
                              " joins triangle " + std::to_string(t1) +
                              " to itself; the 2-2 move needs two triangles");
  std::size_t shared = 0;
  for (const Gluing& h : gluings_)
    if ((h.a.tri == t1 && h.b.tri == t2) || (h.a.tri == t2 && h.b.tri == t1))
      ++shared;
  if (shared > 1)
    fail(Err::MultiSharedEdge,
         "triangles " + std::to_string(t1) + " and " + std::to_string(t2) +
             " share " + std::to_string(shared) +
             " edges; the 2-2 move needs a genuine quadrilateral");

  const int eA = g.a.edge, eB = g.b.edge;
  // Quadrilateral corners: P = apex of t1, Q = tail of the shared edge in
  // t1, R = apex of t2, S = its head. The flip replaces the Q-S diagonal by
  // P-R. New t1 = (P,Q,R), new t2 = (R,S,P); the new diagonal is slot 2 of
  // both. Old boundary slots move as:
  //   (t1, eA+1) [S->P] -> (t2, 1)     (t1, eA+2) [P->Q] -> (t1, 0)
  //   (t2, eB+1) [Q->R] -> (t1, 1)     (t2, eB+2) [R->S] -> (t2, 0)
  std::map<Slot, Slot> rewrite = {
      {Slot{t1, (eA + 1) % 3}, Slot{t2, 1}},
      {Slot{t1, (eA + 2) % 3}, Slot{t1, 0}},
      {Slot{t2, (eB + 1) % 3}, Slot{t1, 1}},
      {Slot{t2, (eB + 2) % 3}, Slot{t2, 0}},
  };
  auto map_slot = [&](Slot s) {
    auto it = rewrite.find(s);
    return it == rewrite.end() ? s : it->second;
  };
  std::vector<Gluing> gluings = gluings_;
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    if (i == gluing_index) {
      gluings[i] = Gluing{Slot{t1, 2}, Slot{t2, 2}};
    } else {
      gluings[i].a = map_slot(gluings[i].a);
      gluings[i].b = map_slot(gluings[i].b);
    }
  }
  std::vector<GroupElement> labels = labels_;
  labels[static_cast<std::size_t>(t1)] =
      group_.op(labels_[static_cast<std::size_t>(t1)],
                labels_[static_cast<std::size_t>(t2)]);
  labels[static_cast<std::size_t>(t2)] = group_.identity();
  return LabeledSurface(group_, std::move(labels), std::move(gluings));
}

LabeledSurface LabeledSurface::pachner_13(int triangle) const {
  const auto T = static_cast<int>(num_triangles());
  if (triangle < 0 || triangle >= T)
    fail(Err::DimensionMismatch, "triangle index out of range");
  // Subdivide triangle t = (A,B,C) around a new interior vertex O into
  // children (A,B,O) at index t, (B,C,O) at index T, (C,A,O) at index T+1.
  // Each child keeps the old outer edge as its slot 0:
  //   (t,0) [A->B] stays (t,0); (t,1) [B->C] -> (T,0); (t,2) [C->A] -> (T+1,0).
  const int t = triangle;
  std::map<Slot, Slot> rewrite = {
      {Slot{t, 1}, Slot{T, 0}},
      {Slot{t, 2}, Slot{T + 1, 0}},
  };
  auto map_slot = [&](Slot s) {
    auto it = rewrite.find(s);
    return it == rewrite.end() ? s : it->second;
  };
  std::vector<Gluing> gluings = gluings_;
  for (Gluing& g : gluings) {
    g.a = map_slot(g.a);
    g.b = map_slot(g.b);
  }
  // Spokes around O: child slot 1 runs into O, child slot 2 runs out of it.
  gluings.push_back(Gluing{Slot{t, 1}, Slot{T, 2}});
  gluings.push_back(Gluing{Slot{T, 1}, Slot{T + 1, 2}});
  gluings.push_back(Gluing{Slot{T + 1, 1}, Slot{t, 2}});
  std::vector<GroupElement> labels = labels_;
  labels.push_back(group_.identity());
  labels.push_back(group_.identity());
  return LabeledSurface(group_, std::move(labels), std::move(gluings));
}

LabeledSurface LabeledSurface::pachner_31(Corner vertex) const {
  const auto T = static_cast<int>(num_triangles());
  if (vertex.tri < 0 || vertex.tri >= T || vertex.corner < 0 ||
      vertex.corner > 2)
    fail(Err::DimensionMismatch, "corner out of range");

  std::vector<Corner> cls;
  for (const auto& c : corner_classes())
    if (std::find(c.begin(), c.end(), vertex) != c.end()) cls = c;
  if (cls.size() != 3) {
    std::ostringstream os;
    os << "corner class of (" << vertex.tri << "," << vertex.corner
       << ") has degree " << cls.size() << "; the 3-1 move needs degree 3";
    fail(Err::BadVertex, os.str());
  }

  // Walk the star: at corner c of triangle t the edge into the vertex is
  // slot (c+2)%3 and the edge out of it is slot c; the partner of the
  // in-edge is the out-edge of the next triangle around the vertex.
  Corner walk[3];
  walk[0] = vertex;
  for (int i = 0; i < 2; ++i) {
    Slot in{walk[i].tri, (walk[i].corner + 2) % 3};
    Slot p = partner(in);
    walk[i + 1] = Corner{p.tri, p.edge};
  }
  Slot closing = partner(Slot{walk[2].tri, (walk[2].corner + 2) % 3});
  if (closing != Slot{walk[0].tri, walk[0].corner})
    fail(Err::BadVertex, "star walk does not close after three triangles");
  if (walk[0].tri == walk[1].tri || walk[0].tri == walk[2].tri ||
      walk[1].tri == walk[2].tri)
    fail(Err::BadVertex,
         "the three triangles around the vertex are not pairwise distinct");

  // Merged triangle: slot i <- the outer (opposite) edge of walk[i], which
  // is slot (corner+1)%3. It replaces walk[0]'s index; the other two
  // triangles are removed and higher indices shift down.
  const int keep = walk[0].tri;
  std::vector<int> removed = {walk[1].tri, walk[2].tri};
  std::sort(removed.begin(), removed.end());
  auto new_index = [&](int tri) {
    int shift = 0;
    for (int r : removed)
      if (r < tri) ++shift;
    return tri - shift;
  };

  std::map<Slot, Slot> rewrite;
  for (int i = 0; i < 3; ++i)
    rewrite[Slot{walk[i].tri, (walk[i].corner + 1) % 3}] =
        Slot{new_index(keep), i};
  auto is_star_slot = [&](Slot s) {
    for (const Corner& w : walk)
      if (s.tri == w.tri &&
          (s.edge == w.corner || s.edge == (w.corner + 2) % 3))
        return true;
    return false;
  };

  std::vector<Gluing> gluings;
  for (const Gluing& g : gluings_) {
    if (is_star_slot(g.a) || is_star_slot(g.b)) continue;  // interior spoke
    auto map_slot = [&](Slot s) {
      auto it = rewrite.find(s);
      if (it != rewrite.end()) return it->second;
      return Slot{new_index(s.tri), s.edge};
    };
    gluings.push_back(Gluing{map_slot(g.a), map_slot(g.b)});
  }

  GroupElement merged = group_.identity();
  for (const Corner& w : walk)
    merged = group_.op(merged, labels_[static_cast<std::size_t>(w.tri)]);
  std::vector<GroupElement> labels;
  for (int t = 0; t < T; ++t) {
    if (t == removed[0] || t == removed[1]) continue;
    labels.push_back(t == keep ? merged : labels_[static_cast<std::size_t>(t)]);
  }
  return LabeledSurface(group_, std::move(labels), std::move(gluings));
}

LabeledSurface LabeledSurface::with_labels(
    std::vector<GroupElement> labels) const {
  if (labels.size() != num_triangles())
    fail(Err::DimensionMismatch, "label count does not match triangle count");
  for (GroupElement& l : labels) l = group_.reduce(l.residues);
  return LabeledSurface(group_, std::move(labels), gluings_);
}

std::vector<Corner> LabeledSurface::collapsible_corners() const {
  std::vector<Corner> out;
  for (const auto& cls : corner_classes()) {
    if (cls.size() != 3) continue;
    if (cls[0].tri == cls[1].tri || cls[0].tri == cls[2].tri ||
        cls[1].tri == cls[2].tri)
      continue;
    out.push_back(cls.front());
  }
  return out;
}

DualGraph dual_graph(const LabeledSurface& surface) {
  DualGraph g;
  g.num_vertices = surface.num_triangles();
  g.labels = surface.labels();
  for (const Gluing& gl : surface.gluings()) g.edges.emplace_back(gl.a, gl.b);
  return g;
}

LabeledSurface make_sphere(const FiniteAbelianGroup& group) {
  return LabeledSurface::make(
      group, 2, {},
      {Gluing{{0, 0}, {1, 2}}, Gluing{{0, 1}, {1, 1}}, Gluing{{0, 2}, {1, 0}}});
}

LabeledSurface make_torus(const FiniteAbelianGroup& group) {
  return LabeledSurface::make(
      group, 2, {},
      {Gluing{{0, 0}, {1, 0}}, Gluing{{0, 1}, {1, 1}}, Gluing{{0, 2}, {1, 2}}});
}

LabeledSurface make_genus_surface(int h, const FiniteAbelianGroup& group,
                                  const GroupElement& total) {
  if (h < 0)
    fail(Err::NegativeGenus, "genus " + std::to_string(h) + " is negative");
  LabeledSurface base =
      h == 0 ? make_sphere(group)
             : [&] {
                 // Fan-triangulate the 4h-gon P0..P_{4h-1} from P0: triangle
                 // i (0-based) is (P0, P_{i+1}, P_{i+2}). Boundary edge j
                 // (P_j -> P_{j+1}) sits at slot:
                 //   j = 0 -> (0,0); 1 <= j <= 4h-2 -> (j-1,1); j = 4h-1 ->
                 //   (4h-3,2).
                 // The a b a' b' pairing glues edge 4m with 4m+2 and 4m+1
                 // with 4m+3, head-to-tail.
                 const int n = 4 * h;
                 auto boundary = [&](int j) {
                   if (j == 0) return Slot{0, 0};
                   if (j == n - 1) return Slot{n - 3, 2};
                   return Slot{j - 1, 1};
                 };
                 std::vector<Gluing> gluings;
                 for (int i = 0; i + 2 < n - 1; ++i)
                   gluings.push_back(Gluing{Slot{i, 2}, Slot{i + 1, 0}});
                 for (int m = 0; m < h; ++m) {
                   gluings.push_back(
                       Gluing{boundary(4 * m), boundary(4 * m + 2)});
                   gluings.push_back(
                       Gluing{boundary(4 * m + 1), boundary(4 * m + 3)});
                 }
                 return LabeledSurface::make(
                     group, static_cast<std::size_t>(n - 2), {}, gluings);
               }();
  std::vector<GroupElement> labels(base.num_triangles(), group.identity());
  labels[0] = group.reduce(total.residues);
  return base.with_labels(std::move(labels));
}

LabeledSurface disjoint_union(const LabeledSurface& a,
                              const LabeledSurface& b) {
  if (!(a.group() == b.group()))
    fail(Err::GroupMismatch, "disjoint union needs a common label group");
  const int offset = static_cast<int>(a.num_triangles());
  std::vector<GroupElement> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Gluing> gluings = a.gluings();
  for (const Gluing& g : b.gluings())
    gluings.push_back(Gluing{Slot{g.a.tri + offset, g.a.edge},
                             Slot{g.b.tri + offset, g.b.edge}});
  return LabeledSurface::make(a.group(), a.num_triangles() + b.num_triangles(),
                              std::move(labels), std::move(gluings));
}

}  // namespace hss
