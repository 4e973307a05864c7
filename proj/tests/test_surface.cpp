#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "hss/error.hpp"
#include "hss/group.hpp"
#include "hss/surface.hpp"

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

}  // namespace

TEST_CASE("two-triangle sphere: three vertices, chi 2, genus 0") {
  const LabeledSurface s = make_sphere(trivial_group());
  CHECK(s.num_triangles() == 2);
  CHECK(s.corner_classes().size() == 3);
  CHECK(s.euler_characteristic() == 2);
  CHECK(s.genus() == 0);
  CHECK(s.components().size() == 1);
  REQUIRE(s.total_class().size() == 1);
  CHECK(s.total_class()[0] == trivial_group().identity());
}

TEST_CASE("two-triangle torus: one vertex, chi 0, genus 1") {
  const LabeledSurface t = make_torus(trivial_group());
  CHECK(t.num_triangles() == 2);
  CHECK(t.corner_classes().size() == 1);
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.genus() == 1);
  // All three gluings pair slot i of triangle 0 with slot i of triangle 1.
  CHECK(t.partner(Slot{0, 0}) == Slot{1, 0});
  CHECK(t.partner(Slot{1, 2}) == Slot{0, 2});
}

TEST_CASE("fan-triangulated genus surfaces have the right invariants") {
  const FiniteAbelianGroup g = make_group({6});
  const GroupElement cls{{4}};
  for (int h = 0; h <= 3; ++h) {
    const LabeledSurface s = make_genus_surface(h, g, cls);
    CAPTURE(h);
    CHECK(s.euler_characteristic() == 2 - 2 * h);
    CHECK(s.genus() == h);
    CHECK(s.num_triangles() == (h == 0 ? 2u : 4u * h - 2u));
    REQUIRE(s.total_class().size() == 1);
    CHECK(s.total_class()[0] == cls);
  }
  CHECK(kind_of([&] { make_genus_surface(-1, g, cls); }) ==
        Err::NegativeGenus);
}

TEST_CASE("disjoint union splits components and total classes") {
  const FiniteAbelianGroup g = make_group({5});
  const LabeledSurface a = make_sphere(g).with_labels(
      {GroupElement{{2}}, GroupElement{{1}}});
  const LabeledSurface b = make_torus(g).with_labels(
      {GroupElement{{4}}, GroupElement{{3}}});
  const LabeledSurface u = disjoint_union(a, b);
  CHECK(u.num_triangles() == 4);
  CHECK(u.components().size() == 2);
  CHECK(u.euler_characteristic() == 2);
  REQUIRE(u.total_class().size() == 2);
  CHECK(u.total_class()[0].residues == std::vector<long>{3});
  CHECK(u.total_class()[1].residues == std::vector<long>{2});
  CHECK(kind_of([&] { u.genus(); }) == Err::Disconnected);

  const LabeledSurface c = make_sphere(make_group({7}));
  CHECK(kind_of([&] { disjoint_union(a, c); }) == Err::GroupMismatch);
}

TEST_CASE("construction validates the gluing pattern") {
  const FiniteAbelianGroup g = trivial_group();

  // Open slot: only two of the three sphere gluings.
  CHECK(kind_of([&] {
          LabeledSurface::make(g, 2, {},
                               {Gluing{{0, 0}, {1, 2}}, Gluing{{0, 1}, {1, 1}}});
        }) == Err::OpenSlot);

  // A slot used twice.
  CHECK(kind_of([&] {
          LabeledSurface::make(g, 2,
                               {},
                               {Gluing{{0, 0}, {1, 2}}, Gluing{{0, 1}, {1, 1}},
                                Gluing{{0, 2}, {1, 0}}, Gluing{{0, 0}, {1, 2}}});
        }) == Err::DuplicateSlot);

  // A slot glued to itself.
  CHECK(kind_of([&] {
          LabeledSurface::make(g, 2,
                               {},
                               {Gluing{{0, 0}, {0, 0}}, Gluing{{0, 1}, {1, 1}},
                                Gluing{{0, 2}, {1, 0}}, Gluing{{1, 2}, {1, 2}}});
        }) == Err::DuplicateSlot);

  // Direction-preserving identification.
  CHECK(kind_of([&] {
          LabeledSurface::make(
              g, 2, {},
              {Gluing{{0, 0}, {1, 2}, false}, Gluing{{0, 1}, {1, 1}},
               Gluing{{0, 2}, {1, 0}}});
        }) == Err::NonOrientableGluing);

  // Out-of-range slot.
  CHECK(kind_of([&] {
          LabeledSurface::make(g, 2, {},
                               {Gluing{{0, 0}, {2, 2}}, Gluing{{0, 1}, {1, 1}},
                                Gluing{{0, 2}, {1, 0}}});
        }) == Err::DimensionMismatch);
}

TEST_CASE("labels are padded with the identity and reduced") {
  const FiniteAbelianGroup g = make_group({3});
  const LabeledSurface t =
      make_torus(g).with_labels({GroupElement{{5}}, GroupElement{{-1}}});
  CHECK(t.labels()[0].residues == std::vector<long>{2});
  CHECK(t.labels()[1].residues == std::vector<long>{2});
  CHECK(t.total_class()[0].residues == std::vector<long>{1});
  CHECK(kind_of([&] {
          t.with_labels({GroupElement{{0}}, GroupElement{{0}},
                         GroupElement{{0}}});
        }) == Err::DimensionMismatch);
}

TEST_CASE("homotopy shift moves a label across a shared edge") {
  const FiniteAbelianGroup g = make_group({4});
  const LabeledSurface t =
      make_torus(g).with_labels({GroupElement{{3}}, GroupElement{{2}}});
  const LabeledSurface moved = t.homotopy_shift(0, 1);
  CHECK(moved.labels()[0] == g.identity());
  CHECK(moved.labels()[1].residues == std::vector<long>{1});
  CHECK(moved.total_class()[0] == t.total_class()[0]);

  // Shifting between triangles with no shared edge fails.
  const LabeledSurface u = disjoint_union(make_sphere(g), make_sphere(g));
  CHECK(kind_of([&] { u.homotopy_shift(0, 2); }) == Err::NotAdjacent);
}

TEST_CASE("pachner 1-3 subdivides and keeps the label on the first child") {
  const FiniteAbelianGroup g = make_group({5});
  const LabeledSurface s =
      make_sphere(g).with_labels({GroupElement{{2}}, GroupElement{{3}}});
  const LabeledSurface t = s.pachner_13(0);
  CHECK(t.num_triangles() == 4);
  CHECK(t.euler_characteristic() == 2);
  CHECK(t.genus() == 0);
  CHECK(t.labels()[0].residues == std::vector<long>{2});
  CHECK(t.labels()[2] == g.identity());
  CHECK(t.labels()[3] == g.identity());
  CHECK(t.total_class()[0] == s.total_class()[0]);
  CHECK_THROWS_AS(s.pachner_13(2), Error);
}

TEST_CASE("pachner 3-1 collapses the star created by a 1-3 move") {
  const FiniteAbelianGroup g = make_group({5});
  const LabeledSurface s =
      make_sphere(g).with_labels({GroupElement{{2}}, GroupElement{{3}}});
  const LabeledSurface t = s.pachner_13(0);
  const std::vector<Corner> corners = t.collapsible_corners();
  REQUIRE(!corners.empty());
  const LabeledSurface back = t.pachner_31(corners.front());
  CHECK(back.num_triangles() == 2);
  CHECK(back.euler_characteristic() == 2);
  CHECK(back.total_class()[0] == s.total_class()[0]);
}

TEST_CASE("pachner 3-1 rejects vertices that are not degree-three stars") {
  const LabeledSurface t = make_torus(trivial_group());
  // The torus vertex has degree six.
  CHECK(kind_of([&] { t.pachner_31(Corner{0, 0}); }) == Err::BadVertex);
  const LabeledSurface s = make_sphere(trivial_group());
  // Sphere vertices have degree two.
  CHECK(kind_of([&] { s.pachner_31(Corner{0, 0}); }) == Err::BadVertex);
  CHECK(s.collapsible_corners().empty());
}

TEST_CASE("pachner 2-2 flips the diagonal of a quadrilateral") {
  const FiniteAbelianGroup g = make_group({7});
  const LabeledSurface tetra = make_sphere(g)
                                  .with_labels({GroupElement{{1}},
                                                GroupElement{{2}}})
                                  .pachner_13(0);
  const GroupElement before = tetra.total_class()[0];
  bool flipped_any = false;
  for (std::size_t i = 0; i < tetra.gluings().size(); ++i) {
    const Gluing& gl = tetra.gluings()[i];
    if (gl.a.tri == gl.b.tri) continue;
    const LabeledSurface f = tetra.pachner_22(i);
    flipped_any = true;
    CHECK(f.num_triangles() == 4);
    CHECK(f.euler_characteristic() == 2);
    CHECK(f.total_class()[0] == before);
  }
  CHECK(flipped_any);
}

TEST_CASE("pachner 2-2 rejects doubled and self-glued edges") {
  // Both torus gluings share the same pair of triangles.
  const LabeledSurface t = make_torus(trivial_group());
  CHECK(kind_of([&] { t.pachner_22(0); }) == Err::MultiSharedEdge);

  // Cone-fold sphere: triangle 0 glued to itself along an edge.
  const LabeledSurface cone = LabeledSurface::make(
      trivial_group(), 2, {},
      {Gluing{{0, 1}, {0, 2}}, Gluing{{1, 1}, {1, 2}}, Gluing{{0, 0}, {1, 0}}});
  CHECK(cone.euler_characteristic() == 2);
  CHECK(kind_of([&] { cone.pachner_22(0); }) == Err::SelfGluing);
}

TEST_CASE("dual graph mirrors triangles and gluings") {
  const LabeledSurface t = make_torus(make_group({2}));
  const DualGraph d = dual_graph(t);
  CHECK(d.num_vertices == 2);
  CHECK(d.edges.size() == 3);
  CHECK(d.num_flags() == 6);
  CHECK(d.labels.size() == 2);
}

TEST_CASE("a 1-3 followed by 2-2 moves keeps the surface closed and oriented") {
  const FiniteAbelianGroup g = make_group({2, 3});
  LabeledSurface s = make_genus_surface(2, g, GroupElement{{1, 2}});
  s = s.pachner_13(3);
  for (std::size_t i = 0; i < s.gluings().size(); ++i) {
    const Gluing& gl = s.gluings()[i];
    if (gl.a.tri == gl.b.tri) continue;
    // Count gluings shared by this triangle pair; flip only single edges.
    int shared = 0;
    for (const Gluing& other : s.gluings()) {
      const bool same =
          (other.a.tri == gl.a.tri && other.b.tri == gl.b.tri) ||
          (other.a.tri == gl.b.tri && other.b.tri == gl.a.tri);
      if (same) ++shared;
    }
    if (shared != 1) continue;
    s = s.pachner_22(i);
    break;
  }
  CHECK(s.euler_characteristic() == -2);
  CHECK(s.genus() == 2);
  CHECK(s.total_class()[0].residues == std::vector<long>{1, 2});
}
