#include "hss/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace hss {

namespace {

Vector unit_of(const Algebra& a) { return a.unit(); }

/// Central idempotents of C[Z/n] in the group basis: p_k has coefficient
/// (1/n) * conj(omega^{k j}) on s^j.
std::vector<Vector> cyclic_idempotents(int n) {
  std::vector<Vector> out;
  for (int k = 0; k < n; ++k) {
    Vector p(n);
    for (int j = 0; j < n; ++j) {
      double angle = -2.0 * std::numbers::pi * k * j / n;
      p(j) = cplx(std::cos(angle), std::sin(angle)) / static_cast<double>(n);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

BlockAlgebra fixture_ground_field(double tolerance) {
  Algebra a = Algebra::ground_field(tolerance);
  return BlockAlgebra{"C", a, {1}, {unit_of(a)}};
}

BlockAlgebra fixture_cyclic_2(double tolerance) {
  Algebra a = Algebra::cyclic_group_algebra(2, tolerance);
  return BlockAlgebra{"C[Z/2]", a, {1, 1}, cyclic_idempotents(2)};
}

BlockAlgebra fixture_cyclic_3(double tolerance) {
  Algebra a = Algebra::cyclic_group_algebra(3, tolerance);
  return BlockAlgebra{"C[Z/3]", a, {1, 1, 1}, cyclic_idempotents(3)};
}

BlockAlgebra fixture_matrix_2(double tolerance) {
  Algebra a = Algebra::matrix_algebra(2, tolerance);
  return BlockAlgebra{"M_2", a, {2}, {unit_of(a)}};
}

BlockAlgebra fixture_m2_plus_c(double tolerance) {
  Algebra a = Algebra::direct_sum(Algebra::matrix_algebra(2, tolerance),
                                  Algebra::ground_field(tolerance), tolerance);
  Vector u1 = Vector::Zero(5), u2 = Vector::Zero(5);
  u1(0) = u1(3) = 1.0;
  u2(4) = 1.0;
  return BlockAlgebra{"M_2+C", a, {2, 1}, {u1, u2}};
}

std::vector<BlockAlgebra> fixture_algebras(double tolerance) {
  return {fixture_ground_field(tolerance), fixture_cyclic_2(tolerance),
          fixture_cyclic_3(tolerance), fixture_matrix_2(tolerance),
          fixture_m2_plus_c(tolerance)};
}

BlockAlgebra random_block_algebra(std::mt19937_64& rng, int max_dim,
                                  double tolerance) {
  std::vector<int> blocks;
  int budget = max_dim;
  while (true) {
    std::vector<int> choices;
    for (int n = 1; n * n <= budget; ++n) choices.push_back(n);
    if (choices.empty()) break;
    int n = choices[std::uniform_int_distribution<std::size_t>(
        0, choices.size() - 1)(rng)];
    blocks.push_back(n);
    budget -= n * n;
    if (budget == 0) break;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
  }

  Algebra alg = blocks[0] == 1 ? Algebra::ground_field(tolerance)
                               : Algebra::matrix_algebra(blocks[0], tolerance);
  std::string name = blocks[0] == 1 ? "C" : "M_" + std::to_string(blocks[0]);
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    Algebra next = blocks[b] == 1
                       ? Algebra::ground_field(tolerance)
                       : Algebra::matrix_algebra(blocks[b], tolerance);
    alg = Algebra::direct_sum(alg, next, tolerance);
    name += blocks[b] == 1 ? "+C" : "+M_" + std::to_string(blocks[b]);
  }

  std::vector<Vector> units;
  const auto dim = static_cast<Eigen::Index>(alg.dim());
  Eigen::Index offset = 0;
  for (int n : blocks) {
    Vector u = Vector::Zero(dim);
    for (int a = 0; a < n; ++a) u(offset + a * n + a) = 1.0;
    units.push_back(std::move(u));
    offset += static_cast<Eigen::Index>(n) * n;
  }
  return BlockAlgebra{std::move(name), std::move(alg), std::move(blocks),
                      std::move(units)};
}

Vector central_image(const BlockAlgebra& ba, const std::vector<long>& exponents,
                     long order) {
  if (exponents.size() != ba.blocks.size())
    fail(Err::DimensionMismatch, "one exponent per block required");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(ba.algebra.dim()));
  for (std::size_t b = 0; b < ba.blocks.size(); ++b) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(exponents[b]) /
                   static_cast<double>(order);
    v += cplx(std::cos(angle), std::sin(angle)) * ba.block_units[b];
  }
  return v;
}

GAction random_action(std::mt19937_64& rng, const FiniteAbelianGroup& group,
                      const BlockAlgebra& ba) {
  std::vector<Vector> images;
  for (std::size_t f = 0; f < group.rank(); ++f) {
    long n = group.orders()[f];
    std::vector<long> exps;
    for (std::size_t b = 0; b < ba.blocks.size(); ++b)
      exps.push_back(std::uniform_int_distribution<long>(0, n - 1)(rng));
    images.push_back(central_image(ba, exps, n));
  }
  return GAction::make(group, ba.algebra, std::move(images));
}

std::vector<LabeledSurface> small_closed_surfaces(
    const FiniteAbelianGroup& group) {
  std::vector<LabeledSurface> out;
  LabeledSurface sphere = make_sphere(group);
  LabeledSurface torus = make_torus(group);
  out.push_back(sphere);
  // Same two triangles, different coherent pairing.
  out.push_back(LabeledSurface::make(group, 2, {},
                                     {Gluing{{0, 0}, {1, 0}},
                                      Gluing{{0, 1}, {1, 2}},
                                      Gluing{{0, 2}, {1, 1}}}));
  // Two cones glued along their base circles: a sphere with self-gluings.
  out.push_back(LabeledSurface::make(group, 2, {},
                                     {Gluing{{0, 1}, {0, 2}},
                                      Gluing{{1, 1}, {1, 2}},
                                      Gluing{{0, 0}, {1, 0}}}));
  out.push_back(torus);
  out.push_back(make_genus_surface(1, group, group.identity()));
  LabeledSurface tetra = sphere.pachner_13(0);
  out.push_back(tetra);
  out.push_back(torus.pachner_13(0));
  out.push_back(tetra.pachner_22(0));
  out.push_back(tetra.pachner_22(3));
  out.push_back(torus.pachner_13(0).pachner_22(0));
  out.push_back(disjoint_union(sphere, sphere));
  return out;
}

namespace {

std::vector<std::size_t> legal_flips(const LabeledSurface& s) {
  std::vector<std::size_t> out;
  const auto& gl = s.gluings();
  for (std::size_t i = 0; i < gl.size(); ++i) {
    int t1 = gl[i].a.tri, t2 = gl[i].b.tri;
    if (t1 == t2) continue;
    int shared = 0;
    for (const Gluing& h : gl)
      if ((h.a.tri == t1 && h.b.tri == t2) || (h.a.tri == t2 && h.b.tri == t1))
        ++shared;
    if (shared == 1) out.push_back(i);
  }
  return out;
}

}  // namespace

LabeledSurface random_pachner_move(std::mt19937_64& rng,
                                   const LabeledSurface& surface,
                                   std::size_t max_triangles) {
  int kind = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int attempt = 0; attempt < 3; ++attempt, kind = (kind + 1) % 3) {
    if (kind == 0 && surface.num_triangles() + 2 <= max_triangles) {
      int t = static_cast<int>(std::uniform_int_distribution<std::size_t>(
          0, surface.num_triangles() - 1)(rng));
      return surface.pachner_13(t);
    }
    if (kind == 1) {
      auto corners = surface.collapsible_corners();
      if (!corners.empty())
        return surface.pachner_31(
            corners[std::uniform_int_distribution<std::size_t>(
                0, corners.size() - 1)(rng)]);
    }
    if (kind == 2) {
      auto flips = legal_flips(surface);
      if (!flips.empty())
        return surface.pachner_22(
            flips[std::uniform_int_distribution<std::size_t>(
                0, flips.size() - 1)(rng)]);
    }
  }
  return surface;
}

LabeledSurface random_surface(std::mt19937_64& rng,
                              const FiniteAbelianGroup& group,
                              std::size_t max_triangles) {
  int h = std::uniform_int_distribution<int>(0, 2)(rng);
  LabeledSurface s = make_genus_surface(h, group, group.identity());
  int grow = std::uniform_int_distribution<int>(0, 6)(rng);
  for (int i = 0; i < grow && s.num_triangles() + 2 <= max_triangles; ++i) {
    int t = static_cast<int>(std::uniform_int_distribution<std::size_t>(
        0, s.num_triangles() - 1)(rng));
    s = s.pachner_13(t);
  }
  int shuffle = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < shuffle; ++i) {
    auto flips = legal_flips(s);
    if (flips.empty()) break;
    s = s.pachner_22(flips[std::uniform_int_distribution<std::size_t>(
        0, flips.size() - 1)(rng)]);
  }
  std::vector<GroupElement> labels;
  for (std::size_t t = 0; t < s.num_triangles(); ++t) {
    GroupElement g = group.identity();
    for (std::size_t f = 0; f < group.rank(); ++f)
      g.residues[f] = std::uniform_int_distribution<long>(
          0, group.orders()[f] - 1)(rng);
    labels.push_back(std::move(g));
  }
  return s.with_labels(std::move(labels));
}

LabeledSurface redistribute_labels(std::mt19937_64& rng,
                                   const LabeledSurface& surface) {
  const FiniteAbelianGroup& group = surface.group();
  std::vector<GroupElement> totals = surface.total_class();
  std::vector<GroupElement> labels(surface.num_triangles(), group.identity());
  auto comps = surface.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    GroupElement balance = totals[c];
    for (std::size_t i = 1; i < comps[c].size(); ++i) {
      GroupElement g = group.identity();
      for (std::size_t f = 0; f < group.rank(); ++f)
        g.residues[f] = std::uniform_int_distribution<long>(
            0, group.orders()[f] - 1)(rng);
      labels[static_cast<std::size_t>(comps[c][i])] = g;
      balance = group.op(balance, group.inv(g));
    }
    labels[static_cast<std::size_t>(comps[c][0])] = balance;
  }
  return surface.with_labels(std::move(labels));
}

std::vector<FiniteAbelianGroup> small_groups() {
  return {make_group({}),     make_group({2}),    make_group({3}),
          make_group({4}),    make_group({5}),    make_group({6}),
          make_group({8}),    make_group({12}),   make_group({2, 2}),
          make_group({2, 3}), make_group({2, 4}), make_group({2, 2, 3})};
}

}  // namespace hss
