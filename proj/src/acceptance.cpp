#include "hss/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <future>
#include <limits>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/cobord.hpp"
#include "hss/error.hpp"
#include "hss/fixtures.hpp"
#include "hss/group.hpp"
#include "hss/statesum.hpp"
#include "hss/surface.hpp"

namespace hss {
namespace {

// Pass/fail thresholds are fixed here, independent of the construction
// tolerance handed in through AcceptanceOptions.
constexpr double kOracleTol = 1e-10;
constexpr double kMoveTol = 1e-8;
constexpr double kLabelTol = 1e-8;
constexpr double kAlgebraLawTol = 1e-10;
constexpr double kZigzagTol = 1e-10;
constexpr double kTwistTol = 1e-10;
constexpr double kFunctorTol = 1e-8;

// Per-criterion wall-clock budgets in seconds (0 = unlimited).
constexpr std::array<double, 8> kTimeBudget = {30.0, 120.0, 0, 0, 0, 0, 0, 0};

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double rel_residual(cplx a, cplx b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  return (a - b).cwiseAbs().maxCoeff();
}

std::mt19937_64 criterion_rng(const AcceptanceOptions& opts, int number) {
  return std::mt19937_64(opts.seed * 1000003ULL +
                         static_cast<std::uint64_t>(number));
}

// ---------------------------------------------------------------------------
// 1. Greedy contraction agrees with the literal brute-force state sum on the
//    enumerated small closed surfaces over the stock algebras.
CriterionResult criterion_oracle(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "state sum matches brute-force oracle";
  const FiniteAbelianGroup group = trivial_group();
  const std::vector<LabeledSurface> surfaces = small_closed_surfaces(group);
  std::vector<BlockAlgebra> algebras;
  for (BlockAlgebra& ba : fixture_algebras(opts.algebra_tol))
    if (ba.algebra.dim() <= 4) algebras.push_back(std::move(ba));

  OracleOptions oracle;
  oracle.guard = 2.5e7;  // d = 4, T = 4 needs 4^12 ~ 1.7e7 colorings
  double worst = 0.0;
  int pairs = 0;
  std::string worst_case;
  for (const BlockAlgebra& ba : algebras) {
    const GAction action = GAction::trivial(group, ba.algebra);
    for (std::size_t s = 0; s < surfaces.size(); ++s) {
      const cplx zp = evaluate(surfaces[s], ba.algebra, action);
      const cplx zo = evaluate_bruteforce(surfaces[s], ba.algebra, action,
                                          oracle);
      const double res = rel_residual(zp, zo);
      ++pairs;
      if (res > worst) {
        worst = res;
        worst_case = ba.name + ", surface " + std::to_string(s);
      }
    }
  }
  r.pass = worst <= kOracleTol;
  r.detail = std::to_string(pairs) + " surface/algebra pairs, max residual " +
             sci(worst) + " (tol " + sci(kOracleTol) + ", worst at " +
             worst_case + ")";
  return r;
}

// ---------------------------------------------------------------------------
// 2. Random Pachner move sequences leave the state sum unchanged.
CriterionResult criterion_moves(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "Pachner moves preserve the state sum";
  std::mt19937_64 rng = criterion_rng(opts, 2);
  const std::vector<FiniteAbelianGroup> groups = {
      trivial_group(), make_group({2}), make_group({4}), make_group({2, 3})};

  constexpr int kSequences = 200;
  constexpr std::size_t kMaxTriangles = 30;
  double worst = 0.0;
  std::string worst_case;
  for (int it = 0; it < kSequences; ++it) {
    const FiniteAbelianGroup& group = groups[rng() % groups.size()];
    const BlockAlgebra ba = random_block_algebra(rng, 6, opts.algebra_tol);
    const GAction action = random_action(rng, group, ba);
    LabeledSurface surf = random_surface(rng, group, kMaxTriangles - 6);
    const cplx z0 = evaluate(surf, ba.algebra, action);
    const int moves = 1 + static_cast<int>(rng() % 10);
    for (int m = 0; m < moves; ++m)
      surf = random_pachner_move(rng, surf, kMaxTriangles);
    const cplx z1 = evaluate(surf, ba.algebra, action);
    const double res = rel_residual(z0, z1);
    if (res > worst) {
      worst = res;
      worst_case = "sequence " + std::to_string(it) + " (" + ba.name + ", T=" +
                   std::to_string(surf.num_triangles()) + ")";
    }
  }
  r.pass = worst <= kMoveTol;
  r.detail = std::to_string(kSequences) + " move sequences, max residual " +
             sci(worst) + " (tol " + sci(kMoveTol) + ", worst " + worst_case +
             ")";
  return r;
}

// ---------------------------------------------------------------------------
// 3. The state sum depends on labels only through the per-component totals,
//    and the local two-triangle label identity holds entrywise.
CriterionResult criterion_labels(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "label moves preserve the state sum";
  std::mt19937_64 rng = criterion_rng(opts, 3);

  struct Fixture {
    LabeledSurface surface;
    BlockAlgebra ba;
    GAction action;
  };
  std::vector<Fixture> fixtures;
  {
    const FiniteAbelianGroup z2 = make_group({2});
    BlockAlgebra cz2 = fixture_cyclic_2(opts.algebra_tol);
    GAction a = GAction::make(z2, cz2.algebra,
                              {central_image(cz2, {0, 1}, 2)});
    LabeledSurface torus = make_torus(z2).with_labels(
        {GroupElement{{1}}, GroupElement{{0}}});
    fixtures.push_back({std::move(torus), std::move(cz2), std::move(a)});
  }
  {
    const FiniteAbelianGroup z4 = make_group({4});
    BlockAlgebra gf = fixture_ground_field(opts.algebra_tol);
    GAction a = GAction::make(z4, gf.algebra, {central_image(gf, {1}, 4)});
    LabeledSurface s = make_genus_surface(1, z4, GroupElement{{1}});
    fixtures.push_back({std::move(s), std::move(gf), std::move(a)});
  }
  {
    const FiniteAbelianGroup z4 = make_group({4});
    BlockAlgebra m2pc = fixture_m2_plus_c(opts.algebra_tol);
    GAction a = GAction::make(z4, m2pc.algebra,
                              {central_image(m2pc, {1, 2}, 4)});
    LabeledSurface s = make_genus_surface(2, z4, GroupElement{{2}});
    fixtures.push_back({std::move(s), std::move(m2pc), std::move(a)});
  }
  {
    const FiniteAbelianGroup z2z3 = make_group({2, 3});
    BlockAlgebra cz3 = fixture_cyclic_3(opts.algebra_tol);
    GAction a = GAction::make(z2z3, cz3.algebra,
                              {central_image(cz3, {0, 1, 1}, 2),
                               central_image(cz3, {0, 1, 2}, 3)});
    LabeledSurface tetra = make_sphere(z2z3).pachner_13(0).with_labels(
        {GroupElement{{1, 2}}, GroupElement{{0, 0}}, GroupElement{{0, 0}},
         GroupElement{{0, 0}}});
    fixtures.push_back({std::move(tetra), std::move(cz3), std::move(a)});
  }

  constexpr int kRedistributions = 100;
  constexpr int kShifts = 25;
  double worst = 0.0;
  std::string worst_case;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const Fixture& fx = fixtures[f];
    const cplx z0 = evaluate(fx.surface, fx.ba.algebra, fx.action);
    for (int it = 0; it < kRedistributions; ++it) {
      const LabeledSurface moved = redistribute_labels(rng, fx.surface);
      const double res =
          rel_residual(z0, evaluate(moved, fx.ba.algebra, fx.action));
      if (res > worst) {
        worst = res;
        worst_case = "redistribution on fixture " + std::to_string(f) + " (" +
                     fx.ba.name + ")";
      }
    }
    // Single primitive shifts across randomly chosen shared edges.
    const auto& gluings = fx.surface.gluings();
    for (int it = 0; it < kShifts; ++it) {
      const Gluing& g = gluings[rng() % gluings.size()];
      if (g.a.tri == g.b.tri) continue;
      const LabeledSurface moved = fx.surface.homotopy_shift(g.a.tri, g.b.tri);
      const double res =
          rel_residual(z0, evaluate(moved, fx.ba.algebra, fx.action));
      if (res > worst) {
        worst = res;
        worst_case = "shift on fixture " + std::to_string(f) + " (" +
                     fx.ba.name + ")";
      }
    }
  }

  // Local identity: sliding the label across the shared edge of two glued
  // triangles does not change the contracted pair tensor,
  //   sum_{k,k'} C(g)_ijk g^{kk'} C(h)_{k'lm}
  //     = sum_{k,k'} C_ijk g^{kk'} C(g+h)_{k'lm}.
  double worst_local = 0.0;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const Fixture& fx = fixtures[f];
    const Algebra& alg = fx.ba.algebra;
    const FiniteAbelianGroup& group = fx.action.group();
    const std::size_t d = alg.dim();
    const Matrix& P = alg.inv_metric();
    auto pair_tensor = [&](const GroupElement& g, const GroupElement& h) {
      const std::vector<cplx> A = lowered_twisted_constants(alg, fx.action, g);
      const std::vector<cplx> B = lowered_twisted_constants(alg, fx.action, h);
      std::vector<cplx> out(d * d * d * d, cplx(0.0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m) {
              cplx v = 0;
              for (std::size_t k = 0; k < d; ++k)
                for (std::size_t k2 = 0; k2 < d; ++k2)
                  v += A[(i * d + j) * d + k] *
                       P(static_cast<Eigen::Index>(k),
                         static_cast<Eigen::Index>(k2)) *
                       B[(k2 * d + l) * d + m];
              out[((i * d + j) * d + l) * d + m] = v;
            }
      return out;
    };
    for (const GroupElement& g : group.enumerate())
      for (const GroupElement& h : group.enumerate()) {
        const std::vector<cplx> lhs = pair_tensor(g, h);
        const std::vector<cplx> rhs =
            pair_tensor(group.identity(), group.op(g, h));
        for (std::size_t idx = 0; idx < lhs.size(); ++idx)
          worst_local = std::max(worst_local, std::abs(lhs[idx] - rhs[idx]));
      }
  }

  r.pass = worst <= kLabelTol && worst_local <= kAlgebraLawTol;
  r.detail = "4 fixtures x " + std::to_string(kRedistributions) +
             " redistributions, max residual " + sci(worst) + " (tol " +
             sci(kLabelTol) + "); local slide identity max " +
             sci(worst_local) + " (tol " + sci(kAlgebraLawTol) + ")";
  if (!r.pass && worst > kLabelTol) r.detail += "; worst " + worst_case;
  return r;
}

// ---------------------------------------------------------------------------
// 4. The group acts by algebra automorphisms compatible with product, unit
//    and form, and generator images compose along the group law.
CriterionResult criterion_frobenius(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "twisted Frobenius laws hold";
  std::mt19937_64 rng = criterion_rng(opts, 4);
  const std::vector<FiniteAbelianGroup> groups = {
      make_group({2}), make_group({4}), make_group({2, 3})};
  const std::vector<BlockAlgebra> algebras = fixture_algebras(opts.algebra_tol);

  double worst = 0.0;
  std::string worst_case;
  auto note = [&](double res, const std::string& what) {
    if (res > worst) {
      worst = res;
      worst_case = what;
    }
  };
  int actions = 0;
  for (const FiniteAbelianGroup& group : groups) {
    const std::vector<GroupElement> elements = group.enumerate();
    for (const BlockAlgebra& ba : algebras) {
      const Algebra& alg = ba.algebra;
      const std::size_t d = alg.dim();
      for (int rep = 0; rep < 2; ++rep) {
        const GAction action = random_action(rng, group, ba);
        ++actions;
        for (const GroupElement& g : elements) {
          const Vector phi = action.image(g);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
              Vector ei = Vector::Zero(static_cast<Eigen::Index>(d));
              Vector ej = Vector::Zero(static_cast<Eigen::Index>(d));
              ei(static_cast<Eigen::Index>(i)) = 1.0;
              ej(static_cast<Eigen::Index>(j)) = 1.0;
              const Vector prod = alg.multiply(ei, ej);
              const Vector lhs = action.act(g, prod);
              const Vector via_left = alg.multiply(action.act(g, ei), ej);
              const Vector via_right = alg.multiply(ei, action.act(g, ej));
              note((lhs - via_left).cwiseAbs().maxCoeff(),
                   "module law (left), " + ba.name);
              note((lhs - via_right).cwiseAbs().maxCoeff(),
                   "module law (right), " + ba.name);
              note(std::abs(alg.form(ei, action.act(g, ej)) -
                            alg.form(action.act(g, ei), ej)),
                   "form balance, " + ba.name);
            }
        }
        for (const GroupElement& g : elements)
          for (const GroupElement& h : elements) {
            const Vector lhs = alg.multiply(action.image(g), action.image(h));
            const Vector rhs = action.image(group.op(g, h));
            note((lhs - rhs).cwiseAbs().maxCoeff(),
                 "homomorphism law, " + ba.name);
          }
      }
    }
  }
  r.pass = worst <= kAlgebraLawTol;
  r.detail = std::to_string(actions) + " random actions, max residual " +
             sci(worst) + " (tol " + sci(kAlgebraLawTol) + ")";
  if (!r.pass) r.detail += "; worst at " + worst_case;
  return r;
}

// ---------------------------------------------------------------------------
// 5. The evaluation/coevaluation pair satisfies the triangular identities
//    and flip/unflip are mutually inverse, for every stock algebra.
CriterionResult criterion_zigzag(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "duality zig-zag identities hold";
  const FiniteAbelianGroup group = trivial_group();
  double worst = 0.0;
  std::string worst_case;
  for (const BlockAlgebra& ba : fixture_algebras(opts.algebra_tol)) {
    const Algebra& alg = ba.algebra;
    const GAction action = GAction::trivial(group, alg);
    const Eigen::Index d = static_cast<Eigen::Index>(alg.dim());
    const Matrix eye = Matrix::Identity(d, d);
    const std::array<std::pair<std::string, std::string>, 4> cases = {{
        {"(eta * id(+)) ; (id(+) * eps)", "zigzag +"},
        {"(id(-) * eta) ; (eps * id(-))", "zigzag -"},
        {"flip ; unflip", "flip;unflip"},
        {"unflip ; flip", "unflip;flip"},
    }};
    for (const auto& [text, label] : cases) {
      const Matrix m = evaluate_word(parse(text), alg, action);
      const double res = max_abs_diff(m, eye);
      if (res > worst) {
        worst = res;
        worst_case = label + " on " + ba.name;
      }
    }
  }
  r.pass = worst <= kZigzagTol;
  r.detail = "5 algebras x 4 identities, max deviation from identity " +
             sci(worst) + " (tol " + sci(kZigzagTol) + ")";
  if (!r.pass) r.detail += "; worst " + worst_case;
  return r;
}

// ---------------------------------------------------------------------------
// 6. twist(g) ; twist(h) evaluates to twist(g + h) for every pair, over all
//    stock groups of order <= 12.
CriterionResult criterion_twist(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "twist composes along the group law";
  std::mt19937_64 rng = criterion_rng(opts, 6);
  double worst = 0.0;
  std::string worst_case;
  long pairs = 0;
  for (const FiniteAbelianGroup& group : small_groups()) {
    const BlockAlgebra ba = random_block_algebra(rng, 6, opts.algebra_tol);
    const GAction action = random_action(rng, group, ba);
    const std::vector<GroupElement> elements = group.enumerate();
    for (const GroupElement& g : elements)
      for (const GroupElement& h : elements) {
        const WordPtr composed =
            make_compose(make_twist(g.residues), make_twist(h.residues));
        const WordPtr direct = make_twist(group.op(g, h).residues);
        const double res =
            max_abs_diff(evaluate_word(composed, ba.algebra, action),
                         evaluate_word(direct, ba.algebra, action));
        ++pairs;
        if (res > worst) {
          worst = res;
          worst_case = ba.name + " over group order " +
                       std::to_string(group.order());
        }
      }
  }
  r.pass = worst <= kTwistTol;
  r.detail = std::to_string(pairs) + " pairs across " +
             std::to_string(small_groups().size()) +
             " groups, max residual " + sci(worst) + " (tol " + sci(kTwistTol) +
             ")";
  if (!r.pass) r.detail += "; worst " + worst_case;
  return r;
}

// ---------------------------------------------------------------------------
// 7. The closed-genus word evaluates to the same number as the state sum of
//    the matching labeled surface, and both match the block closed form.
CriterionResult criterion_functor(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "cobordism functor reproduces the state sum";
  const FiniteAbelianGroup z4 = make_group({4});
  const cplx iu(0.0, 1.0);

  struct Case {
    BlockAlgebra ba;
    GAction action;
    std::vector<cplx> zeta;  // block phase of the generator image
  };
  std::vector<Case> cases;
  {
    BlockAlgebra gf = fixture_ground_field(opts.algebra_tol);
    GAction a = GAction::make(z4, gf.algebra, {central_image(gf, {1}, 4)});
    cases.push_back({std::move(gf), std::move(a), {iu}});
  }
  {
    BlockAlgebra cz2 = fixture_cyclic_2(opts.algebra_tol);
    GAction a = GAction::make(z4, cz2.algebra,
                              {central_image(cz2, {0, 1}, 4)});
    cases.push_back({std::move(cz2), std::move(a), {1.0, iu}});
  }
  {
    BlockAlgebra m2 = fixture_matrix_2(opts.algebra_tol);
    GAction a = GAction::make(z4, m2.algebra, {central_image(m2, {1}, 4)});
    cases.push_back({std::move(m2), std::move(a), {iu}});
  }

  double worst_pair = 0.0;    // state sum vs word functor
  double worst_closed = 0.0;  // both vs block closed form
  std::string worst_case;
  int comparisons = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Case& cs = cases[c];
    for (int h = 0; h <= 2; ++h)
      for (long k = 0; k < 4; ++k) {
        const GroupElement g{{k}};
        const LabeledSurface surf = make_genus_surface(h, z4, g);
        const cplx zs = evaluate(surf, cs.ba.algebra, cs.action);
        const Matrix wm = evaluate_word(closed_genus_word(h, g),
                                        cs.ba.algebra, cs.action);
        const cplx zw = wm(0, 0);
        const double res = rel_residual(zs, zw);
        ++comparisons;
        if (res > worst_pair) {
          worst_pair = res;
          worst_case = cs.ba.name + ", h=" + std::to_string(h) + ", class [" +
                       std::to_string(k) + "]";
        }
        cplx closed = 0.0;
        for (std::size_t b = 0; b < cs.zeta.size(); ++b) {
          cplx zeta_g = 1.0;
          for (long rep = 0; rep < k; ++rep) zeta_g *= cs.zeta[b];
          closed += zeta_g * std::pow(static_cast<double>(cs.ba.blocks[b]),
                                      2.0 - 2.0 * h);
        }
        worst_closed = std::max(worst_closed, rel_residual(zs, closed));
        worst_closed = std::max(worst_closed, rel_residual(zw, closed));
      }
  }

  // Cross-checks against the brute-force oracle on the torus.
  {
    const Case& gf = cases[0];
    for (long k = 0; k < 4; ++k) {
      const GroupElement g{{k}};
      const LabeledSurface torus = make_genus_surface(1, z4, g);
      const cplx zo = evaluate_bruteforce(torus, gf.ba.algebra, gf.action);
      cplx expect = 1.0;
      for (long rep = 0; rep < k; ++rep) expect *= iu;
      worst_closed = std::max(worst_closed, rel_residual(zo, expect));
    }
  }
  {
    const FiniteAbelianGroup group = trivial_group();
    const BlockAlgebra m2pc = fixture_m2_plus_c(opts.algebra_tol);
    const GAction action = GAction::trivial(group, m2pc.algebra);
    const LabeledSurface torus = make_torus(group);
    const cplx zs = evaluate(torus, m2pc.algebra, action);
    const cplx zo = evaluate_bruteforce(torus, m2pc.algebra, action);
    const Matrix wm = evaluate_word(closed_genus_word(1, group.identity()),
                                    m2pc.algebra, action);
    worst_closed = std::max(worst_closed, rel_residual(zs, cplx(2.0)));
    worst_closed = std::max(worst_closed, rel_residual(zo, cplx(2.0)));
    worst_closed = std::max(worst_closed, rel_residual(wm(0, 0), cplx(2.0)));
  }

  r.pass = worst_pair <= kFunctorTol && worst_closed <= kFunctorTol;
  r.detail = std::to_string(comparisons) +
             " genus/class cases, max |state sum - word| residual " +
             sci(worst_pair) + ", max closed-form residual " +
             sci(worst_closed) + " (tol " + sci(kFunctorTol) + ")";
  if (!r.pass && !worst_case.empty()) r.detail += "; worst " + worst_case;
  return r;
}

// ---------------------------------------------------------------------------
// 8. Constructors accept the stock inputs and reject degenerate or
//    incompatible ones with the specific documented error kinds.
CriterionResult criterion_construction(const AcceptanceOptions& opts) {
  CriterionResult r;
  r.name = "constructor accepts valid and rejects invalid input";
  std::vector<std::string> failures;

  auto expect_ok = [&](const std::string& what, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      failures.push_back(what + " unexpectedly rejected (" + e.what() + ")");
    }
  };
  auto expect_err = [&](const std::string& what, Err kind, auto&& fn) {
    try {
      fn();
      failures.push_back(what + " unexpectedly accepted");
    } catch (const Error& e) {
      if (e.kind() != kind)
        failures.push_back(what + " raised " + std::string(e.name()) +
                           " instead of " + err_name(kind));
    }
  };

  const double tol = opts.algebra_tol;
  const FiniteAbelianGroup z2 = make_group({2});
  const FiniteAbelianGroup z4 = make_group({4});
  const FiniteAbelianGroup z2z3 = make_group({2, 3});

  // Stock algebras and compatible actions must construct.
  expect_ok("stock algebras", [&] { fixture_algebras(tol); });
  {
    const BlockAlgebra gf = fixture_ground_field(tol);
    expect_ok("ground field with order-4 phase", [&] {
      GAction::make(z4, gf.algebra, {central_image(gf, {1}, 4)});
    });
  }
  {
    const BlockAlgebra cz2 = fixture_cyclic_2(tol);
    expect_ok("group algebra with sign action", [&] {
      GAction::make(z2, cz2.algebra, {central_image(cz2, {0, 1}, 2)});
    });
  }
  {
    const BlockAlgebra cz3 = fixture_cyclic_3(tol);
    expect_ok("two-generator action on the cyclic algebra", [&] {
      GAction::make(z2z3, cz3.algebra,
                    {central_image(cz3, {0, 1, 1}, 2),
                     central_image(cz3, {0, 1, 2}, 3)});
    });
  }
  {
    const BlockAlgebra m2pc = fixture_m2_plus_c(tol);
    expect_ok("block phases on the two-block algebra", [&] {
      GAction::make(z4, m2pc.algebra, {central_image(m2pc, {1, 2}, 4)});
    });
  }

  // Degenerate trace form: dual numbers C[x]/(x^2).
  {
    std::vector<cplx> structure, unit;
    Algebra::dual_numbers_inputs(structure, unit);
    expect_err("dual numbers", Err::SingularMetric,
               [&] { Algebra::make(2, structure, unit, tol); });
  }
  // Broken associativity: perturb one structure constant of M_2.
  {
    const BlockAlgebra m2 = fixture_matrix_2(tol);
    const Vector& u = m2.algebra.unit();
    const std::vector<cplx> unit(u.data(), u.data() + u.size());
    std::vector<cplx> structure = m2.algebra.structure();
    structure[(1 * 4 + 2) * 4 + 0] = 0.7;  // e01 * e10 = 0.7 e00
    expect_err("perturbed matrix algebra", Err::NotAssociative,
               [&] { Algebra::make(4, structure, unit, tol); });
  }
  // Wrong unit vector.
  {
    const BlockAlgebra m2 = fixture_matrix_2(tol);
    std::vector<cplx> unit(4, cplx(0.0));
    unit[0] = 1.0;  // e00 alone is only a one-sided partial identity
    expect_err("wrong unit", Err::BadUnit,
               [&] { Algebra::make(4, m2.algebra.structure(), unit, tol); });
  }
  // Non-central generator image.
  {
    const BlockAlgebra m2 = fixture_matrix_2(tol);
    Vector swap = Vector::Zero(4);
    swap(1) = 1.0;  // e01
    swap(2) = 1.0;  // e10
    expect_err("off-diagonal involution image", Err::NotCentral,
               [&] { GAction::make(z2, m2.algebra, {swap}); });
  }
  // Central but non-invertible image.
  {
    const BlockAlgebra cz2 = fixture_cyclic_2(tol);
    expect_err("zero image", Err::NotInvertible, [&] {
      GAction::make(z2, cz2.algebra, {Vector::Zero(2)});
    });
  }
  // Central invertible image of the wrong multiplicative order.
  {
    const BlockAlgebra m2 = fixture_matrix_2(tol);
    expect_err("order-4 phase on an order-2 generator", Err::OrderViolation,
               [&] { GAction::make(z2, m2.algebra, {central_image(m2, {1}, 4)}); });
  }

  r.pass = failures.empty();
  if (r.pass) {
    r.detail = "5 constructions accepted, 6 rejections with the expected "
               "error kinds";
  } else {
    r.detail = failures.front();
    if (failures.size() > 1)
      r.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
  }
  return r;
}

using CriterionFn = CriterionResult (*)(const AcceptanceOptions&);
constexpr std::array<CriterionFn, 8> kCriteria = {
    criterion_oracle,  criterion_moves,   criterion_labels,
    criterion_frobenius, criterion_zigzag, criterion_twist,
    criterion_functor, criterion_construction,
};

CriterionResult run_one(int index, const AcceptanceOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kCriteria[static_cast<std::size_t>(index)](opts);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("unexpected error: ") + e.what();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected exception: ") + e.what();
  }
  r.number = index + 1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  const double budget = kTimeBudget[static_cast<std::size_t>(index)];
  if (budget > 0 && r.seconds >= budget) {
    r.pass = false;
    r.detail += "; exceeded time budget of " + sci(budget) + " s";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  out.reserve(kCriteria.size());
  if (opts.parallel) {
    std::vector<std::future<CriterionResult>> futures;
    futures.reserve(kCriteria.size());
    for (int i = 0; i < static_cast<int>(kCriteria.size()); ++i)
      futures.push_back(
          std::async(std::launch::async, [i, &opts] { return run_one(i, opts); }));
    for (auto& f : futures) out.push_back(f.get());
  } else {
    for (int i = 0; i < static_cast<int>(kCriteria.size()); ++i)
      out.push_back(run_one(i, opts));
  }
  return out;
}

int print_acceptance(const std::vector<CriterionResult>& results,
                     std::ostream& os) {
  int failed = 0;
  for (const CriterionResult& r : results) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.number << ": "
       << r.name << " — " << r.detail << " [" << sci(r.seconds) << " s]\n";
    if (!r.pass) ++failed;
  }
  os << "acceptance: " << (results.size() - static_cast<std::size_t>(failed))
     << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 3;
}

}  // namespace hss
