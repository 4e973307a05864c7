#include "hss/shell.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hss/acceptance.hpp"
#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/cobord.hpp"
#include "hss/error.hpp"
#include "hss/io.hpp"
#include "hss/report.hpp"
#include "hss/statesum.hpp"
#include "hss/surface.hpp"

namespace hss {
namespace {

using ordered_json = nlohmann::ordered_json;

// Fixed comparison tolerance for cross-pipeline checks; --tol only changes
// the construction epsilon.
constexpr double kCompareTol = 1e-8;

std::string fmt(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string fmt(const GroupElement& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.residues[i]);
  }
  return s + "]";
}

std::string fmt(const std::vector<GroupElement>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += " ";
    s += fmt(classes[i]);
  }
  return s;
}

/// Owns the loaded objects; pointers keep the GAction's algebra reference
/// stable under moves.
struct Context {
  FiniteAbelianGroup group = trivial_group();
  std::unique_ptr<Algebra> algebra;
  std::unique_ptr<GAction> action;
};

Context load_context(const std::string& algebra_file,
                     const std::string& group_file,
                     const std::string& action_file, double tol) {
  Context ctx;
  if (!group_file.empty()) ctx.group = read_group(group_file);
  ctx.algebra = std::make_unique<Algebra>(read_algebra(algebra_file, tol));
  if (!action_file.empty())
    ctx.action = std::make_unique<GAction>(
        read_action(action_file, ctx.group, *ctx.algebra));
  else
    ctx.action =
        std::make_unique<GAction>(GAction::trivial(ctx.group, *ctx.algebra));
  return ctx;
}

ordered_json class_json(const std::vector<GroupElement>& classes) {
  ordered_json arr = ordered_json::array();
  for (const GroupElement& g : classes) {
    ordered_json residues = ordered_json::array();
    for (long r : g.residues) residues.push_back(r);
    arr.push_back(std::move(residues));
  }
  return arr;
}

ordered_json surface_json(const LabeledSurface& surf, cplx z,
                          double plan_cost) {
  ordered_json j;
  j["Z"] = {z.real(), z.imag()};
  j["chi"] = surf.euler_characteristic();
  if (surf.components().size() == 1)
    j["genus"] = surf.genus();
  else
    j["genus"] = nullptr;
  j["total_class"] = class_json(surf.total_class());
  if (plan_cost <= 9.0e15)
    j["plan_cost"] = static_cast<long long>(std::llround(plan_cost));
  else
    j["plan_cost"] = plan_cost;
  return j;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Err::SingularMetric:
      case Err::PlanOverflow:
      case Err::TooLarge:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_check_algebra(const std::string& algebra_file,
                      const std::string& group_file,
                      const std::string& action_file, const ShellOptions& opts,
                      std::ostream& out) {
  Stopwatch watch;
  RunReport rep;
  rep.command = "check-algebra " + algebra_file;
  rep.inputs.emplace_back(algebra_file, file_digest(algebra_file));
  if (!group_file.empty())
    rep.inputs.emplace_back(group_file, file_digest(group_file));
  if (!action_file.empty())
    rep.inputs.emplace_back(action_file, file_digest(action_file));

  const Context ctx =
      load_context(algebra_file, group_file, action_file, opts.tol);
  const Algebra& alg = *ctx.algebra;
  const std::size_t d = alg.dim();
  const double tol = opts.tol;

  rep.outputs.emplace_back("dim", std::to_string(d));

  // Associativity: (e_i e_j) e_k = e_i (e_j e_k).
  double assoc = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          cplx lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += alg.c(i, j, m) * alg.c(m, k, l);
            rhs += alg.c(j, k, m) * alg.c(i, m, l);
          }
          assoc = std::max(assoc, std::abs(lhs - rhs));
        }
  rep.add_check("associativity", assoc, tol);

  // Unit element on both sides.
  double unit_res = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    Vector ei = Vector::Zero(static_cast<Eigen::Index>(d));
    ei(static_cast<Eigen::Index>(i)) = 1.0;
    unit_res = std::max(
        unit_res,
        (alg.multiply(alg.unit(), ei) - ei).cwiseAbs().maxCoeff());
    unit_res = std::max(
        unit_res,
        (alg.multiply(ei, alg.unit()) - ei).cwiseAbs().maxCoeff());
  }
  rep.add_check("unit", unit_res, tol);

  const Matrix& g = alg.metric();
  rep.add_check("metric_symmetry",
                (g - g.transpose()).cwiseAbs().maxCoeff(), tol);
  rep.add_check("metric_inverse",
                (g * alg.inv_metric() -
                 Matrix::Identity(static_cast<Eigen::Index>(d),
                                  static_cast<Eigen::Index>(d)))
                    .cwiseAbs()
                    .maxCoeff(),
                tol);

  double cyclic = 0.0;
  double frob = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        cyclic = std::max(cyclic,
                          std::abs(alg.lowered(i, j, k) - alg.lowered(j, k, i)));
        // g(e_i e_j, e_k) vs g(e_i, e_j e_k)
        cplx lhs = 0, rhs = 0;
        for (std::size_t m = 0; m < d; ++m) {
          lhs += alg.c(i, j, m) * g(static_cast<Eigen::Index>(m),
                                    static_cast<Eigen::Index>(k));
          rhs += alg.c(j, k, m) * g(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(m));
        }
        frob = std::max(frob, std::abs(lhs - rhs));
      }
  rep.add_check("metric_cyclicity", cyclic, tol);
  rep.add_check("frobenius_compatibility", frob, tol);

  rep.outputs.emplace_back("center_dim",
                           std::to_string(alg.center_basis().size()));
  if (d <= 8) {
    std::ostringstream ms;
    ms << "[";
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      if (r) ms << "; ";
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        if (c) ms << " ";
        ms << fmt(g(r, c));
      }
    }
    ms << "]";
    rep.outputs.emplace_back("metric", ms.str());
  }

  if (!action_file.empty()) {
    const GAction& action = *ctx.action;
    const FiniteAbelianGroup& group = ctx.group;
    const std::size_t nf = group.rank();
    double central = 0.0, order_res = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
      const Vector& v = action.generator_images()[f];
      central = std::max(central,
                         (alg.left_mult_matrix(v) - alg.right_mult_matrix(v))
                             .cwiseAbs()
                             .maxCoeff());
      Vector power = alg.unit();
      for (long n = 0; n < group.orders()[f]; ++n) power = alg.multiply(power, v);
      order_res =
          std::max(order_res, (power - alg.unit()).cwiseAbs().maxCoeff());
    }
    rep.add_check("action_centrality", central, tol);
    rep.add_check("action_order", order_res, tol);

    // Module laws over the generators and a homomorphism check over all
    // element pairs when the group is small.
    double module = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
      GroupElement gen = group.identity();
      gen.residues[f] = 1 % group.orders()[f];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Vector ei = Vector::Zero(static_cast<Eigen::Index>(d));
          Vector ej = Vector::Zero(static_cast<Eigen::Index>(d));
          ei(static_cast<Eigen::Index>(i)) = 1.0;
          ej(static_cast<Eigen::Index>(j)) = 1.0;
          const Vector lhs = action.act(gen, alg.multiply(ei, ej));
          module = std::max(module,
                            (lhs - alg.multiply(action.act(gen, ei), ej))
                                .cwiseAbs()
                                .maxCoeff());
          module = std::max(module,
                            (lhs - alg.multiply(ei, action.act(gen, ej)))
                                .cwiseAbs()
                                .maxCoeff());
          module = std::max(module,
                            std::abs(alg.form(ei, action.act(gen, ej)) -
                                     alg.form(action.act(gen, ei), ej)));
        }
    }
    rep.add_check("action_module_laws", module, tol);

    if (group.order() <= 32) {
      double hom = 0.0;
      const std::vector<GroupElement> elements = group.enumerate();
      for (const GroupElement& a : elements)
        for (const GroupElement& b : elements)
          hom = std::max(hom,
                         (alg.multiply(action.image(a), action.image(b)) -
                          action.image(group.op(a, b)))
                             .cwiseAbs()
                             .maxCoeff());
      rep.add_check("action_homomorphism", hom, tol);
    }
  }

  rep.wall_seconds = watch.seconds();
  rep.print(out);
  return rep.ok() ? 0 : 1;
}

int cmd_statesum(const std::string& surface_file,
                 const std::string& algebra_file, const std::string& group_file,
                 const std::string& action_file, bool with_oracle,
                 double oracle_guard, double size_cap, const ShellOptions& opts,
                 std::ostream& out) {
  const Context ctx =
      load_context(algebra_file, group_file, action_file, opts.tol);
  const LabeledSurface surf = read_surface(surface_file, ctx.group);

  const ContractionPlan plan = plan_contraction(dual_graph(surf));
  EvalOptions eval_opts;
  eval_opts.size_cap = size_cap;
  const cplx z = evaluate(surf, *ctx.algebra, *ctx.action, eval_opts);

  ordered_json j = surface_json(surf, z, plan.cost(ctx.algebra->dim()));
  if (with_oracle) {
    OracleOptions oracle_opts;
    oracle_opts.guard = oracle_guard;
    const cplx zo =
        evaluate_bruteforce(surf, *ctx.algebra, *ctx.action, oracle_opts);
    j["oracle"] = {zo.real(), zo.imag()};
    j["difference"] = std::abs(z - zo);
  }
  out << j.dump() << "\n";
  return 0;
}

int cmd_oracle(const std::string& surface_file, const std::string& algebra_file,
               const std::string& group_file, const std::string& action_file,
               double oracle_guard, const ShellOptions& opts,
               std::ostream& out) {
  const Context ctx =
      load_context(algebra_file, group_file, action_file, opts.tol);
  const LabeledSurface surf = read_surface(surface_file, ctx.group);

  OracleOptions oracle_opts;
  oracle_opts.guard = oracle_guard;
  const cplx z = evaluate_bruteforce(surf, *ctx.algebra, *ctx.action,
                                     oracle_opts);

  ordered_json j;
  j["Z"] = {z.real(), z.imag()};
  j["chi"] = surf.euler_characteristic();
  if (surf.components().size() == 1)
    j["genus"] = surf.genus();
  else
    j["genus"] = nullptr;
  j["total_class"] = class_json(surf.total_class());
  j["colorings"] =
      std::pow(static_cast<double>(ctx.algebra->dim()),
               static_cast<double>(3 * surf.num_triangles()));
  out << j.dump() << "\n";
  return 0;
}

int cmd_move(const std::string& surface_file, const std::string& group_file,
             const MoveSpec& move, const std::string& out_file,
             const ShellOptions& opts, std::ostream& out) {
  (void)opts;
  Stopwatch watch;
  FiniteAbelianGroup group = trivial_group();
  if (!group_file.empty()) group = read_group(group_file);
  const LabeledSurface surf = read_surface(surface_file, group);

  RunReport rep;
  rep.command = "move " + move.kind + " on " + surface_file;
  rep.inputs.emplace_back(surface_file, file_digest(surface_file));
  if (!group_file.empty())
    rep.inputs.emplace_back(group_file, file_digest(group_file));

  LabeledSurface moved = [&] {
    if (move.kind == "pachner22") {
      if (move.index < 0) fail(Err::BadFile, "pachner22 needs --index");
      return surf.pachner_22(static_cast<std::size_t>(move.index));
    }
    if (move.kind == "pachner13") {
      if (move.triangle < 0) fail(Err::BadFile, "pachner13 needs --triangle");
      return surf.pachner_13(static_cast<int>(move.triangle));
    }
    if (move.kind == "pachner31") {
      if (move.triangle < 0 || move.corner < 0)
        fail(Err::BadFile, "pachner31 needs --triangle and --corner");
      return surf.pachner_31(Corner{static_cast<int>(move.triangle),
                                    static_cast<int>(move.corner)});
    }
    if (move.kind == "shift") {
      if (move.from < 0 || move.to < 0)
        fail(Err::BadFile, "shift needs --from and --to");
      return surf.homotopy_shift(static_cast<int>(move.from),
                                 static_cast<int>(move.to));
    }
    fail(Err::BadFile,
         "move kind must be pachner22, pachner13, pachner31 or shift");
  }();

  rep.outputs.emplace_back("triangles_before",
                           std::to_string(surf.num_triangles()));
  rep.outputs.emplace_back("triangles_after",
                           std::to_string(moved.num_triangles()));
  rep.outputs.emplace_back("chi_before",
                           std::to_string(surf.euler_characteristic()));
  rep.outputs.emplace_back("chi_after",
                           std::to_string(moved.euler_characteristic()));
  rep.outputs.emplace_back("total_class_before", fmt(surf.total_class()));
  rep.outputs.emplace_back("total_class_after", fmt(moved.total_class()));
  rep.add_flag("euler_characteristic_preserved",
               surf.euler_characteristic() == moved.euler_characteristic(),
               "");
  rep.add_flag("total_class_preserved",
               surf.total_class() == moved.total_class(), "");

  if (!out_file.empty()) {
    write_surface(out_file, moved);
    rep.outputs.emplace_back("written", out_file);
  }

  rep.wall_seconds = watch.seconds();
  rep.print(out);
  return rep.ok() ? 0 : 1;
}

int cmd_cobord(const std::string& expression, const std::string& algebra_file,
               const std::string& group_file, const std::string& action_file,
               const ShellOptions& opts, std::ostream& out) {
  const Context ctx =
      load_context(algebra_file, group_file, action_file, opts.tol);
  const WordPtr word = parse(expression);
  const auto [domain, codomain] = typecheck(word);
  const Matrix m = evaluate_word(word, *ctx.algebra, *ctx.action);

  ordered_json j;
  j["domain"] = domain;
  j["codomain"] = codomain;
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  out << j.dump() << "\n";
  return 0;
}

int cmd_genus(int h, const std::vector<long>& cls,
              const std::string& algebra_file, const std::string& group_file,
              const std::string& action_file, const ShellOptions& opts,
              std::ostream& out) {
  Stopwatch watch;
  const Context ctx =
      load_context(algebra_file, group_file, action_file, opts.tol);
  GroupElement total = ctx.group.identity();
  if (!cls.empty()) total = ctx.group.reduce(cls);

  const LabeledSurface surf = make_genus_surface(h, ctx.group, total);
  const cplx zs = evaluate(surf, *ctx.algebra, *ctx.action);
  const Matrix wm = evaluate_word(closed_genus_word(h, total), *ctx.algebra,
                                  *ctx.action);
  const cplx zw = wm(0, 0);

  RunReport rep;
  rep.command = "genus " + std::to_string(h) + " class " + fmt(total);
  rep.inputs.emplace_back(algebra_file, file_digest(algebra_file));
  if (!group_file.empty())
    rep.inputs.emplace_back(group_file, file_digest(group_file));
  if (!action_file.empty())
    rep.inputs.emplace_back(action_file, file_digest(action_file));
  rep.outputs.emplace_back("Z_statesum", fmt(zs));
  rep.outputs.emplace_back("Z_word", fmt(zw));
  rep.outputs.emplace_back("triangles", std::to_string(surf.num_triangles()));
  const double residual =
      std::abs(zs - zw) / (1.0 + std::max(std::abs(zs), std::abs(zw)));
  rep.add_check("pipelines_agree", residual, kCompareTol);

  rep.wall_seconds = watch.seconds();
  rep.print(out);
  return rep.ok() ? 0 : 1;
}

int cmd_acceptance(const ShellOptions& opts, std::ostream& out) {
  AcceptanceOptions ao;
  ao.seed = opts.seed;
  ao.algebra_tol = opts.tol;
  ao.parallel = opts.parallel;
  const std::vector<CriterionResult> results = run_acceptance(ao);
  return print_acceptance(results, out);
}

}  // namespace hss
