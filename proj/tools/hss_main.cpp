#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hss/shell.hpp"

int main(int argc, char** argv) {
  CLI::App app{"State sums and cobordism words for labeled surfaces"};
  app.require_subcommand(1);

  hss::ShellOptions opts;
  app.add_option("--tol", opts.tol, "construction tolerance epsilon")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized suites")
      ->capture_default_str();
  app.add_flag("--parallel", opts.parallel,
               "run independent checks concurrently");

  std::string algebra_file, group_file, action_file;

  auto* check = app.add_subcommand(
      "check-algebra", "validate an algebra (and optional action) file");
  check->add_option("algebra", algebra_file, "algebra JSON file")->required();
  check->add_option("--group", group_file, "group JSON file");
  check->add_option("--action", action_file, "action JSON file");

  std::string ss_surface;
  bool ss_oracle = false;
  double ss_guard = 1e7, ss_cap = 1e8;
  auto* statesum = app.add_subcommand(
      "statesum", "evaluate the state sum of a labeled surface");
  statesum->add_option("surface", ss_surface, "surface JSON file")->required();
  statesum->add_option("algebra", algebra_file, "algebra JSON file")
      ->required();
  statesum->add_option("--group", group_file, "group JSON file");
  statesum->add_option("--action", action_file, "action JSON file");
  statesum->add_flag("--oracle", ss_oracle,
                     "also run the brute-force oracle and print the difference");
  statesum->add_option("--guard", ss_guard,
                       "max brute-force colorings with --oracle")
      ->capture_default_str();
  statesum->add_option("--cap", ss_cap, "max intermediate tensor entries")
      ->capture_default_str();

  std::string or_surface;
  double or_guard = 1e7;
  auto* oracle = app.add_subcommand(
      "oracle", "evaluate the state sum by literal enumeration");
  oracle->add_option("surface", or_surface, "surface JSON file")->required();
  oracle->add_option("algebra", algebra_file, "algebra JSON file")->required();
  oracle->add_option("--group", group_file, "group JSON file");
  oracle->add_option("--action", action_file, "action JSON file");
  oracle->add_option("--guard", or_guard, "max colorings")
      ->capture_default_str();

  std::string mv_surface, mv_out;
  hss::MoveSpec spec;
  auto* move = app.add_subcommand("move", "apply a move to a surface file");
  move->add_option("surface", mv_surface, "surface JSON file")->required();
  move->add_option("--move", spec.kind,
                   "pachner22 | pachner13 | pachner31 | shift")
      ->required();
  move->add_option("--index", spec.index, "gluing index (pachner22)");
  move->add_option("--triangle", spec.triangle,
                   "triangle index (pachner13/pachner31)");
  move->add_option("--corner", spec.corner, "corner 0-2 (pachner31)");
  move->add_option("--from", spec.from, "source triangle (shift)");
  move->add_option("--to", spec.to, "target triangle (shift)");
  move->add_option("--out", mv_out, "path for the moved surface");
  move->add_option("--group", group_file, "group JSON file");

  std::string cb_expr;
  auto* cobord = app.add_subcommand(
      "cobord", "evaluate a cobordism word to a matrix");
  cobord->add_option("expr", cb_expr, "word expression")->required();
  cobord->add_option("algebra", algebra_file, "algebra JSON file")->required();
  cobord->add_option("--group", group_file, "group JSON file");
  cobord->add_option("--action", action_file, "action JSON file");

  int gn_h = 0;
  std::vector<long> gn_class;
  auto* genus = app.add_subcommand(
      "genus", "build a genus-h surface and its word, compare both values");
  genus->add_option("genus", gn_h, "genus h of the surface")->required();
  genus->add_option("algebra", algebra_file, "algebra JSON file")->required();
  genus->add_option("--group", group_file, "group JSON file");
  genus->add_option("--action", action_file, "action JSON file");
  genus->add_option("--class", gn_class, "total class residues")
      ->delimiter(',');

  auto* acceptance =
      app.add_subcommand("acceptance", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  return hss::run_guarded(
      [&]() -> int {
        if (*check)
          return hss::cmd_check_algebra(algebra_file, group_file, action_file,
                                        opts, std::cout);
        if (*statesum)
          return hss::cmd_statesum(ss_surface, algebra_file, group_file,
                                   action_file, ss_oracle, ss_guard, ss_cap,
                                   opts, std::cout);
        if (*oracle)
          return hss::cmd_oracle(or_surface, algebra_file, group_file,
                                 action_file, or_guard, opts, std::cout);
        if (*move)
          return hss::cmd_move(mv_surface, group_file, spec, mv_out, opts,
                               std::cout);
        if (*cobord)
          return hss::cmd_cobord(cb_expr, algebra_file, group_file,
                                 action_file, opts, std::cout);
        if (*genus)
          return hss::cmd_genus(gn_h, gn_class, algebra_file, group_file,
                                action_file, opts, std::cout);
        if (*acceptance) return hss::cmd_acceptance(opts, std::cout);
        return 1;
      },
      std::cerr);
}
