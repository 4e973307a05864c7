#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/group.hpp"
#include "hss/io.hpp"
#include "hss/surface.hpp"

using namespace hss;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

/// Run the installed binary with the given arguments, stderr folded into
/// stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HSS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "hss-shell-XXXXXX").string();
    char* made = mkdtemp(tmpl.data());
    REQUIRE(made != nullptr);
    static struct Cleanup {
      std::filesystem::path p;
      ~Cleanup() {
        std::error_code ec;
        std::filesystem::remove_all(p, ec);
      }
    } cleanup{made};
    return cleanup.p;
  }();
  return dir;
}

std::string path_of(const std::string& name) {
  return (scratch() / name).string();
}

/// Fixture files, written once through the library's own writers.
struct Files {
  std::string sphere, torus, twisted_torus, two_spheres;
  std::string ground, cz2, m2, m2c, dual;
  std::string z2, z4;
  std::string phase_i, minus_one;
};

const Files& files() {
  static const Files f = [] {
    Files out;
    const FiniteAbelianGroup triv = trivial_group();
    const FiniteAbelianGroup z2 = make_group({2});
    const FiniteAbelianGroup z4 = make_group({4});

    out.sphere = path_of("sphere.json");
    write_surface(out.sphere, make_sphere(triv));
    out.torus = path_of("torus.json");
    write_surface(out.torus, make_torus(triv));
    out.twisted_torus = path_of("twisted_torus.json");
    write_surface(out.twisted_torus,
                  make_genus_surface(1, z4, GroupElement{{3}}));
    out.two_spheres = path_of("two_spheres.json");
    write_surface(out.two_spheres,
                  disjoint_union(make_sphere(triv), make_sphere(triv)));

    const Algebra ground = Algebra::ground_field();
    const Algebra cz2 = Algebra::cyclic_group_algebra(2);
    const Algebra m2 = Algebra::matrix_algebra(2);
    out.ground = path_of("ground.json");
    write_algebra(out.ground, ground);
    out.cz2 = path_of("cz2.json");
    write_algebra(out.cz2, cz2);
    out.m2 = path_of("m2.json");
    write_algebra(out.m2, m2);
    out.m2c = path_of("m2c.json");
    write_algebra(out.m2c, Algebra::direct_sum(m2, ground));

    // x^2 = 0 with a degenerate trace form; written by hand since the
    // constructor rejects it.
    out.dual = path_of("dual.json");
    {
      std::FILE* fp = std::fopen(out.dual.c_str(), "w");
      REQUIRE(fp != nullptr);
      std::fputs(R"({"dim": 2, "unit": [[1,0],[0,0]],
                     "structure": [[0,0,0,1,0],[0,1,1,1,0],[1,0,1,1,0]]})",
                 fp);
      std::fclose(fp);
    }

    out.z2 = path_of("z2.json");
    write_group(out.z2, z2);
    out.z4 = path_of("z4.json");
    write_group(out.z4, z4);

    Vector i_img(1);
    i_img(0) = cplx(0.0, 1.0);
    out.phase_i = path_of("phase_i.json");
    write_action(out.phase_i, GAction::make(z4, ground, {i_img}));

    out.minus_one = path_of("minus_one.json");
    write_action(out.minus_one, GAction::make(z2, m2, {-m2.unit()}));
    return out;
  }();
  return f;
}

}  // namespace

TEST_CASE("statesum emits the documented JSON fields") {
  const RunResult r =
      run_cli("statesum " + files().sphere + " " + files().cz2);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["Z"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(j["Z"][1].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(j["chi"].get<int>() == 2);
  CHECK(j["genus"].get<int>() == 0);
  REQUIRE(j["total_class"].size() == 1);
  CHECK(j["total_class"][0].empty());
  CHECK(j["plan_cost"].get<long long>() > 0);
}

TEST_CASE("statesum --oracle reports the cross-check difference") {
  const RunResult r = run_cli("statesum " + files().sphere + " " +
                              files().m2c + " --oracle");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["Z"][0].get<double>() == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(j["oracle"][0].get<double>() == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(j["difference"].get<double>() <= 1e-10);
}

TEST_CASE("statesum handles twisted labels through the action file") {
  const RunResult r =
      run_cli("statesum " + files().twisted_torus + " " + files().ground +
              " --group " + files().z4 + " --action " + files().phase_i);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  // Class [3] of Z/4 through phases (i^k): Z = i^3 = -i.
  CHECK(j["Z"][0].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(j["Z"][1].get<double>() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(j["genus"].get<int>() == 1);
  CHECK(j["total_class"][0][0].get<long>() == 3);
}

TEST_CASE("statesum reports null genus for disconnected surfaces") {
  const RunResult r =
      run_cli("statesum " + files().two_spheres + " " + files().m2);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["Z"][0].get<double>() == doctest::Approx(16.0).epsilon(1e-10));
  CHECK(j["genus"].is_null());
  CHECK(j["total_class"].size() == 2);
}

TEST_CASE("statesum output is byte-identical across runs") {
  const std::string args = "statesum " + files().torus + " " + files().m2c;
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json j = json::parse(a.output);
  CHECK(j["Z"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("oracle counts its colorings and omits the plan") {
  const RunResult r = run_cli("oracle " + files().sphere + " " + files().cz2);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["Z"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(j["colorings"].get<double>() == doctest::Approx(64.0));
  CHECK(!j.contains("plan_cost"));
}

TEST_CASE("resource guards exit with the resource code") {
  const RunResult oracle_guard = run_cli(
      "oracle " + files().sphere + " " + files().m2 + " --guard 10");
  CHECK(oracle_guard.exit_code == 2);
  CHECK(oracle_guard.output.find("error:") != std::string::npos);

  const RunResult plan_cap = run_cli(
      "statesum " + files().sphere + " " + files().m2 + " --cap 2");
  CHECK(plan_cap.exit_code == 2);

  const RunResult singular = run_cli("check-algebra " + files().dual);
  CHECK(singular.exit_code == 2);
}

TEST_CASE("cobord prints the typed matrix of a word") {
  const RunResult r = run_cli("cobord pants " + files().cz2);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["domain"].get<std::string>() == "++");
  CHECK(j["codomain"].get<std::string>() == "+");
  REQUIRE(j["matrix"].size() == 2);
  REQUIRE(j["matrix"][0].size() == 4);
  const double want[2][4] = {{1, 0, 0, 1}, {0, 1, 1, 0}};
  for (int r_i = 0; r_i < 2; ++r_i)
    for (int c_i = 0; c_i < 4; ++c_i) {
      CHECK(j["matrix"][r_i][c_i][0].get<double>() ==
            doctest::Approx(want[r_i][c_i]).epsilon(1e-12));
      CHECK(j["matrix"][r_i][c_i][1].get<double>() ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("cobord evaluates twists against the action") {
  const RunResult r =
      run_cli("cobord 'twist([1])' " + files().ground + " --group " +
              files().z4 + " --action " + files().phase_i);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["matrix"][0][0][0].get<double>() == doctest::Approx(0.0));
  CHECK(j["matrix"][0][0][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("cobord rejects ill-typed words with a plain failure") {
  const RunResult r = run_cli("cobord 'eta ; eps' " + files().cz2);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("move writes a surface the tool can read back") {
  const std::string moved = path_of("moved.json");
  const RunResult r = run_cli("move " + files().sphere +
                              " --move pachner13 --triangle 0 --out " + moved);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("triangles_after") != std::string::npos);
  CHECK(r.output.find("euler_characteristic_preserved") != std::string::npos);

  const LabeledSurface back = read_surface(moved, trivial_group());
  CHECK(back.num_triangles() == 4);
  CHECK(back.euler_characteristic() == 2);

  const RunResult again =
      run_cli("statesum " + moved + " " + files().cz2);
  REQUIRE(again.exit_code == 0);
  CHECK(json::parse(again.output)["Z"][0].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("move refuses an inapplicable flip") {
  // Every edge of the 2-triangle torus is shared three times over.
  const RunResult r =
      run_cli("move " + files().torus + " --move pachner22 --index 0");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("move validates its own arguments") {
  const RunResult missing =
      run_cli("move " + files().sphere + " --move pachner22");
  CHECK(missing.exit_code == 1);
  const RunResult unknown =
      run_cli("move " + files().sphere + " --move fold");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("check-algebra validates a plain algebra") {
  const RunResult r = run_cli("check-algebra " + files().cz2);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("center_dim") != std::string::npos);
  CHECK(r.output.find("associativity") != std::string::npos);
}

TEST_CASE("check-algebra accepts a central involution on a matrix algebra") {
  const RunResult r =
      run_cli("check-algebra " + files().m2 + " --group " + files().z2 +
              " --action " + files().minus_one);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("action_centrality") != std::string::npos);
  CHECK(r.output.find("action_homomorphism") != std::string::npos);
}

TEST_CASE("genus compares the two pipelines and agrees") {
  const RunResult r = run_cli("genus 1 " + files().m2);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("pipelines_agree") != std::string::npos);
  CHECK(r.output.find("Z_statesum") != std::string::npos);

  const RunResult twisted =
      run_cli("genus 0 " + files().ground + " --group " + files().z4 +
              " --action " + files().phase_i + " --class 2");
  REQUIRE(twisted.exit_code == 0);
  CHECK(twisted.output.find("pipelines_agree") != std::string::npos);
}

TEST_CASE("bad invocations exit nonzero without a stack trace") {
  const RunResult no_sub = run_cli("");
  CHECK(no_sub.exit_code == 1);
  const RunResult missing_file =
      run_cli("statesum /nonexistent.json " + files().cz2);
  CHECK(missing_file.exit_code == 1);
  CHECK(missing_file.output.find("error:") != std::string::npos);
}

TEST_CASE("the acceptance subcommand reports all criteria") {
  const RunResult r = run_cli("acceptance");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("acceptance: 8/8 criteria passed") != std::string::npos);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(r.output.find("[PASS] criterion " + std::to_string(n)) !=
          std::string::npos);
  }
}
