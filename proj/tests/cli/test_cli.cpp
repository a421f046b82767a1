#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "liealg/io.hpp"
#include "liealg/tangent.hpp"

using namespace liealg;

namespace
{
  struct CommandResult
  {
    int exit_code;
    std::string output;
  };

  std::filesystem::path scratch_dir()
  {
    auto dir = std::filesystem::temp_directory_path() / "liealg_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
  }

  CommandResult run_cli(const std::string & args)
  {
    static int counter = 0;
    auto capture = scratch_dir() / ("capture_" + std::to_string(counter++) + ".txt");
    std::string command = std::string(LIEALG_CLI_PATH) + " " + args + " > "
                          + capture.string() + " 2>&1";
    int status = std::system(command.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {code, buffer.str()};
  }

  std::string write_broken_algebra()
  {
    auto path = scratch_dir() / "broken.json";
    std::ofstream out(path);
    out << R"({"dim": 3, "brackets": [
      {"i": 0, "j": 1, "k": 0, "c": 1},
      {"i": 0, "j": 2, "k": 1, "c": 1}
    ]})";
    return path.string();
  }
}

TEST_CASE("verify: exit codes and residual locations")
{
  CHECK(run_cli("verify catalog:so3").exit_code == 0);

  auto exported = scratch_dir() / "so3.json";
  save_algebra(catalog_algebra("so3"), exported.string());
  CHECK(run_cli("verify " + exported.string()).exit_code == 0);

  CommandResult broken = run_cli("verify " + write_broken_algebra());
  CHECK(broken.exit_code == 1);
  CHECK(broken.output.find("(0,1,2)") != std::string::npos);
  CHECK(broken.output.find("jacobi") != std::string::npos);

  auto malformed = scratch_dir() / "malformed.json";
  std::ofstream(malformed) << "{ nope";
  CHECK(run_cli("verify " + malformed.string()).exit_code == 2);
  CHECK(run_cli("verify " + (scratch_dir() / "absent.json").string()).exit_code == 2);
}

TEST_CASE("tangent: writes a re-verifiable algebra")
{
  auto out = scratch_dir() / "tangent_h3.json";
  std::filesystem::remove(out);
  CHECK(run_cli("tangent catalog:heisenberg3 --out " + out.string()).exit_code == 0);
  REQUIRE(std::filesystem::exists(out));
  CHECK(run_cli("verify " + out.string()).exit_code == 0);

  LieAlgebra lifted = load_algebra(out.string());
  CHECK(lifted.dim() == 6);
  CHECK(lifted.structure_constant(0, 1, 2) == 1.0);
  CHECK(lifted.structure_constant(0, 4, 5) == 1.0);
  CHECK(lifted.structure_constant(1, 3, 5) == -1.0);

  auto abelian_out = scratch_dir() / "tangent_ab2.json";
  CHECK(run_cli("tangent 'catalog:abelian(2)' --out " + abelian_out.string()).exit_code == 0);
  CHECK(load_algebra(abelian_out.string()).dim() == 4);

  auto blocked = scratch_dir() / "tangent_blocked.json";
  std::filesystem::remove(blocked);
  CHECK(run_cli("tangent " + write_broken_algebra() + " --out " + blocked.string()).exit_code
        == 1);
  CHECK_FALSE(std::filesystem::exists(blocked));
}

TEST_CASE("prolong: writes the block representation")
{
  auto out = scratch_dir() / "prolong_sl2.json";
  CHECK(run_cli("prolong catalog:sl2 catalog:sl2_defining --out " + out.string()).exit_code
        == 0);
  Representation lifted = load_representation(out.string());
  CHECK(lifted.algebra_dim() == 6);
  CHECK(lifted.degree() == 4);

  auto zero_out = scratch_dir() / "prolong_zero.json";
  CHECK(run_cli("prolong catalog:so3 'catalog:zero(3,2)' --out " + zero_out.string()).exit_code
        == 0);

  // representation for the wrong algebra dimension is an input error
  CHECK(run_cli("prolong 'catalog:abelian(4)' catalog:sl2_defining --out "
                + (scratch_dir() / "mismatch.json").string()).exit_code == 2);
}

TEST_CASE("bridge: deviation scale decides the exit code")
{
  CHECK(run_cli("bridge catalog:so3 catalog:so3_vector catalog:so3_vector "
                "--samples 20 --seed 7 --step 1e-4").exit_code == 0);
  CHECK(run_cli("bridge catalog:sl2 catalog:sl2_defining catalog:sl2_defining "
                "--samples 20 --seed 7 --step 1e-4").exit_code == 0);
  CommandResult coarse = run_cli("bridge catalog:so3 catalog:so3_vector catalog:so3_vector "
                                 "--samples 20 --seed 7 --step 1e-1");
  CHECK(coarse.exit_code == 1);
}

TEST_CASE("identities: per-equation residuals")
{
  CHECK(run_cli("identities catalog:so3 --samples 100 --seed 7").exit_code == 0);

  CommandResult abelian = run_cli("identities 'catalog:abelian(5)'");
  CHECK(abelian.exit_code == 0);
  CHECK(abelian.output.find("max_residual=0") != std::string::npos);

  CommandResult broken = run_cli("identities " + write_broken_algebra() + " --seed 7");
  CHECK(broken.exit_code == 1);
  CHECK(broken.output.find("eq7") != std::string::npos);
}

TEST_CASE("json reports are byte-stable and well-formed")
{
  std::string invocation = "identities catalog:sl2 --samples 50 --seed 11 --json";
  CommandResult first = run_cli(invocation);
  CommandResult second = run_cli(invocation);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  auto doc = nlohmann::json::parse(first.output);
  CHECK(doc["command"] == "identities");
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["checks"].size() == 9);
  for (const auto & check : doc["checks"]) {
    CHECK(check["passed"].get<bool>());
  }

  CommandResult verify_json = run_cli("verify catalog:so3 --json");
  auto verify_doc = nlohmann::json::parse(verify_json.output);
  CHECK(verify_doc["inputs"][0] == "catalog:so3");
  CHECK(verify_doc["checks"].size() == 2);
}

TEST_CASE("usage errors exit with 2")
{
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("tangent catalog:so3").exit_code == 2); // --out is required
}
