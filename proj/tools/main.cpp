#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liealg/group_bridge.hpp"
#include "liealg/io.hpp"
#include "liealg/tangent.hpp"

namespace
{

  using namespace liealg;

  struct RunReport
  {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<CheckResult> checks;
    int exit_code = 0;

    void finalize_exit_code()
    {
      exit_code = 0;
      for (const auto & c : checks) {
        if (!c.passed) exit_code = 1;
      }
    }
  };

  std::string format_double(double value, int digits)
  {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
  }

  std::string json_escape(const std::string & s)
  {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buffer[8];
            std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
            out += buffer;
          } else {
            out += c;
          }
      }
    }
    return out;
  }

  void print_human(const RunReport & report)
  {
    std::string line = report.command;
    for (const auto & input : report.inputs) {
      line += " " + input;
    }
    std::printf("%s\n", line.c_str());
    for (const auto & c : report.checks) {
      std::printf("  %-24s %-4s  max_residual=%s", c.name.c_str(),
                  c.passed ? "pass" : "FAIL", format_double(c.max_residual, 6).c_str());
      if (!c.detail.empty()) {
        std::printf("  (%s)", c.detail.c_str());
      }
      std::printf("\n");
    }
    std::printf("result: %s\n", report.exit_code == 0 ? "pass" : "fail");
  }

  // 17 significant digits so every value round-trips through the report
  void print_json(const RunReport & report)
  {
    std::string out = "{\n  \"command\": \"" + json_escape(report.command) + "\",\n";
    out += "  \"inputs\": [";
    for (size_t i = 0; i < report.inputs.size(); i++) {
      out += (i == 0 ? "" : ", ");
      out += "\"" + json_escape(report.inputs[i]) + "\"";
    }
    out += "],\n  \"checks\": [";
    for (size_t i = 0; i < report.checks.size(); i++) {
      const auto & c = report.checks[i];
      out += (i == 0 ? "\n" : ",\n");
      out += "    {\"name\": \"" + json_escape(c.name) + "\", \"passed\": "
             + (c.passed ? "true" : "false") + ", \"max_residual\": "
             + format_double(c.max_residual, 17) + ", \"detail\": \""
             + json_escape(c.detail) + "\"}";
    }
    out += report.checks.empty() ? "],\n" : "\n  ],\n";
    out += "  \"exit_code\": " + std::to_string(report.exit_code) + "\n}\n";
    std::fputs(out.c_str(), stdout);
  }

  void emit(const RunReport & report, bool as_json)
  {
    if (as_json) {
      print_json(report);
    } else {
      print_human(report);
    }
  }

  void append_checks(RunReport & report, const VerificationReport & verification,
                     const std::string & prefix = "")
  {
    for (const auto & c : verification.checks) {
      CheckResult copy = c;
      copy.name = prefix + copy.name;
      report.checks.push_back(std::move(copy));
    }
  }

  //------------------------------------------------------------------------------
  // Subcommands
  //------------------------------------------------------------------------------

  int run_verify(const std::string & algebra_path, double tolerance, bool as_json)
  {
    RunReport report{"verify", {algebra_path}, {}, 0};
    LieAlgebra g = load_algebra(algebra_path, tolerance);
    append_checks(report, verify_algebra(g));
    report.finalize_exit_code();
    emit(report, as_json);
    return report.exit_code;
  }

  int run_tangent(const std::string & algebra_path, const std::string & out_path,
                  double tolerance, bool as_json)
  {
    RunReport report{"tangent", {algebra_path}, {}, 0};
    LieAlgebra g = load_algebra(algebra_path, tolerance);
    VerificationReport input_check = verify_algebra(g);
    append_checks(report, input_check);
    if (input_check.passed()) {
      TangentAlgebra lifted = tangent_algebra(g);
      save_algebra(lifted.underlying, out_path);
      append_checks(report, verify_algebra(lifted.underlying), "tangent_");
    }
    report.finalize_exit_code();
    emit(report, as_json);
    return report.exit_code;
  }

  int run_prolong(const std::string & algebra_path, const std::string & rep_path,
                  const std::string & out_path, double tolerance, bool as_json)
  {
    RunReport report{"prolong", {algebra_path, rep_path}, {}, 0};
    LieAlgebra g = load_algebra(algebra_path, tolerance);
    Representation rep = load_representation(rep_path, tolerance);
    VerificationReport algebra_check = verify_algebra(g);
    append_checks(report, algebra_check);
    VerificationReport rep_check = check_representation(rep, g);
    append_checks(report, rep_check);
    if (algebra_check.passed() && rep_check.passed()) {
      TangentAlgebra lifted = tangent_algebra(g);
      Representation prolonged = prolong_representation(rep, g);
      save_representation(prolonged, out_path);
      append_checks(report, check_representation(prolonged, lifted.underlying), "prolonged_");
    }
    report.finalize_exit_code();
    emit(report, as_json);
    return report.exit_code;
  }

  int run_bridge(const std::string & algebra_path, const std::string & rep_path,
                 const std::string & realization_path, int samples, unsigned long seed,
                 double step, double tolerance, bool as_json)
  {
    RunReport report{"bridge", {algebra_path, rep_path, realization_path}, {}, 0};
    LieAlgebra g = load_algebra(algebra_path, tolerance);
    Representation rep = load_representation(rep_path, tolerance);
    Representation realization = load_representation(realization_path, tolerance);

    double dev_full = check_group_differential(rep, g, realization, samples, seed, step)
                          .max_residual();
    double dev_half = check_group_differential(rep, g, realization, samples, seed, step / 2.0)
                          .max_residual();

    // accept only deviations at the O(step^2) scale, capped at 1e-6
    auto tol_at = [](double h) { return std::min(100.0 * h * h, 1e-6); };
    CheckResult full{"group_differential", dev_full <= tol_at(step), dev_full,
                     "step=" + format_double(step, 6)
                         + " tolerance=" + format_double(tol_at(step), 6)};
    std::string ratio = dev_half > 0.0 ? format_double(dev_full / dev_half, 6)
                                       : std::string("n/a");
    CheckResult half{"step_halving", dev_half <= tol_at(step / 2.0), dev_half,
                     "step=" + format_double(step / 2.0, 6) + " ratio=" + ratio};
    report.checks.push_back(full);
    report.checks.push_back(half);
    report.finalize_exit_code();
    emit(report, as_json);
    return report.exit_code;
  }

  int run_identities(const std::string & algebra_path, int samples, unsigned long seed,
                     double tolerance, bool as_json)
  {
    RunReport report{"identities", {algebra_path}, {}, 0};
    LieAlgebra g = load_algebra(algebra_path, tolerance);
    append_checks(report, verify_bracket_identities(g, samples, seed));
    report.finalize_exit_code();
    emit(report, as_json);
    return report.exit_code;
  }

}

int main(int argc, char ** argv)
{
  CLI::App app{"Structure-constant Lie algebras: tangent prolongation, representation "
               "prolongation and numerical verification"};
  app.require_subcommand(1);

  std::string algebra_path, rep_path, realization_path, out_path;
  double tolerance = 1e-9;
  double step = 1e-5;
  int samples = 100;
  long long seed = 0;
  bool as_json = false;

  auto add_common = [&](CLI::App * cmd) {
    cmd->add_option("--tolerance", tolerance, "Tolerance for approximate equality checks")
        ->capture_default_str();
    cmd->add_flag("--json", as_json, "Emit a machine-readable JSON report");
  };

  CLI::App * verify = app.add_subcommand("verify", "Check antisymmetry and Jacobi for an algebra");
  verify->add_option("algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  add_common(verify);

  CLI::App * tangent = app.add_subcommand("tangent", "Write the tangent algebra T(g)");
  tangent->add_option("algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  tangent->add_option("--out", out_path, "Output algebra file")->required();
  add_common(tangent);

  CLI::App * prolong = app.add_subcommand("prolong", "Write the prolonged representation on T(g)");
  prolong->add_option("algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  prolong->add_option("rep", rep_path, "Representation file or catalog:<name>")->required();
  prolong->add_option("--out", out_path, "Output representation file")->required();
  add_common(prolong);

  CLI::App * bridge = app.add_subcommand(
      "bridge", "Compare the prolonged representation with the differential of the "
                "prolonged group representation");
  bridge->add_option("algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  bridge->add_option("rep", rep_path, "Representation file or catalog:<name>")->required();
  bridge->add_option("realization", realization_path,
                     "Faithful representation file realizing the group")->required();
  bridge->add_option("--samples", samples, "Number of sampled tangent elements")
      ->capture_default_str();
  bridge->add_option("--seed", seed, "Seed for the sample generator")->capture_default_str();
  bridge->add_option("--step", step, "Finite-difference step")->capture_default_str();
  add_common(bridge);

  CLI::App * identities = app.add_subcommand(
      "identities", "Evaluate the nine bracket-map identities on random samples");
  identities->add_option("algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  identities->add_option("--samples", samples, "Number of sampled tuples")->capture_default_str();
  identities->add_option("--seed", seed, "Seed for the sample generator")->capture_default_str();
  add_common(identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(algebra_path, tolerance, as_json);
    if (tangent->parsed()) return run_tangent(algebra_path, out_path, tolerance, as_json);
    if (prolong->parsed())
      return run_prolong(algebra_path, rep_path, out_path, tolerance, as_json);
    if (bridge->parsed())
      return run_bridge(algebra_path, rep_path, realization_path, samples,
                        static_cast<unsigned long>(seed), step, tolerance, as_json);
    if (identities->parsed())
      return run_identities(algebra_path, samples, static_cast<unsigned long>(seed),
                            tolerance, as_json);
  } catch (const liealg::ParseError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
