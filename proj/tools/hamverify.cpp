// hamverify: runs the verification suite over a range of n, emits the
// invariants of the Grassmannian model, and reads/writes model files.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hamloc/error.hpp"
#include "hamloc/model_io.hpp"
#include "hamloc/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hamloc::Error(hamloc::ErrorCode::Precondition, "cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hamloc;

  CLI::App app{"Exact localization checks for circle actions with two fixed components"};
  app.require_subcommand(0, 1);

  suite::SuiteOptions opts;
  std::string format = "text";
  std::string out_path;
  bool list_checks = false;
  app.add_option("--n-min", opts.n_min, "Smallest n")->default_val(1);
  app.add_option("--n-max", opts.n_max, "Largest n")->default_val(1);
  app.add_option("--suite", opts.selector, "Check id, section name, or 'all'")->default_val("all");
  app.add_option("--format", format, "text | json")->default_val("text");
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--jobs", opts.jobs, "Evaluate this many values of n concurrently")->default_val(1);
  app.add_option("--a0-bound", opts.a0_bound, "Search bound |a0| for the divisibility searches")->default_val(100);
  app.add_flag("--timings", opts.timings, "Record elapsed_ms per check (report is then not byte-stable)");
  app.add_flag("--list-checks", list_checks, "Print the check catalog and exit");

  auto* inv_cmd = app.add_subcommand("invariants", "Characteristic classes and cohomology ring for one n");
  int inv_n = 1;
  std::string inv_format = "text";
  std::string inv_out;
  inv_cmd->add_option("--n", inv_n, "Half-dimension of the fixed components")->required();
  inv_cmd->add_option("--format", inv_format, "text | json")->default_val("text");
  inv_cmd->add_option("--out", inv_out, "Output file");

  auto* model_cmd = app.add_subcommand("model", "Model files");
  model_cmd->require_subcommand(1);
  auto* emit_cmd = model_cmd->add_subcommand("emit", "Write a built-in model as JSON");
  int emit_n = 1;
  std::string variant = "grass";
  emit_cmd->add_option("--n", emit_n, "Half-dimension of the fixed components")->required();
  emit_cmd->add_option("--variant", variant, "grass | non-semifree")
      ->check(CLI::IsMember({"grass", "non-semifree"}))
      ->default_val("grass");
  auto* check_cmd = model_cmd->add_subcommand("check", "Validate a model file");
  std::string model_path;
  check_cmd->add_option("file", model_path, "Model JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*inv_cmd) {
      write_output(suite::emit_invariants(inv_n, suite::parse_format(inv_format)), inv_out);
      return kExitPass;
    }
    if (*emit_cmd) {
      const HamiltonianModel m = variant == "grass" ? grassmannian_model(emit_n) : non_semifree_model(emit_n);
      std::cout << to_json(m).dump(2) << '\n';
      return kExitPass;
    }
    if (*check_cmd) {
      std::ifstream in(model_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
      }
      const auto violations = validate_model(model_from_json(j));
      for (const auto& v : violations) std::cout << v.invariant << ": " << v.detail << '\n';
      if (violations.empty()) std::cout << "valid\n";
      return violations.empty() ? kExitPass : kExitFail;
    }
    if (list_checks) {
      for (const auto& c : suite::catalog()) std::cout << c.section << "  " << c.id << '\n';
      return kExitPass;
    }

    const suite::Format fmt = suite::parse_format(format);
    const auto reports = suite::run_suite(opts);
    write_output(fmt == suite::Format::Json ? suite::to_json(reports, opts).dump(2) + "\n" : suite::to_text(reports),
                 out_path);
    return suite::all_pass(reports) ? kExitPass : kExitFail;
  } catch (const Error& e) {
    std::cerr << "hamverify: " << to_string(e.code()) << ": " << e.what() << '\n';
    const bool usage = e.code() == ErrorCode::Precondition || e.code() == ErrorCode::Parse;
    return usage ? kExitUsage : kExitFail;
  }
}
