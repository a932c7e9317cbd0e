#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "commands.hpp"

namespace {

using namespace covsum::cli;

int emit(const RunReport& report, bool json) {
  if (json) {
    std::cout << pretty(report.to_json());
  } else if (report.command == "suite" && report.payload.contains("criteria")) {
    for (const auto& row : report.payload.at("criteria")) {
      std::cout << (row.at("passed").get<bool>() ? "PASS" : "FAIL") << " ["
                << row.at("id").get<int>() << "] " << row.at("name").get<std::string>() << ": "
                << row.at("detail").get<std::string>() << "\n";
    }
    std::cout << "status: " << to_string(report.status) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering systems, subset sums and zero-sum verification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  auto* system = app.add_subcommand("system", "Analyse a system of residue classes");
  std::string system_file;
  system->add_option("file", system_file, "JSON system file")->required();
  system->add_flag("--json", json, "Print the report as JSON");

  auto* verify = app.add_subcommand("verify", "Verify one statement on an instance file");
  std::string theorem, verify_file;
  bool oracle = false;
  verify->add_option("theorem", theorem, "t21|c21|c22|c23|c24|c25|l41|t32|c33|kemnitz|s10count")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(theorem_names().begin(), theorem_names().end())));
  verify->add_option("file", verify_file, "JSON instance file")->required();
  verify->add_flag("--oracle", oracle, "Also run the naive recomputation and compare");
  verify->add_flag("--json", json, "Print the report as JSON");

  auto* generate = app.add_subcommand("generate", "Emit a random instance for a seed");
  GenerateOptions gen;
  std::string out_file;
  generate->add_option("kind", gen.kind, "m-cover|zero-sum|t21-instance")
      ->required()
      ->check(CLI::IsMember({"m-cover", "zero-sum", "t21-instance"}));
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--multiplicity,-m", gen.multiplicity, "Covering multiplicity")
      ->capture_default_str();
  generate->add_option("--max-classes,-k", gen.max_classes, "Largest number of classes")
      ->capture_default_str();
  generate->add_option("--max-period", gen.max_period, "Largest lcm of the moduli")
      ->capture_default_str();
  generate->add_option("--steps", gen.split_steps, "Class splitting steps")->capture_default_str();
  generate->add_option("--p", gen.p, "Prime for zero-sum or prime-field instances")
      ->capture_default_str();
  generate->add_option("--l", gen.l, "Number of cyclic factors")->capture_default_str();
  generate->add_option("--max-h", gen.max_h, "Largest exponent h_t")->capture_default_str();
  generate->add_option("--extra", gen.extra, "Elements beyond the threshold")->capture_default_str();
  generate->add_option("--field", gen.field, "rational|prime")->capture_default_str();
  generate->add_option("--out,-o", out_file, "Write to this file instead of stdout");

  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria on a corpus");
  std::string corpus_dir;
  SuiteOptions suite_options;
  suite->add_option("dir", corpus_dir, "Corpus directory")->required();
  suite->add_option("--criteria", suite_options.criteria, "Criterion numbers to run")
      ->delimiter(',');
  suite->add_flag("--oracle", oracle, "Accepted for symmetry; oracle agreement is always checked");
  suite->add_flag("--json", json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*system) return emit(cmd_system(system_file), json);
    if (*verify) return emit(cmd_verify(theorem, verify_file, oracle), json);
    if (*suite) return emit(cmd_suite(corpus_dir, suite_options), json);
    if (*generate) {
      const std::string text = pretty(cmd_generate(gen));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file, std::ios::binary);
        out << text;
        if (!out) throw covsum::DomainError("io", "cannot write " + out_file);
      }
      return 0;
    }
  } catch (const covsum::Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
