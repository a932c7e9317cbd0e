#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>

#include "json_io.hpp"

namespace covsum::cli {

enum class Status { verified, hypothesis_violation, counterexample, error };

std::string to_string(Status s);

/// 0 verified, 1 counterexample, 2 usage/parse/error, 3 hypothesis-violation.
int exit_code(Status s);

/// {command, digest, status, payload}. A counterexample payload always holds
/// the instance it was produced from.
struct RunReport {
  std::string command;
  std::string digest;
  Status status = Status::error;
  Json payload;

  Json to_json() const;
  /// Plain "key: value" lines for terminal use.
  std::string to_text() const;
  int exit_code() const { return cli::exit_code(status); }
};

inline const std::set<std::string>& theorem_names() {
  static const std::set<std::string> names{"t21", "c21", "c22", "c23", "c24", "c25",
                                           "l41", "t32", "c33", "kemnitz", "s10count"};
  return names;
}

RunReport cmd_system(const std::filesystem::path& path);
RunReport system_report(const Json& instance);

/// Runs the named verifier on a parsed instance. With `oracle` set the naive
/// recomputation runs as well and any disagreement is a counterexample.
RunReport verify_instance(const std::string& theorem, const Json& instance, bool oracle);
RunReport cmd_verify(const std::string& theorem, const std::filesystem::path& path, bool oracle);

struct GenerateOptions {
  std::string kind;  ///< m-cover | zero-sum | t21-instance
  std::uint64_t seed = 1;
  std::uint64_t multiplicity = 2;
  std::size_t max_classes = 10;
  std::uint64_t max_period = 24;
  std::size_t split_steps = 4;
  std::uint64_t p = 3;
  std::size_t l = 2;
  unsigned max_h = 2;
  std::size_t extra = 0;
  std::string field = "rational";  ///< rational | prime (uses p)
};

/// Deterministic instance for the seed; throws DomainError "infeasible" or
/// "usage" on bad parameters.
Json cmd_generate(const GenerateOptions& options);

struct SuiteOptions {
  std::set<int> criteria;  ///< empty means all
};

/// Runs the acceptance criteria against a corpus directory holding
/// systems/*.json and instances/*.json.
RunReport cmd_suite(const std::filesystem::path& dir, const SuiteOptions& options);

}  // namespace covsum::cli
