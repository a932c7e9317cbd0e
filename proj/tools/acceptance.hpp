#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json_io.hpp"

namespace covsum::cli {

/// Files of a corpus directory, sorted by file name.
struct Corpus {
  std::vector<std::pair<std::string, Json>> systems;    ///< systems/*.json
  std::vector<std::pair<std::string, Json>> instances;  ///< instances/*.json, each with "theorem"
};

/// Throws DomainError "missing-corpus" when the directory is absent or holds
/// no JSON files in either subdirectory; "parse" on a malformed file.
Corpus load_corpus(const std::filesystem::path& dir);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;  ///< checks succeeded and the time stayed under the limit
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// Number of acceptance criteria.
inline constexpr int kCriteria = 11;

/// Runs the selected criteria (all when `selection` is empty) in order.
std::vector<CriterionResult> run_acceptance(const Corpus& corpus, const std::set<int>& selection);

/// "PASS [n] name (1.23 s, limit 10 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace covsum::cli
