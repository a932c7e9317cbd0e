#include "covsum/text.hpp"

#include <cctype>

#include "covsum/error.hpp"

namespace covsum {

std::string_view trim_space(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_bracket_list(std::string_view s) {
  s = trim_space(s);
  if (s.size() < 2 || !((s.front() == '[' && s.back() == ']') ||
                        (s.front() == '(' && s.back() == ')'))) {
    throw DomainError("parse", "expected a bracketed list, got '" + std::string(s) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  if (trim_space(s).empty()) return items;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    items.emplace_back(trim_space(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace covsum
