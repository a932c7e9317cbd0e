#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace covsum {

std::string_view trim_space(std::string_view s);

/// Splits "[a,b,c]" (or "(a,b,c)") into trimmed items.
std::vector<std::string> split_bracket_list(std::string_view s);

}  // namespace covsum
