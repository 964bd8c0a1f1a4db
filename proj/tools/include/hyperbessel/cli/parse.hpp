#pragma once

#include <string>
#include <vector>

namespace hyperbessel::cli {

// "1,2,3" or "a:b:steps" (steps >= 1 evenly spaced points, endpoints included).
std::vector<double> parse_real_grid(const std::string& text);

// "0,1,2" or "a:b" (inclusive integer range).
std::vector<int> parse_int_list(const std::string& text);

}  // namespace hyperbessel::cli
