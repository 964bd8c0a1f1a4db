#include "hyperbessel/cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "hyperbessel/errors.hpp"

namespace hyperbessel::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view token) {
  const std::string owned(token);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(value)) {
    throw ArgumentError("not a finite number: '" + owned + "'");
  }
  return value;
}

int to_int(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ArgumentError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<double> parse_real_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ArgumentError("range must be a:b:steps, got '" + text + "'");
    const double a = to_double(parts[0]);
    const double b = to_double(parts[1]);
    const int steps = to_int(parts[2]);
    if (steps < 1) throw ArgumentError("range needs at least one step, got '" + text + "'");
    if (steps == 1) return {a};
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid.push_back(i == steps - 1 ? b : a + (b - a) * i / (steps - 1));
    return grid;
  }
  std::vector<double> values;
  for (auto token : split(text, ',')) values.push_back(to_double(token));
  return values;
}

std::vector<int> parse_int_list(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ArgumentError("integer range must be a:b, got '" + text + "'");
    const int a = to_int(parts[0]);
    const int b = to_int(parts[1]);
    if (b < a) throw ArgumentError("empty integer range '" + text + "'");
    std::vector<int> values;
    for (int v = a; v <= b; ++v) values.push_back(v);
    return values;
  }
  std::vector<int> values;
  for (auto token : split(text, ',')) values.push_back(to_int(token));
  return values;
}

}  // namespace hyperbessel::cli
