#include "hyperbessel/reference.hpp"

#include <cstdlib>

namespace hyperbessel {

void SeriesPolicy::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ArgumentError("SeriesPolicy: tolerance must be > 0");
  if (max_terms < 1) throw ArgumentError("SeriesPolicy: max_terms must be >= 1");
}

SeriesPolicy policy_from_env() {
  SeriesPolicy policy;
  if (const char* text = std::getenv(kOracleToleranceEnv); text != nullptr && *text != '\0') {
    char* end = nullptr;
    const double value = std::strtod(text, &end);
    if (end == text || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
      throw ArgumentError(std::string(kOracleToleranceEnv) + ": expected a positive number, got '" + text + "'");
    }
    policy.tolerance = value;
  }
  return policy;
}

std::string_view identity_name(Identity which) {
  switch (which) {
    case Identity::CoshEvenOrders: return "cosh_even_orders";
    case Identity::CoshHalfSquared: return "cosh_half_squared";
    case Identity::EightNodes: return "eight_nodes";
    case Identity::NodeAverage: return "node_average";
    case Identity::TrigNodeAverage: return "trig_node_average";
  }
  return "unknown";
}

bool identity_uses_p(Identity which) noexcept {
  return which == Identity::NodeAverage || which == Identity::TrigNodeAverage;
}

}  // namespace hyperbessel
