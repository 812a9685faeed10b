#pragma once
// Randomized exact checks behind `gwtangent verify` and the acceptance suite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwt/field.hpp"

namespace gwt {

enum class Property { wronskian_jacobian, transition, taylor, gw_laws };

std::optional<Property> parse_property(std::string_view name);
std::string to_string(Property p);

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  // Unset fields fall back to each property's defaults.
  std::optional<Field> field;
  std::optional<int> n;
  std::optional<int> degree;
  // Test hook: compare against a deliberately wrong closed form.
  bool corrupt = false;
};

struct VerifyResult {
  Property property;
  int trials = 0;
  int checks = 0;
  int failures = 0;
  std::string first_counterexample;
  bool passed() const { return failures == 0; }
};

VerifyResult verify(Property p, const VerifyOptions& opt);

}  // namespace gwt
