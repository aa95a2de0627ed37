#pragma once

// Property suites checking the library's identities and inequalities on
// exhaustive or seeded-random inputs. Each property reports pass/fail.

#include "bicount/enumeration.hpp"
#include "bicount/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicount {

enum class Suite { all, characters, cycleform, bounds, asymptotics };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Table used by every Stirling-dependent computation in the suites.
  const StirlingTable* stirling = &stirling_table();
  EnumerationLimits limits;
};

std::vector<PropertyResult> run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace bicount
