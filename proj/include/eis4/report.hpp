#pragma once

#include "eis4/lform.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eis4 {

/// First q-index where the two sides of an identity disagree, with both sides verbatim.
struct Mismatch {
  int n = 0;
  LForm lhs;
  LForm rhs;
};

/// A coefficient that demonstrates a series is nonzero.
struct Witness {
  int n = 0;
  LForm value;
};

struct VerifyReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order is kept
  bool pass = false;
  std::optional<Mismatch> first_failure;
  int checked_through = 0;
  std::optional<Witness> witness;
  std::string note;
};

}  // namespace eis4
