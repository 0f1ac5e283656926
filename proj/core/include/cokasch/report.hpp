#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cokasch/intmat.hpp"

namespace cokasch {

// Outcome of one property decision. A false verdict always carries witness
// data concrete enough to re-check against the literal definition; a true
// verdict carries none.
struct PropertyReport {
  std::string property;
  bool verdict = true;
  std::optional<i64> witness_simple;                // catalog index
  std::optional<std::pair<i64, i64>> witness_pair;  // catalog index pair
  std::optional<IntMatrix> witness_matrix;          // map or cocycle data
  std::optional<i64> witness_prime;
};

}  // namespace cokasch
