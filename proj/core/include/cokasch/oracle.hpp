#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cokasch/module.hpp"
#include "cokasch/properties.hpp"
#include "cokasch/report.hpp"

namespace cokasch {

// Every submodule of m, each exactly once, found by closing the cyclic
// submodules under pairwise sums. Guarded: |m| must be <= 256 and the
// submodule count must stay under an internal bound, else
// std::invalid_argument.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m);

/// One subfactor outer/inner with inner < outer <= m and a simple quotient,
/// materialized as a standalone module.
struct SimpleSubfactor {
  Submodule outer;
  Submodule inner;
  ModulePtr quotient;
};

std::vector<SimpleSubfactor> enumerate_simple_subfactors(const ModulePtr& m);

// Definitional deciders: enumerate the simple subfactors literally, then
// search the full hom space for a surjection onto (respectively an embedding
// of) each one. Ground truth for is_co_kasch and is_kasch at oracle scale.
PropertyReport brute_co_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog);
PropertyReport brute_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog);

/// Deterministic random source. Draws go through the engine directly (no
/// std distributions, whose outputs vary across standard libraries), so a
/// seed pins the same stream everywhere.
class DetRng {
 public:
  explicit DetRng(u64 seed) : eng_(seed) {}
  u64 next() { return eng_(); }
  i64 below(i64 n) { return static_cast<i64>(eng_() % static_cast<u64>(n)); }

 private:
  std::mt19937_64 eng_;
};

// The standing test rings: F2, Z/4, F2[x]/(x^2), T2(F2), F2 x F2.
std::vector<std::pair<std::string, RingPtr>> fixture_rings();

// A validated ring with |R| <= 64 drawn from mixed families: Z/d, quotients
// of F_p[x], upper triangular 2x2 layers, direct products, and occasional
// raw random tables kept only when they pass validation.
RingPtr random_valid_ring(DetRng& rng);

// A random quotient of regular + regular with size <= max_size, shrunk by
// quotienting out randomly generated submodules until it fits.
ModulePtr random_quotient_module(DetRng& rng, const RingPtr& ring, i64 max_size);

/// Outcome of one verification run; failures carry the data needed to replay
/// the instance (check id, seed and instance index pin the exact draw).
struct HarnessResult {
  std::string check_id;
  i64 instances = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string> harness_check_ids();

// Runs one registered check over the ring pool. Module-level checks draw
// seeded random instances until `budget` of them ran; ring-level checks
// process each pool ring once (budget caps the count). Unknown ids throw
// std::invalid_argument.
HarnessResult run_harness(const std::string& check_id, const std::vector<RingPtr>& rings,
                          u64 seed, i64 budget);

}  // namespace cokasch
