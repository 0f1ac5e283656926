#pragma once

#include <string>

#include "cokasch/module.hpp"
#include "cokasch/ring.hpp"

namespace cokasch {

// Canonical JSON forms: sorted keys, two-space indent. A validated object has
// exactly one serialized form, so serialize -> parse -> create -> serialize
// is byte-identical. Parsers check shape only and throw std::invalid_argument
// naming the offending key; the axioms stay with the validators.

std::string ring_to_json(const FiniteRing& ring);
RingData ring_from_json(const std::string& text);

/// Module description as it appears in a workspace: the ring is a name to be
/// resolved by the caller.
struct ModuleDescription {
  std::string ring;
  ModuleData data;
};

std::string module_to_json(const FiniteModule& m, const std::string& ring_name);
ModuleDescription module_from_json(const std::string& text);

}  // namespace cokasch
