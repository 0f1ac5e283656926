#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cokasch/ring.hpp"

// Hand-written presentations of the standard small rings used across the
// test suite. Kept independent of any tables the library itself ships.
namespace fixtures {

using cokasch::RingData;
using cokasch::Vec;

inline RingData f2() {
  RingData r;
  r.orders = {2};
  r.structure = {{{1}}};
  r.one = {1};
  return r;
}

inline RingData z4() {
  RingData r;
  r.orders = {4};
  r.structure = {{{1}}};
  r.one = {1};
  return r;
}

// F2[x]/(x^2), basis {1, x}.
inline RingData f2x() {
  RingData r;
  r.orders = {2, 2};
  r.structure = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  r.one = {1, 0};
  return r;
}

// Upper triangular 2x2 matrices over F2, basis {e11, e12, e22}.
inline RingData t2f2() {
  RingData r;
  r.orders = {2, 2, 2};
  r.structure = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}},
  };
  r.one = {1, 0, 1};
  return r;
}

inline RingData f2f2() {
  RingData r;
  r.orders = {2, 2};
  r.structure = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  r.one = {1, 1};
  return r;
}

inline std::vector<std::pair<std::string, RingData>> all_rings() {
  return {
      {"F2", f2()},
      {"Z4", z4()},
      {"F2[x]/(x^2)", f2x()},
      {"T2(F2)", t2f2()},
      {"F2 x F2", f2f2()},
  };
}

}  // namespace fixtures
