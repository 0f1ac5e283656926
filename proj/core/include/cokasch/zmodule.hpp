#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cokasch/intmat.hpp"
#include "cokasch/report.hpp"

namespace cokasch {

struct FreeZ {
  bool operator==(const FreeZ&) const = default;
};
struct Cyclic {
  i64 n = 2;
  bool operator==(const Cyclic&) const = default;
};
struct Prufer {
  i64 p = 2;
  bool operator==(const Prufer&) const = default;
};
struct Rationals {
  bool operator==(const Rationals&) const = default;
};

using ZAtom = std::variant<FreeZ, Cyclic, Prufer, Rationals>;

/// A direct sum of atoms Z, Z/n (n >= 2), Z(p^inf) (p prime), Q. The empty
/// list is the zero module.
struct ZModuleExpr {
  std::vector<ZAtom> atoms;

  bool operator==(const ZModuleExpr&) const = default;
};

// Throws std::invalid_argument on a cyclic order below 2 or a non-prime
// Prufer parameter.
void validate_zmodule(const ZModuleExpr& m);

// Parses "Z + Z/12 + Prufer(3) + Q"; "0" alone is the zero module.
ZModuleExpr parse_zmodule(const std::string& text);
std::string format_zmodule(const ZModuleExpr& m);

bool is_prime(i64 p);

bool is_torsion(const ZModuleExpr& m);

// Primes p with nonzero p-primary part: divisors of cyclic orders and Prufer
// parameters. Z and Q contribute nothing.
std::set<i64> primary_support(const ZModuleExpr& m);

// Decides pM = M. Q and every Prufer atom are divisible by everything, Z by
// nothing, Z/n by the primes away from n. p must be prime.
bool is_p_divisible(const ZModuleExpr& m, i64 p);

// Torsion M is co-Kasch iff pM != M for each prime in the primary support.
// Otherwise the quantifier ranges over all primes, and with finitely many
// atoms that forces a Z summand: only Z blocks divisibility at the
// infinitely many primes away from every cyclic order. Negative witness: a
// prime with pM = M (inside the support when M is torsion).
PropertyReport is_co_kasch_z(const ZModuleExpr& m);

}  // namespace cokasch
