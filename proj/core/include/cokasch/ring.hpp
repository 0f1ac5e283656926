#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cokasch/intmat.hpp"

namespace cokasch {

/// Presentation of a finite unital ring: cyclic additive generators b_i of
/// order orders[i] >= 2, products b_i * b_j = sum_k structure[i][j][k] * b_k,
/// and the coordinates of the identity. Coordinates may arrive unreduced;
/// validation canonicalizes them mod the generator orders.
struct RingData {
  std::vector<i64> orders;
  std::vector<std::vector<Vec>> structure;
  Vec one;
};

/// Raised when a presented ring or module breaks an axiom. The axiom name and
/// the first witnessing index tuple (in ascending scan order) are part of the
/// message, so two runs over the same input fail identically.
class ValidationError final : public std::invalid_argument {
 public:
  ValidationError(std::string axiom, const std::string& detail)
      : std::invalid_argument(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

// Throws ValidationError on the first broken axiom. Check order: shape,
// size, bilinearity, associativity, unity; each scanned in ascending (i,j,k).
void validate_ring(const RingData& data);

/// Two-sided ideal, stored extensionally. generators is an additive
/// generating set (echelon basis of the member lattice).
struct RingIdeal {
  std::vector<Vec> generators;
  std::vector<i64> element_indices;  // sorted, always contains 0

  bool contains_index(i64 index) const;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Immutable validated finite ring. Elements are canonical coordinate
/// vectors; index_of/element_at expose the mixed-radix enumeration that every
/// "ascending element" order in this library refers to.
class FiniteRing {
 public:
  static RingPtr create(RingData data);

  int rank() const { return static_cast<int>(data_.orders.size()); }
  i64 size() const { return size_; }
  const std::vector<i64>& orders() const { return data_.orders; }
  const RingData& data() const { return data_; }
  const Vec& one() const { return data_.one; }
  Vec zero() const { return Vec(data_.orders.size(), 0); }
  Vec basis_element(int i) const;

  Vec canon(Vec x) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec negate(const Vec& x) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec mul(const Vec& x, const Vec& y) const;
  bool is_zero(const Vec& x) const;
  bool is_one(const Vec& x) const;
  i64 additive_order(const Vec& x) const;

  i64 index_of(const Vec& x) const;
  Vec element_at(i64 index) const;

  bool is_unit(const Vec& x) const;
  bool is_idempotent(const Vec& x) const;
  const RingIdeal& jacobson_radical() const;
  const std::vector<Vec>& idempotents() const;          // ascending element order
  std::vector<Vec> primitive_idempotents() const;       // ascending element order
  bool is_primitive_idempotent(const Vec& e) const;
  const std::vector<Vec>& primitive_decomposition() const;

 private:
  explicit FiniteRing(RingData data);
  const std::vector<char>& unit_flags() const;

  // Calls f(y_index, x * y) for every y in ascending element order. The
  // product is maintained incrementally, one basis-column add per step.
  template <class F>
  void scan_products(const Vec& x, F&& f) const;

  RingData data_;
  std::vector<i64> strides_;
  i64 size_ = 1;
  mutable std::optional<std::vector<char>> units_;
  mutable std::optional<RingIdeal> radical_;
  mutable std::optional<std::vector<Vec>> idempotents_;
  mutable std::optional<std::vector<Vec>> prim_decomp_;
};

// Component-wise product ring on the concatenated generator lists.
RingData ring_direct_product(const RingData& a, const RingData& b);

}  // namespace cokasch
