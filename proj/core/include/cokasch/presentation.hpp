#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cokasch/intmat.hpp"

namespace cokasch {

/// Exact Smith decomposition: u * input * v == d with u, v unimodular and d
/// diagonal, each diagonal entry nonnegative and dividing the next.
struct SmithDecomposition {
  IntMatrix u, d, v;
};

SmithDecomposition smith_decompose(const IntMatrix& m);

/// Canonical Hermite-form basis of the lattice spanned by a set of integer
/// rows. Rows are kept in echelon order (pivot columns strictly increasing),
/// pivots positive, entries above each pivot reduced into [0, pivot).
/// The form is unique per lattice, so `key()` doubles as a dedup handle.
class RowLattice {
 public:
  static RowLattice from_rows(int cols, const std::vector<std::vector<i64>>& rows);

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<i64>>& basis() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }
  i64 pivot_entry(int which) const;

  bool contains(std::span<const i64> v) const;
  std::vector<i64> reduce(std::span<const i64> v) const;
  bool contains_lattice(const RowLattice& other) const;
  bool operator==(const RowLattice& other) const;
  std::string key() const;

 private:
  int cols_ = 0;
  std::vector<std::vector<i64>> rows_;
  std::vector<int> pivots_;
};

RowLattice lattice_join(const RowLattice& a, const std::vector<std::vector<i64>>& extra);

/// Number of residues modulo the box `moduli` hit by a full-rank lattice
/// that already contains diag(moduli) (so the count is exactly the product
/// of moduli[j] / pivot_j).
u128 lattice_points_mod(const RowLattice& lat, std::span<const i64> moduli);

/// Index [big : small] of nested full-rank lattices small <= big in Z^n.
/// Exact, computed pivot by pivot so intermediates never exceed the result.
u128 lattice_index(const RowLattice& big, const RowLattice& small);

struct CongruenceSolution {
  std::vector<i64> particular;  // one solution, reduced against the lattice below
  RowLattice homogeneous;       // full-rank lattice of solutions of a*x == 0
  i64 uniform_modulus = 1;      // lcm of the row moduli
};

/// All integer solutions of a*x == rhs, row i taken modulo moduli[i]
/// (each modulus >= 1). Returns nullopt when the system is inconsistent.
std::optional<CongruenceSolution> solve_congruence_system(const IntMatrix& a,
                                                          std::span<const i64> moduli,
                                                          std::span<const i64> rhs);

/// Number of distinct solutions once variable j is read modulo var_moduli[j].
u128 congruence_solution_count(const CongruenceSolution& sol,
                               std::span<const i64> var_moduli);

/// Saturating variant: the exact count when it is <= cap, else cap + 1.
/// Safe on solution sets whose true count overflows u128.
u128 congruence_solution_count_capped(const CongruenceSolution& sol,
                                      std::span<const i64> var_moduli, u128 cap);

/// Explicit solution list modulo the variable moduli, lexicographically
/// sorted. Caller must check the count against `cap` beforehand.
std::vector<std::vector<i64>> congruence_solutions_mod(const CongruenceSolution& sol,
                                                       std::span<const i64> var_moduli,
                                                       std::size_t cap);

struct AbelianPresentation {
  i64 generator_count = 0;
  IntMatrix relation_matrix;  // canonical: diag(orders)
  std::vector<i64> orders;    // d_1 | d_2 | ..., every entry >= 2
};

struct QuotientPresentation {
  AbelianPresentation presentation;
  IntMatrix to_quotient;  // ambient generator i -> row i in quotient coordinates
  IntMatrix lift;         // quotient generator -> a representative, ambient coordinates
};

/// Presents (Z/e_1 x ... x Z/e_m) / <rows of sub_generators> in canonical
/// cyclic form. Order-1 quotient generators are pruned.
QuotientPresentation quotient_presentation(std::span<const i64> ambient_orders,
                                           const IntMatrix& sub_generators);

/// Canonical form of Z^n / <relation rows>, for relation lattices of full
/// rank n. Shares the coordinate-change conventions of quotient_presentation.
QuotientPresentation presentation_from_relations(int generator_count,
                                                 const std::vector<std::vector<i64>>& relations);

}  // namespace cokasch
