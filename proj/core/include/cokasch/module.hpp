#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cokasch/intmat.hpp"
#include "cokasch/presentation.hpp"
#include "cokasch/ring.hpp"

namespace cokasch {

/// Presentation of a finite right module: cyclic additive generators g_i of
/// order gen_orders[i] >= 2 and one m x m matrix per ring generator, with the
/// row convention g_i * b_k = sum_j action[k](i, j) * g_j. An empty generator
/// list presents the zero module.
struct ModuleData {
  std::vector<i64> gen_orders;
  std::vector<IntMatrix> action;
};

// Throws ValidationError on the first broken axiom. Check order: shape,
// size, bilinearity, unitality, compatibility; entry conditions scan in
// ascending (k, i, j), compatibility in ascending ring pairs (i, j).
void validate_module(const FiniteRing& ring, const ModuleData& data);

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Immutable validated finite right module over a fixed FiniteRing.
class FiniteModule {
 public:
  static ModulePtr create(RingPtr ring, ModuleData data);
  static ModulePtr zero_module(RingPtr ring);
  static ModulePtr regular(RingPtr ring);  // the ring as a right module over itself
  static ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(data_.gen_orders.size()); }
  const std::vector<i64>& gen_orders() const { return data_.gen_orders; }
  i64 size() const { return size_; }
  const ModuleData& data() const { return data_; }
  const IntMatrix& action(int k) const { return data_.action[static_cast<std::size_t>(k)]; }

  Vec zero() const { return Vec(data_.gen_orders.size(), 0); }
  Vec generator(int i) const;
  Vec canon(Vec x) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec negate(const Vec& x) const;
  bool is_zero(const Vec& x) const;
  Vec act_basis(const Vec& x, int k) const;  // x * b_k
  Vec act(const Vec& x, const Vec& r) const;
  i64 additive_order(const Vec& x) const;

  i64 index_of(const Vec& x) const;
  Vec element_at(i64 index) const;

  // Invariant factors (>= 2, each dividing the next) of the additive group.
  std::vector<i64> additive_invariants() const;

 private:
  FiniteModule(RingPtr ring, ModuleData data);

  RingPtr ring_;
  ModuleData data_;
  std::vector<i64> strides_;
  i64 size_ = 1;
};

/// Submodule of a fixed ambient module, held as the full-rank row lattice of
/// its member coordinates (the generator order relations are always in it).
struct Submodule {
  ModulePtr ambient;
  RowLattice lattice;

  u128 size() const;
  bool contains(const Vec& x) const;
  bool is_zero() const;
  bool is_full() const;
};

Submodule full_submodule(const ModulePtr& m);
Submodule zero_submodule(const ModulePtr& m);
Submodule submodule_generated(const ModulePtr& m, const std::vector<Vec>& gens);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
bool submodule_contains(const Submodule& a, const Submodule& b);
bool submodule_equal(const Submodule& a, const Submodule& b);

// All member coordinate vectors, sorted lexicographically. Throws
// std::invalid_argument when the submodule has more than cap elements.
std::vector<Vec> submodule_elements(const Submodule& s, std::size_t cap);

/// M / S together with the coordinate maps in both directions.
struct QuotientModule {
  ModulePtr module;
  IntMatrix to_quotient;  // ambient rank x quotient rank
  IntMatrix lift;         // quotient rank x ambient rank, section of to_quotient
};
QuotientModule quotient_module(const Submodule& s);

/// A submodule re-presented as a module in its own right. embed maps its
/// generators back into ambient coordinates.
struct EmbeddedModule {
  ModulePtr module;
  IntMatrix embed;  // module rank x ambient rank
};
EmbeddedModule submodule_as_module(const Submodule& s);

/// The abelian group Hom(src, dst). Variables are matrix entries H(i, j)
/// flattened as i * dst_rank + j; solutions.homogeneous spans all of them.
struct HomSpace {
  ModulePtr src, dst;
  CongruenceSolution solutions;
  std::vector<i64> var_moduli;

  u128 count() const;
  u128 count_capped(u128 cap) const;  // exact when <= cap, else cap + 1
  std::vector<IntMatrix> matrices(std::size_t cap) const;  // sorted by flat entries
};
HomSpace hom_space(const ModulePtr& src, const ModulePtr& dst);
u128 hom_count(const ModulePtr& src, const ModulePtr& dst);

/// Module map given by its generator-image matrix, f(g_i) = row i.
struct ModuleMap {
  ModulePtr src, dst;
  IntMatrix matrix;

  Vec apply(const Vec& x) const;
  Submodule kernel() const;
  Submodule image() const;
  bool is_injective() const;
  bool is_surjective() const;
};

Submodule radical_submodule(const ModulePtr& m);  // M * J(R)
Submodule socle_submodule(const ModulePtr& m);    // annihilator of J(R), = Soc(M)

bool is_simple(const ModulePtr& m);

// Isomorphism test. Rejects on additive invariants, radical filtration and
// socle sizes, then hom-count symmetry; confirms by hom-space enumeration
// when small, else seeded random surjectivity trials with an exact
// generator-image backtracking fallback.
bool is_isomorphic(const ModulePtr& a, const ModulePtr& b, u64 seed = 1);

/// One isomorphism class of simple right modules.
struct SimpleEntry {
  ModulePtr module;
  Vec cover_idempotent;  // first primitive idempotent whose top is this class
  i64 endo_size;         // |End(module)|
};

// All simple right modules up to isomorphism, sorted by the element index of
// the cover idempotent.
std::vector<SimpleEntry> simple_catalog(const RingPtr& ring);

// Multiplicity of each catalog entry in a composition series of m, read off
// the radical filtration. Aborts on any exactness breach.
std::vector<i64> composition_profile(const ModulePtr& m, const std::vector<SimpleEntry>& catalog);

}  // namespace cokasch
