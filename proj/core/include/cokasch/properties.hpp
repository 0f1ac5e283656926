#pragma once

#include <optional>
#include <vector>

#include "cokasch/module.hpp"
#include "cokasch/report.hpp"

namespace cokasch {

// entries(i, j) = multiplicity of catalog simple j among the composition
// factors of the principal indecomposable covering catalog simple i. Row and
// column order follow the catalog.
struct CartanMatrix {
  IntMatrix entries;

  bool is_diagonal() const;
};

CartanMatrix cartan_matrix(const RingPtr& ring, const std::vector<SimpleEntry>& catalog);

// A module is co-Kasch when every simple subfactor is a homomorphic image of
// it. Over a finite ring the simple subfactors are exactly the composition
// factors, so the decision reduces to: positive multiplicity of S forces
// Hom(M, S) != 0. The witness on failure is the offending catalog index.
PropertyReport is_co_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog);

// Kasch counterpart: every simple subfactor embeds. A nonzero map out of a
// simple is injective, so the decision is Hom(S, M) != 0 per composition
// factor S.
PropertyReport is_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog);

// Ext^1(S, T) realized on the projective cover P of S: restriction along
// rad P -> P maps Hom(P, T) into Hom(rad P, T), and the cokernel is
// Ext^1(S, T). Its order is a power of |End(T)|.
struct Ext1Result {
  u128 size = 1;
  std::optional<IntMatrix> representative;  // nonzero class, rad-P-rank x T-rank
  ModulePtr cover;                          // P
  EmbeddedModule radical_part;              // rad P presented with its embedding into P
  ModulePtr target;                         // T
  RowLattice hom_lattice;                   // flats of Hom(rad P, T)
  RowLattice split_image;                   // flats restricted from Hom(P, T)
};

Ext1Result ext1(const RingPtr& ring, const std::vector<SimpleEntry>& catalog, int i, int j);

// Verdict: Ext^1(S_i, S_j) vanishes for every ordered pair of distinct
// catalog indices. The first failing pair in ascending order is reported
// together with a representative cocycle.
PropertyReport is_h_ring(const RingPtr& ring, const std::vector<SimpleEntry>& catalog);

// X = (T + P) / {(f(w), -w) : w in rad P}: the extension of the covered
// simple by T glued along the cocycle f from ext1. Throws
// std::invalid_argument when f is not a homomorphism on rad P or when it
// lies in the split image.
ModulePtr construct_extension(const Ext1Result& ext, const IntMatrix& cocycle);

// Co-Kasch verdict for each principal indecomposable, the Cartan matrix, and
// whether "all principal indecomposables co-Kasch" matched Cartan
// diagonality.
struct ProjectiveCoKaschReport {
  std::vector<PropertyReport> per_cover;  // catalog order
  CartanMatrix cartan;
  bool all_co_kasch = true;
  bool equivalence_holds = true;
};

ProjectiveCoKaschReport check_projective_cokasch(const RingPtr& ring,
                                                 const std::vector<SimpleEntry>& catalog);

}  // namespace cokasch
