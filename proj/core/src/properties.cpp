#include "cokasch/properties.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cokasch {

namespace {

[[noreturn]] void breach(const std::string& what) {
  throw std::logic_error("internal invariant breach: " + what);
}

Vec flatten(const IntMatrix& m) {
  Vec flat;
  flat.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
  return flat;
}

IntMatrix unflatten(std::span<const i64> flat, int rows, int cols) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = flat[static_cast<std::size_t>(i * cols + j)];
  return m;
}

// The principal indecomposable e*R covering a catalog class, presented as a
// standalone module.
EmbeddedModule principal(const RingPtr& ring, const SimpleEntry& entry) {
  ModulePtr reg = FiniteModule::regular(ring);
  return submodule_as_module(submodule_generated(reg, {entry.cover_idempotent}));
}

}  // namespace

bool CartanMatrix::is_diagonal() const { return entries.is_diagonal(); }

CartanMatrix cartan_matrix(const RingPtr& ring, const std::vector<SimpleEntry>& catalog) {
  const int r = static_cast<int>(catalog.size());
  CartanMatrix cartan;
  cartan.entries = IntMatrix(r, r);
  for (int i = 0; i < r; ++i) {
    EmbeddedModule p = principal(ring, catalog[static_cast<std::size_t>(i)]);
    std::vector<i64> row = composition_profile(p.module, catalog);
    for (int j = 0; j < r; ++j) cartan.entries(i, j) = row[static_cast<std::size_t>(j)];
    if (cartan.entries(i, i) < 1) breach("a principal indecomposable misses its own top");
  }
  return cartan;
}

PropertyReport is_co_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog) {
  PropertyReport report;
  report.property = "co-kasch";
  std::vector<i64> profile = composition_profile(m, catalog);
  for (std::size_t j = 0; j < catalog.size(); ++j) {
    if (profile[j] == 0) continue;
    if (hom_count(m, catalog[j].module) == 1) {
      report.verdict = false;
      report.witness_simple = static_cast<i64>(j);
      return report;
    }
  }
  return report;
}

PropertyReport is_kasch(const ModulePtr& m, const std::vector<SimpleEntry>& catalog) {
  PropertyReport report;
  report.property = "kasch";
  std::vector<i64> profile = composition_profile(m, catalog);
  for (std::size_t j = 0; j < catalog.size(); ++j) {
    if (profile[j] == 0) continue;
    if (hom_count(catalog[j].module, m) == 1) {
      report.verdict = false;
      report.witness_simple = static_cast<i64>(j);
      return report;
    }
  }
  return report;
}

Ext1Result ext1(const RingPtr& ring, const std::vector<SimpleEntry>& catalog, int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(catalog.size()) ||
      j >= static_cast<int>(catalog.size()))
    throw std::invalid_argument("ext1 indices must address catalog entries");
  const SimpleEntry& s = catalog[static_cast<std::size_t>(i)];
  const SimpleEntry& t = catalog[static_cast<std::size_t>(j)];

  EmbeddedModule p = principal(ring, s);
  EmbeddedModule omega = submodule_as_module(radical_submodule(p.module));
  HomSpace on_radical = hom_space(omega.module, t.module);
  HomSpace on_cover = hom_space(p.module, t.module);

  // Restriction along rad P -> P, generator by generator of Hom(P, T); the
  // variable moduli close the image into a full-rank lattice.
  const int vars = omega.module->rank() * t.module->rank();
  std::vector<std::vector<i64>> image_rows;
  for (const auto& row : on_cover.solutions.homogeneous.basis()) {
    IntMatrix h = unflatten(row, p.module->rank(), t.module->rank());
    image_rows.push_back(flatten(matmul(omega.embed, h)));
  }
  for (int v = 0; v < vars; ++v) {
    std::vector<i64> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(v)] = on_radical.var_moduli[static_cast<std::size_t>(v)];
    image_rows.push_back(std::move(e));
  }
  RowLattice split_image = RowLattice::from_rows(vars, image_rows);

  u128 total = on_radical.count();
  u128 split = lattice_points_mod(split_image, on_radical.var_moduli);
  if (split == 0 || total % split != 0) breach("split classes do not divide the radical hom count");

  Ext1Result result{total / split,
                    std::nullopt,
                    p.module,
                    std::move(omega),
                    t.module,
                    on_radical.solutions.homogeneous,
                    std::move(split_image)};
  if (result.size > 1) {
    if (total > 4096) breach("radical hom space exceeded the enumeration bound");
    auto flats = congruence_solutions_mod(on_radical.solutions, on_radical.var_moduli,
                                          static_cast<std::size_t>(total));
    for (const auto& flat : flats) {
      if (result.split_image.contains(flat)) continue;
      result.representative =
          unflatten(flat, result.radical_part.module->rank(), t.module->rank());
      break;
    }
    if (!result.representative) breach("no representative outside the split classes");
  }
  return result;
}

PropertyReport is_h_ring(const RingPtr& ring, const std::vector<SimpleEntry>& catalog) {
  PropertyReport report;
  report.property = "h-ring";
  const int r = static_cast<int>(catalog.size());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      Ext1Result ext = ext1(ring, catalog, i, j);
      if (ext.size == 1) continue;
      report.verdict = false;
      report.witness_pair = std::pair<i64, i64>(i, j);
      report.witness_matrix = ext.representative;
      return report;
    }
  }
  return report;
}

ModulePtr construct_extension(const Ext1Result& ext, const IntMatrix& cocycle) {
  const ModulePtr& t = ext.target;
  const ModulePtr& p = ext.cover;
  const ModulePtr& omega = ext.radical_part.module;
  if (cocycle.rows() != omega->rank() || cocycle.cols() != t->rank())
    throw std::invalid_argument("cocycle shape does not match rad P -> T");
  Vec flat = flatten(cocycle);
  if (!ext.hom_lattice.contains(flat))
    throw std::invalid_argument("cocycle is not a homomorphism on the radical of the cover");
  if (ext.split_image.contains(flat))
    throw std::invalid_argument("cocycle lies in the split class");

  // X = (T + P) / D with D the graph {(f(w), -w)}; D is the image of rad P
  // under a module map, so its generator images generate it.
  ModulePtr sum = FiniteModule::direct_sum(t, p);
  std::vector<Vec> gens;
  for (int l = 0; l < omega->rank(); ++l) {
    Vec v(static_cast<std::size_t>(t->rank() + p->rank()), 0);
    for (int q = 0; q < t->rank(); ++q) v[static_cast<std::size_t>(q)] = cocycle(l, q);
    for (int q = 0; q < p->rank(); ++q)
      v[static_cast<std::size_t>(t->rank() + q)] = -ext.radical_part.embed(l, q);
    gens.push_back(sum->canon(v));
  }
  QuotientModule x = quotient_module(submodule_generated(sum, gens));

  u128 left = static_cast<u128>(x.module->size()) * static_cast<u128>(omega->size());
  u128 right = static_cast<u128>(t->size()) * static_cast<u128>(p->size());
  if (left != right) breach("extension size is off the graph index");
  return x.module;
}

ProjectiveCoKaschReport check_projective_cokasch(const RingPtr& ring,
                                                 const std::vector<SimpleEntry>& catalog) {
  ProjectiveCoKaschReport out;
  out.cartan = cartan_matrix(ring, catalog);
  for (const SimpleEntry& entry : catalog) {
    EmbeddedModule p = principal(ring, entry);
    PropertyReport report = is_co_kasch(p.module, catalog);
    out.all_co_kasch = out.all_co_kasch && report.verdict;
    out.per_cover.push_back(std::move(report));
  }
  out.equivalence_holds = (out.all_co_kasch == out.cartan.is_diagonal());
  return out;
}

}  // namespace cokasch
