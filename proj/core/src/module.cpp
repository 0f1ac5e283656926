#include "cokasch/module.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace cokasch {

namespace {

constexpr i64 kMaxSize = 4096;

[[noreturn]] void breach(const std::string& what) {
  throw std::logic_error("internal invariant breach: " + what);
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::string triple_str(int k, int i, int j) {
  return "(" + std::to_string(k) + ", " + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::vector<std::vector<i64>> order_rows(const std::vector<i64>& orders) {
  std::vector<std::vector<i64>> rows;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::vector<i64> r(orders.size(), 0);
    r[j] = orders[j];
    rows.push_back(std::move(r));
  }
  return rows;
}

RowLattice lattice_with_orders(const std::vector<i64>& orders,
                               std::vector<std::vector<i64>> rows) {
  auto base = order_rows(orders);
  rows.insert(rows.end(), base.begin(), base.end());
  return RowLattice::from_rows(static_cast<int>(orders.size()), rows);
}

u128 box_points(const RowLattice& lat, const std::vector<i64>& orders) {
  if (lat.rank() != lat.cols()) breach("submodule lattice lost full rank");
  return lattice_points_mod(lat, orders);
}

Submodule radical_step(const ModulePtr& m, const Submodule& w) {
  std::vector<Vec> products;
  for (const auto& row : w.lattice.basis()) {
    Vec x = m->canon(Vec(row.begin(), row.end()));
    if (m->is_zero(x)) continue;
    for (const Vec& g : m->ring()->jacobson_radical().generators) products.push_back(m->act(x, g));
  }
  return submodule_generated(m, products);
}

}  // namespace

void validate_module(const FiniteRing& ring, const ModuleData& data) {
  const std::size_t m = data.gen_orders.size();
  const std::size_t nr = static_cast<std::size_t>(ring.rank());
  for (std::size_t i = 0; i < m; ++i)
    if (data.gen_orders[i] < 2)
      throw ValidationError("shape", "generator " + std::to_string(i) + " has additive order below 2");
  if (data.action.size() != nr)
    throw ValidationError("shape", "one action matrix per ring generator is required");
  for (std::size_t k = 0; k < nr; ++k)
    if (data.action[k].rows() != static_cast<int>(m) || data.action[k].cols() != static_cast<int>(m))
      throw ValidationError("shape", "action matrix " + std::to_string(k) + " is not square of the generator count");

  i64 size = 1;
  for (i64 e : data.gen_orders) {
    size = checked_mul(size, e);
    if (size > kMaxSize)
      throw ValidationError("size", "the presented module exceeds " + std::to_string(kMaxSize) + " elements");
  }

  auto ak = [&](std::size_t k, std::size_t i, std::size_t j) {
    return mod_floor(data.action[k](static_cast<int>(i), static_cast<int>(j)), data.gen_orders[j]);
  };
  const std::vector<i64>& d = ring.orders();
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (mod_floor(data.gen_orders[i] * ak(k, i, j), data.gen_orders[j]) != 0)
          throw ValidationError("bilinearity",
                                "entry " + triple_str(static_cast<int>(k), static_cast<int>(i), static_cast<int>(j)) +
                                    " is not annihilated by the order of module generator " + std::to_string(i));
        if (mod_floor(d[k] * ak(k, i, j), data.gen_orders[j]) != 0)
          throw ValidationError("bilinearity",
                                "entry " + triple_str(static_cast<int>(k), static_cast<int>(i), static_cast<int>(j)) +
                                    " is not annihilated by the order of ring generator " + std::to_string(k));
      }

  const Vec& one = ring.one();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      i64 acc = 0;
      for (std::size_t k = 0; k < nr; ++k) acc += one[k] * ak(k, i, j);
      if (mod_floor(acc - (i == j ? 1 : 0), data.gen_orders[j]) != 0)
        throw ValidationError("unitality",
                              "one does not act as the identity at entry " + pair_str(static_cast<int>(i), static_cast<int>(j)));
    }

  const RingData& rd = ring.data();
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          i64 lhs = 0;
          for (std::size_t t = 0; t < m; ++t) lhs += ak(i, a, t) * ak(j, t, b);
          i64 rhs = 0;
          for (std::size_t k = 0; k < nr; ++k) rhs += rd.structure[i][j][k] * ak(k, a, b);
          if (mod_floor(lhs - rhs, data.gen_orders[b]) != 0)
            throw ValidationError("compatibility",
                                  "ring pair " + pair_str(static_cast<int>(i), static_cast<int>(j)) +
                                      " fails at entry " + pair_str(static_cast<int>(a), static_cast<int>(b)));
        }
}

FiniteModule::FiniteModule(RingPtr ring, ModuleData data)
    : ring_(std::move(ring)), data_(std::move(data)) {
  const std::size_t m = data_.gen_orders.size();
  for (auto& a : data_.action)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        a(i, j) = mod_floor(a(i, j), data_.gen_orders[static_cast<std::size_t>(j)]);
  strides_.assign(m, 1);
  for (int i = static_cast<int>(m) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] * data_.gen_orders[static_cast<std::size_t>(i) + 1];
  size_ = m == 0 ? 1 : strides_[0] * data_.gen_orders[0];
}

ModulePtr FiniteModule::create(RingPtr ring, ModuleData data) {
  validate_module(*ring, data);
  return ModulePtr(new FiniteModule(std::move(ring), std::move(data)));
}

ModulePtr FiniteModule::zero_module(RingPtr ring) {
  ModuleData data;
  data.action.assign(static_cast<std::size_t>(ring->rank()), IntMatrix(0, 0));
  return create(std::move(ring), std::move(data));
}

ModulePtr FiniteModule::regular(RingPtr ring) {
  const int n = ring->rank();
  ModuleData data;
  data.gen_orders = ring->orders();
  for (int k = 0; k < n; ++k) {
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = ring->data().structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                                        [static_cast<std::size_t>(j)];
    data.action.push_back(std::move(a));
  }
  return create(std::move(ring), std::move(data));
}

ModulePtr FiniteModule::direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring() != b->ring())
    throw std::invalid_argument("direct sum requires modules over the same ring object");
  const int ma = a->rank(), mb = b->rank();
  ModuleData data;
  data.gen_orders = a->gen_orders();
  data.gen_orders.insert(data.gen_orders.end(), b->gen_orders().begin(), b->gen_orders().end());
  for (int k = 0; k < a->ring()->rank(); ++k) {
    IntMatrix blk(ma + mb, ma + mb);
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < ma; ++j) blk(i, j) = a->action(k)(i, j);
    for (int i = 0; i < mb; ++i)
      for (int j = 0; j < mb; ++j) blk(ma + i, ma + j) = b->action(k)(i, j);
    data.action.push_back(std::move(blk));
  }
  return create(a->ring(), std::move(data));
}

Vec FiniteModule::generator(int i) const {
  Vec g(data_.gen_orders.size(), 0);
  g[static_cast<std::size_t>(i)] = 1;
  return g;
}

Vec FiniteModule::canon(Vec x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], data_.gen_orders[i]);
  return x;
}

Vec FiniteModule::add(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i] + y[i], data_.gen_orders[i]);
  return out;
}

Vec FiniteModule::sub(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i] - y[i], data_.gen_orders[i]);
  return out;
}

Vec FiniteModule::negate(const Vec& x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(-x[i], data_.gen_orders[i]);
  return out;
}

bool FiniteModule::is_zero(const Vec& x) const {
  return std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; });
}

Vec FiniteModule::act_basis(const Vec& x, int k) const {
  const std::size_t m = data_.gen_orders.size();
  const IntMatrix& a = data_.action[static_cast<std::size_t>(k)];
  Vec out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += x[i] * a(static_cast<int>(i), static_cast<int>(j));
  }
  for (std::size_t j = 0; j < m; ++j) out[j] = mod_floor(out[j], data_.gen_orders[j]);
  return out;
}

Vec FiniteModule::act(const Vec& x, const Vec& r) const {
  const std::size_t m = data_.gen_orders.size();
  Vec cx = canon(x);
  Vec out(m, 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    i64 rk = mod_floor(r[k], ring_->orders()[k]);
    if (rk == 0) continue;
    Vec part = act_basis(cx, static_cast<int>(k));
    for (std::size_t j = 0; j < m; ++j) out[j] += rk * part[j];
  }
  for (std::size_t j = 0; j < m; ++j) out[j] = mod_floor(out[j], data_.gen_orders[j]);
  return out;
}

i64 FiniteModule::additive_order(const Vec& x) const {
  i64 ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    ord = std::lcm(ord, data_.gen_orders[i] / std::gcd(data_.gen_orders[i], x[i]));
  return ord;
}

i64 FiniteModule::index_of(const Vec& x) const {
  i64 idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx += x[i] * strides_[i];
  return idx;
}

Vec FiniteModule::element_at(i64 index) const {
  Vec x(data_.gen_orders.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = index / strides_[i];
    index %= strides_[i];
  }
  return x;
}

std::vector<i64> FiniteModule::additive_invariants() const {
  SmithDecomposition s = smith_decompose(IntMatrix::diagonal(data_.gen_orders));
  std::vector<i64> inv;
  for (int t = 0; t < s.d.rows(); ++t)
    if (s.d(t, t) >= 2) inv.push_back(s.d(t, t));
  return inv;
}

u128 Submodule::size() const { return box_points(lattice, ambient->gen_orders()); }

bool Submodule::contains(const Vec& x) const { return lattice.contains(ambient->canon(x)); }

bool Submodule::is_zero() const { return size() == 1; }

bool Submodule::is_full() const { return size() == static_cast<u128>(ambient->size()); }

Submodule full_submodule(const ModulePtr& m) {
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < m->rank(); ++i) {
    std::vector<i64> r(static_cast<std::size_t>(m->rank()), 0);
    r[static_cast<std::size_t>(i)] = 1;
    rows.push_back(std::move(r));
  }
  return Submodule{m, lattice_with_orders(m->gen_orders(), std::move(rows))};
}

Submodule zero_submodule(const ModulePtr& m) {
  return Submodule{m, lattice_with_orders(m->gen_orders(), {})};
}

Submodule submodule_generated(const ModulePtr& m, const std::vector<Vec>& gens) {
  std::vector<std::vector<i64>> rows;
  for (const Vec& g : gens) rows.push_back(m->canon(g));
  RowLattice lat = lattice_with_orders(m->gen_orders(), std::move(rows));
  for (;;) {
    std::vector<std::vector<i64>> extra;
    for (const auto& row : lat.basis()) {
      Vec x = m->canon(Vec(row.begin(), row.end()));
      if (m->is_zero(x)) continue;
      for (int k = 0; k < m->ring()->rank(); ++k) {
        Vec y = m->act_basis(x, k);
        if (!lat.contains(y)) extra.push_back(std::move(y));
      }
    }
    if (extra.empty()) break;
    lat = lattice_join(lat, extra);
  }
  return Submodule{m, std::move(lat)};
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("submodule sum needs a common ambient module");
  return Submodule{a.ambient, lattice_join(a.lattice, b.lattice.basis())};
}

bool submodule_contains(const Submodule& a, const Submodule& b) {
  return a.lattice.contains_lattice(b.lattice);
}

bool submodule_equal(const Submodule& a, const Submodule& b) { return a.lattice == b.lattice; }

std::vector<Vec> submodule_elements(const Submodule& s, std::size_t cap) {
  const ModulePtr& m = s.ambient;
  std::vector<Vec> gens;
  for (const auto& row : s.lattice.basis()) {
    Vec g = m->canon(Vec(row.begin(), row.end()));
    if (!m->is_zero(g)) gens.push_back(std::move(g));
  }
  std::set<Vec> seen;
  std::vector<Vec> queue{m->zero()};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Vec& g : gens) {
      Vec nxt = m->add(queue[head], g);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw std::invalid_argument("submodule has more elements than the cap");
        queue.push_back(std::move(nxt));
      }
    }
  return std::vector<Vec>(seen.begin(), seen.end());
}

QuotientModule quotient_module(const Submodule& s) {
  const ModulePtr& m = s.ambient;
  IntMatrix subgens = IntMatrix::from_rows(s.lattice.basis(), m->rank());
  QuotientPresentation qp = quotient_presentation(m->gen_orders(), subgens);
  const int q = static_cast<int>(qp.presentation.generator_count);
  ModuleData data;
  data.gen_orders = qp.presentation.orders;
  for (int k = 0; k < m->ring()->rank(); ++k) {
    IntMatrix b = matmul(matmul(qp.lift, m->data().action[static_cast<std::size_t>(k)]), qp.to_quotient);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) b(i, j) = mod_floor(b(i, j), data.gen_orders[static_cast<std::size_t>(j)]);
    data.action.push_back(std::move(b));
  }
  return QuotientModule{FiniteModule::create(m->ring(), std::move(data)), qp.to_quotient, qp.lift};
}

namespace {

// Coordinates of y (a member of the lattice spanned by basis) with respect to
// basis, mod the ambient orders.
Vec coordinates_in_basis(const IntMatrix& basis, const std::vector<i64>& orders, const Vec& y) {
  const int m = basis.rows();
  IntMatrix a(static_cast<int>(orders.size()), m);
  for (std::size_t j = 0; j < orders.size(); ++j)
    for (int t = 0; t < m; ++t) a(static_cast<int>(j), t) = basis(t, static_cast<int>(j));
  auto sol = solve_congruence_system(a, orders, y);
  if (!sol) breach("submodule member has no coordinates over the lattice basis");
  return sol->particular;
}

}  // namespace

EmbeddedModule submodule_as_module(const Submodule& s) {
  const ModulePtr& m = s.ambient;
  const int mr = m->rank();
  IntMatrix basis = IntMatrix::from_rows(s.lattice.basis(), mr);

  // Relations among the chosen generators of the submodule.
  IntMatrix rel_system(mr, basis.rows());
  for (int j = 0; j < mr; ++j)
    for (int t = 0; t < basis.rows(); ++t) rel_system(j, t) = basis(t, j);
  auto rel = solve_congruence_system(rel_system, m->gen_orders(), Vec(static_cast<std::size_t>(mr), 0));
  if (!rel) breach("homogeneous relation system is unsolvable");
  QuotientPresentation pres = presentation_from_relations(basis.rows(), rel->homogeneous.basis());
  const int q = static_cast<int>(pres.presentation.generator_count);

  IntMatrix embed(q, mr);
  for (int l = 0; l < q; ++l) {
    Vec x(static_cast<std::size_t>(mr), 0);
    for (int t = 0; t < basis.rows(); ++t)
      for (int j = 0; j < mr; ++j) x[static_cast<std::size_t>(j)] += pres.lift(l, t) * basis(t, j);
    x = m->canon(x);
    for (int j = 0; j < mr; ++j) embed(l, j) = x[static_cast<std::size_t>(j)];
  }

  ModuleData data;
  data.gen_orders = pres.presentation.orders;
  for (int k = 0; k < m->ring()->rank(); ++k) {
    IntMatrix b(q, q);
    for (int l = 0; l < q; ++l) {
      Vec x(static_cast<std::size_t>(mr));
      for (int j = 0; j < mr; ++j) x[static_cast<std::size_t>(j)] = embed(l, j);
      Vec y = m->act_basis(x, k);
      Vec coeff = coordinates_in_basis(basis, m->gen_orders(), y);
      for (int c = 0; c < q; ++c) {
        i64 acc = 0;
        for (int t = 0; t < basis.rows(); ++t) acc += coeff[static_cast<std::size_t>(t)] * pres.to_quotient(t, c);
        b(l, c) = mod_floor(acc, data.gen_orders[static_cast<std::size_t>(c)]);
      }
    }
    data.action.push_back(std::move(b));
  }
  return EmbeddedModule{FiniteModule::create(m->ring(), std::move(data)), std::move(embed)};
}

HomSpace hom_space(const ModulePtr& src, const ModulePtr& dst) {
  if (src->ring() != dst->ring())
    throw std::invalid_argument("hom space needs modules over the same ring object");
  const int m = src->rank(), n = dst->rank(), nr = src->ring()->rank();
  const int vars = m * n;
  const int rows = m * n + m * nr * n;
  IntMatrix a(rows, vars);
  std::vector<i64> moduli(static_cast<std::size_t>(rows), 1);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      a(idx, i * n + j) = src->gen_orders()[static_cast<std::size_t>(i)];
      moduli[static_cast<std::size_t>(idx)] = dst->gen_orders()[static_cast<std::size_t>(j)];
      ++idx;
    }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < nr; ++k)
      for (int l = 0; l < n; ++l) {
        for (int j = 0; j < m; ++j) a(idx, j * n + l) += src->action(k)(i, j);
        for (int j = 0; j < n; ++j) a(idx, i * n + j) -= dst->action(k)(j, l);
        moduli[static_cast<std::size_t>(idx)] = dst->gen_orders()[static_cast<std::size_t>(l)];
        ++idx;
      }
  auto sol = solve_congruence_system(a, moduli, Vec(static_cast<std::size_t>(rows), 0));
  if (!sol) breach("homogeneous hom system is unsolvable");
  std::vector<i64> var_moduli(static_cast<std::size_t>(vars), 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      var_moduli[static_cast<std::size_t>(i * n + j)] = dst->gen_orders()[static_cast<std::size_t>(j)];
  return HomSpace{src, dst, std::move(*sol), std::move(var_moduli)};
}

u128 HomSpace::count() const { return congruence_solution_count(solutions, var_moduli); }

u128 HomSpace::count_capped(u128 cap) const {
  return congruence_solution_count_capped(solutions, var_moduli, cap);
}

std::vector<IntMatrix> HomSpace::matrices(std::size_t cap) const {
  const int m = src->rank(), n = dst->rank();
  std::vector<IntMatrix> out;
  for (const auto& flat : congruence_solutions_mod(solutions, var_moduli, cap)) {
    IntMatrix h(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = flat[static_cast<std::size_t>(i * n + j)];
    out.push_back(std::move(h));
  }
  return out;
}

u128 hom_count(const ModulePtr& src, const ModulePtr& dst) { return hom_space(src, dst).count(); }

Vec ModuleMap::apply(const Vec& x) const {
  Vec cx = src->canon(x);
  Vec out(static_cast<std::size_t>(dst->rank()), 0);
  for (int i = 0; i < matrix.rows(); ++i) {
    if (cx[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < matrix.cols(); ++j)
      out[static_cast<std::size_t>(j)] += cx[static_cast<std::size_t>(i)] * matrix(i, j);
  }
  return dst->canon(std::move(out));
}

Submodule ModuleMap::kernel() const {
  const int m = src->rank(), n = dst->rank();
  IntMatrix a(n, m);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) a(j, i) = matrix(i, j);
  auto sol = solve_congruence_system(a, dst->gen_orders(), Vec(static_cast<std::size_t>(n), 0));
  if (!sol) breach("homogeneous kernel system is unsolvable");
  return Submodule{src, lattice_join(sol->homogeneous, order_rows(src->gen_orders()))};
}

Submodule ModuleMap::image() const {
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < matrix.rows(); ++i) {
    std::vector<i64> r(static_cast<std::size_t>(matrix.cols()));
    for (int j = 0; j < matrix.cols(); ++j) r[static_cast<std::size_t>(j)] = matrix(i, j);
    rows.push_back(std::move(r));
  }
  return Submodule{dst, lattice_with_orders(dst->gen_orders(), std::move(rows))};
}

bool ModuleMap::is_injective() const { return kernel().size() == 1; }

bool ModuleMap::is_surjective() const { return image().is_full(); }

Submodule radical_submodule(const ModulePtr& m) { return radical_step(m, full_submodule(m)); }

Submodule socle_submodule(const ModulePtr& m) {
  const RingIdeal& jac = m->ring()->jacobson_radical();
  const int mr = m->rank();
  const int rows = static_cast<int>(jac.generators.size()) * mr;
  IntMatrix a(rows, mr);
  std::vector<i64> moduli(static_cast<std::size_t>(rows), 1);
  int idx = 0;
  for (const Vec& g : jac.generators) {
    for (int j = 0; j < mr; ++j) {
      for (int i = 0; i < mr; ++i) a(idx, i) = m->act(m->generator(i), g)[static_cast<std::size_t>(j)];
      moduli[static_cast<std::size_t>(idx)] = m->gen_orders()[static_cast<std::size_t>(j)];
      ++idx;
    }
  }
  auto sol = solve_congruence_system(a, moduli, Vec(static_cast<std::size_t>(rows), 0));
  if (!sol) breach("homogeneous socle system is unsolvable");
  return Submodule{m, lattice_join(sol->homogeneous, order_rows(m->gen_orders()))};
}

bool is_simple(const ModulePtr& m) {
  if (m->size() < 2) return false;
  for (i64 xi = 1; xi < m->size(); ++xi)
    if (!submodule_generated(m, {m->element_at(xi)}).is_full()) return false;
  return true;
}

namespace {

bool flat_is_surjective(const ModulePtr& src, const ModulePtr& dst, const std::vector<i64>& flat) {
  const int m = src->rank(), n = dst->rank();
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < m; ++i)
    rows.emplace_back(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  RowLattice lat = lattice_with_orders(dst->gen_orders(), std::move(rows));
  return box_points(lat, dst->gen_orders()) == static_cast<u128>(dst->size());
}

// Exhaustive search over generator images; each partial assignment is kept
// only while the hom system stays solvable under the corresponding pinning
// rows, so the search never follows a prefix that extends to no map at all.
bool backtrack_isomorphism(const ModulePtr& a, const ModulePtr& b) {
  const int m = a->rank(), n = b->rank(), nr = a->ring()->rank();
  const int vars = m * n;
  std::vector<std::vector<i64>> base_rows;
  std::vector<i64> base_moduli;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<i64> r(static_cast<std::size_t>(vars), 0);
      r[static_cast<std::size_t>(i * n + j)] = a->gen_orders()[static_cast<std::size_t>(i)];
      base_rows.push_back(std::move(r));
      base_moduli.push_back(b->gen_orders()[static_cast<std::size_t>(j)]);
    }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < nr; ++k)
      for (int l = 0; l < n; ++l) {
        std::vector<i64> r(static_cast<std::size_t>(vars), 0);
        for (int j = 0; j < m; ++j) r[static_cast<std::size_t>(j * n + l)] += a->action(k)(i, j);
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i * n + j)] -= b->action(k)(j, l);
        base_rows.push_back(std::move(r));
        base_moduli.push_back(b->gen_orders()[static_cast<std::size_t>(l)]);
      }

  std::vector<std::vector<i64>> pins;
  std::vector<i64> pin_moduli, pin_rhs;
  auto feasible = [&]() {
    std::vector<std::vector<i64>> rows = base_rows;
    rows.insert(rows.end(), pins.begin(), pins.end());
    std::vector<i64> moduli = base_moduli;
    moduli.insert(moduli.end(), pin_moduli.begin(), pin_moduli.end());
    std::vector<i64> rhs(base_rows.size(), 0);
    rhs.insert(rhs.end(), pin_rhs.begin(), pin_rhs.end());
    return solve_congruence_system(IntMatrix::from_rows(rows, vars), moduli, rhs).has_value();
  };

  std::vector<i64> flat(static_cast<std::size_t>(vars), 0);
  std::function<bool(int)> dfs = [&](int i) {
    if (i == m) return flat_is_surjective(a, b, flat);
    for (i64 yi = 0; yi < b->size(); ++yi) {
      Vec y = b->element_at(yi);
      if (b->additive_order(y) != a->gen_orders()[static_cast<std::size_t>(i)]) continue;
      std::size_t mark_rows = pins.size();
      for (int j = 0; j < n; ++j) {
        std::vector<i64> r(static_cast<std::size_t>(vars), 0);
        r[static_cast<std::size_t>(i * n + j)] = 1;
        pins.push_back(std::move(r));
        pin_moduli.push_back(b->gen_orders()[static_cast<std::size_t>(j)]);
        pin_rhs.push_back(y[static_cast<std::size_t>(j)]);
        flat[static_cast<std::size_t>(i * n + j)] = y[static_cast<std::size_t>(j)];
      }
      if (feasible() && dfs(i + 1)) return true;
      pins.resize(mark_rows);
      pin_moduli.resize(mark_rows);
      pin_rhs.resize(mark_rows);
    }
    return false;
  };
  return dfs(0);
}

}  // namespace

namespace {

// Sizes of M, M*J, M*J^2, ... followed by |Soc(M)|. Any isomorphism must
// match the whole signature, so mismatches reject before any hom search.
std::vector<u128> filtration_signature(const ModulePtr& m) {
  std::vector<u128> sig;
  Submodule w = full_submodule(m);
  int guard = 0;
  while (w.size() > 1) {
    if (++guard > 64) breach("radical series fails to terminate");
    sig.push_back(w.size());
    w = radical_step(m, w);
  }
  sig.push_back(socle_submodule(m).size());
  return sig;
}

}  // namespace

bool is_isomorphic(const ModulePtr& a, const ModulePtr& b, u64 seed) {
  if (a->ring() != b->ring())
    throw std::invalid_argument("isomorphism test needs modules over the same ring object");
  if (a->size() != b->size()) return false;
  if (a->additive_invariants() != b->additive_invariants()) return false;
  if (a->size() == 1) return true;
  if (filtration_signature(a) != filtration_signature(b)) return false;

  constexpr std::size_t kEnumCap = 4096;
  HomSpace hs = hom_space(a, b);
  u128 cross = hs.count_capped(kEnumCap);
  if (cross <= kEnumCap) {
    for (const auto& flat : congruence_solutions_mod(hs.solutions, hs.var_moduli, kEnumCap))
      if (flat_is_surjective(a, b, flat)) return true;
    return false;
  }

  // Too many maps to enumerate. An isomorphism forces equal hom counts
  // against both ends, so compare those (saturated far above the enum cap)
  // before searching.
  const u128 kCountCap = static_cast<u128>(1) << 100;
  cross = hs.count_capped(kCountCap);
  if (cross != hom_space(a, a).count_capped(kCountCap) ||
      cross != hom_space(b, b).count_capped(kCountCap) ||
      cross != hom_space(b, a).count_capped(kCountCap))
    return false;

  std::mt19937_64 eng(seed);
  const auto& basis = hs.solutions.homogeneous.basis();
  for (int trial = 0; trial < 512; ++trial) {
    std::vector<i64> flat(hs.var_moduli.size(), 0);
    for (const auto& row : basis) {
      i64 c = static_cast<i64>(eng() % 4096);
      if (c == 0) continue;
      for (std::size_t t = 0; t < flat.size(); ++t) flat[t] += c * row[t];
    }
    for (std::size_t t = 0; t < flat.size(); ++t) flat[t] = mod_floor(flat[t], hs.var_moduli[t]);
    if (flat_is_surjective(a, b, flat)) return true;
  }
  return backtrack_isomorphism(a, b);
}

std::vector<SimpleEntry> simple_catalog(const RingPtr& ring) {
  ModulePtr reg = FiniteModule::regular(ring);
  QuotientModule top = quotient_module(radical_submodule(reg));
  const ModulePtr& bar = top.module;

  std::vector<ModulePtr> classes;
  std::vector<Submodule> class_subs;
  for (i64 xi = 1; xi < bar->size(); ++xi) {
    Vec x = bar->element_at(xi);
    bool known = false;
    for (const Submodule& s : class_subs)
      if (s.contains(x)) {
        known = true;
        break;
      }
    if (known) continue;
    Submodule s = submodule_generated(bar, {x});
    bool minimal = true;
    for (const Vec& y : submodule_elements(s, kMaxSize)) {
      if (bar->is_zero(y)) continue;
      if (!submodule_equal(submodule_generated(bar, {y}), s)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    ModulePtr abstract = submodule_as_module(s).module;
    bool duplicate = false;
    for (const ModulePtr& known_class : classes)
      if (hom_count(abstract, known_class) > 1) {
        duplicate = true;
        break;
      }
    if (!duplicate) {
      classes.push_back(abstract);
      class_subs.push_back(std::move(s));
    }
  }

  std::vector<Vec> prims = ring->primitive_idempotents();
  std::vector<ModulePtr> tops;
  for (const Vec& e : prims) {
    Submodule er = submodule_generated(reg, {e});
    ModulePtr er_mod = submodule_as_module(er).module;
    tops.push_back(quotient_module(radical_submodule(er_mod)).module);
  }

  std::vector<SimpleEntry> entries;
  for (const ModulePtr& s : classes) {
    const Vec* cover = nullptr;
    for (std::size_t p = 0; p < prims.size(); ++p)
      if (hom_count(tops[p], s) > 1) {
        cover = &prims[p];
        break;
      }
    if (cover == nullptr) breach("a simple module has no projective cover among the primitive idempotents");
    entries.push_back(SimpleEntry{s, *cover, static_cast<i64>(hom_count(s, s))});
  }
  std::sort(entries.begin(), entries.end(), [&](const SimpleEntry& x, const SimpleEntry& y) {
    return ring->index_of(x.cover_idempotent) < ring->index_of(y.cover_idempotent);
  });
  return entries;
}

std::vector<i64> composition_profile(const ModulePtr& m, const std::vector<SimpleEntry>& catalog) {
  std::vector<i64> mults(catalog.size(), 0);
  Submodule w = full_submodule(m);
  int guard = 0;
  while (w.size() > 1) {
    if (++guard > 64) breach("radical series fails to terminate");
    ModulePtr layer = submodule_as_module(w).module;
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      u128 h = hom_count(layer, catalog[j].module);
      i64 e = catalog[j].endo_size;
      i64 k = 0;
      while (h > 1) {
        if (h % static_cast<u128>(e) != 0) breach("hom count is not a power of the endomorphism size");
        h /= static_cast<u128>(e);
        ++k;
      }
      mults[j] += k;
    }
    w = radical_step(m, w);
  }
  u128 expected = 1;
  for (std::size_t j = 0; j < catalog.size(); ++j)
    for (i64 t = 0; t < mults[j]; ++t)
      expected = checked_mul_u128(expected, static_cast<u128>(catalog[j].module->size()));
  if (expected != static_cast<u128>(m->size()))
    breach("composition multiplicities do not factor the module size");
  return mults;
}

}  // namespace cokasch
