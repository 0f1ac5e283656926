#include "cokasch/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cokasch {

namespace {

[[noreturn]] void internal_error(const std::string& what) {
  throw std::logic_error("internal invariant breach: " + what);
}

// Quotient q minimizing |a - q*b|, ties toward the smaller remainder >= 0.
i64 balanced_quot(i64 a, i64 b) {
  i64 p = b < 0 ? -b : b;
  i64 r = mod_floor(a, p);
  if (2 * r > p) r -= p;
  return (a - r) / b;
}

i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s1 = 0;
  i64 old_t = 0, t1 = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - checked_mul(q, r);
    old_r = r; r = tmp;
    tmp = old_s - checked_mul(q, s1);
    old_s = s1; s1 = tmp;
    tmp = old_t - checked_mul(q, t1);
    old_t = t1; t1 = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  s = old_s; t = old_t;
  return old_r;
}

struct SnfOptions {
  bool track_u = true;
  bool track_v = true;
  bool track_vinv = false;
  i64 reduce_modulus = 0;  // > 0 only when the modulus rows are part of the input
};

struct SnfResult {
  IntMatrix u, d, v, vinv;
};

// Smith-style diagonalization. With reduce_modulus = L > 0 the active block
// is folded into balanced residues mod L after every pivot. Folding changes
// the row span, but when the input lattice contains L*Z^n the span plus
// L*Z^n is invariant, so the true diagonal is gcd(d_t, L) and V stays exact.
// U is meaningless in that mode; the exact entry points never set it.
SnfResult snf_run(IntMatrix input, const SnfOptions& opt) {
  const int nr = input.rows(), nc = input.cols();
  SnfResult res;
  res.d = std::move(input);
  IntMatrix& d = res.d;
  if (opt.track_u) res.u = IntMatrix::identity(nr);
  if (opt.track_v) res.v = IntMatrix::identity(nc);
  if (opt.track_vinv) res.vinv = IntMatrix::identity(nc);
  const i64 L = opt.reduce_modulus;

  auto row_add = [&](int dst, int src, i64 q) {
    d.add_row_multiple(dst, src, q);
    if (opt.track_u) res.u.add_row_multiple(dst, src, q);
  };
  auto row_swap = [&](int a, int b) {
    d.swap_rows(a, b);
    if (opt.track_u) res.u.swap_rows(a, b);
  };
  auto col_add = [&](int dst, int src, i64 q) {
    d.add_col_multiple(dst, src, q);
    if (opt.track_v) res.v.add_col_multiple(dst, src, q);
    if (opt.track_vinv) res.vinv.add_row_multiple(src, dst, -q);
  };
  auto col_swap = [&](int a, int b) {
    d.swap_cols(a, b);
    if (opt.track_v) res.v.swap_cols(a, b);
    if (opt.track_vinv) res.vinv.swap_rows(a, b);
  };

  auto select_pivot = [&](int t) -> bool {
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j) {
        i64 a = d(i, j);
        if (a == 0) continue;
        if (a < 0) a = -a;
        if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
      }
    if (pi < 0) return false;
    row_swap(t, pi);
    col_swap(t, pj);
    return true;
  };

  const int lim = std::min(nr, nc);
  for (int t = 0; t < lim; ++t) {
    if (!select_pivot(t)) break;
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < nr; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -balanced_quot(d(i, t), d(t, t)));
        if (d(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < nc; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -balanced_quot(d(t, j), d(t, t)));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        select_pivot(t);
        continue;
      }
      i64 p = d(t, t) < 0 ? -d(t, t) : d(t, t);
      int offender = -1;
      for (int i = t + 1; i < nr && offender < 0; ++i)
        for (int j = t + 1; j < nc; ++j)
          if (mod_floor(d(i, j), p) != 0) { offender = i; break; }
      if (offender < 0) break;
      row_add(t, offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (opt.track_u) res.u.negate_row(t);
    }
    if (L > 0)
      for (int i = t + 1; i < nr; ++i)
        for (int j = t + 1; j < nc; ++j) d(i, j) = balanced_rem(d(i, j), L);
  }
  if (L > 0)
    for (int t = 0; t < lim; ++t) d(t, t) = std::gcd(d(t, t), L);
  return res;
}

void vec_canon(std::vector<i64>& w, i64 modulus) {
  if (modulus <= 0) return;
  for (auto& x : w) x = mod_floor(x, modulus);
}

void vec_axpy(std::vector<i64>& dst, i64 q, const std::vector<i64>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = checked_add(dst[i], checked_mul(q, src[i]));
}

// Row set in echelon form over Z (modulus 0) or Z/modulus. Only the first
// pivot_width columns may carry pivots; anything past them rides along
// (the congruence solver keeps the right-hand side there).
struct EchelonRows {
  int width = 0;
  int pivot_width = 0;
  i64 modulus = 0;
  std::vector<std::vector<i64>> rows;
  std::vector<int> pivcols;

  int row_of_pivot(int c) const {
    for (std::size_t r = 0; r < pivcols.size(); ++r)
      if (pivcols[r] == c) return static_cast<int>(r);
    return -1;
  }

  // Residual of w after elimination: all-zero in the pivot columns; a
  // nonzero passenger tail means the row was inconsistent with the set.
  std::vector<i64> insert(std::vector<i64> w) {
    vec_canon(w, modulus);
    for (int c = 0; c < pivot_width; ++c) {
      if (w[static_cast<std::size_t>(c)] == 0) continue;
      int rp = row_of_pivot(c);
      if (rp < 0) {
        rows.push_back(w);
        pivcols.push_back(c);
        return std::vector<i64>(static_cast<std::size_t>(width), 0);
      }
      std::vector<i64>& p = rows[static_cast<std::size_t>(rp)];
      i64 a = p[static_cast<std::size_t>(c)];
      i64 b = w[static_cast<std::size_t>(c)];
      if (b % a == 0) {
        vec_axpy(w, -(b / a), p);
      } else {
        i64 s, t;
        i64 g = ext_gcd(a, b, s, t);
        std::vector<i64> np(static_cast<std::size_t>(width), 0);
        vec_axpy(np, s, p);
        vec_axpy(np, t, w);
        std::vector<i64> nw = w;
        for (auto& x : nw) x = checked_mul(x, a / g);
        vec_axpy(nw, -(b / g), p);
        vec_canon(np, modulus);
        p = std::move(np);
        w = std::move(nw);
      }
      vec_canon(w, modulus);
      if (w[static_cast<std::size_t>(c)] != 0)
        internal_error("echelon elimination left a pivot residue");
    }
    return w;
  }

  // Canonical Hermite shape: rows ordered by pivot column, pivots positive,
  // entries above each pivot reduced into [0, pivot).
  void normalize() {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivcols[a] < pivcols[b]; });
    std::vector<std::vector<i64>> nrows;
    std::vector<int> npiv;
    for (std::size_t k : order) {
      nrows.push_back(std::move(rows[k]));
      npiv.push_back(pivcols[k]);
    }
    rows = std::move(nrows);
    pivcols = std::move(npiv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int c = pivcols[r];
      if (rows[r][static_cast<std::size_t>(c)] < 0)
        for (auto& x : rows[r]) x = -x;
      i64 p = rows[r][static_cast<std::size_t>(c)];
      for (std::size_t r2 = 0; r2 < r; ++r2) {
        i64 q = floor_div(rows[r2][static_cast<std::size_t>(c)], p);
        if (q != 0) vec_axpy(rows[r2], -q, rows[r]);
        vec_canon(rows[r2], modulus);
      }
    }
  }
};

std::vector<i64> mat_times_col(const IntMatrix& m, const std::vector<i64>& z) {
  if (m.cols() != static_cast<int>(z.size()))
    throw std::invalid_argument("mat_times_col shape mismatch");
  std::vector<i64> out(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)] =
          checked_add(out[static_cast<std::size_t>(i)],
                      checked_mul(m(i, j), z[static_cast<std::size_t>(j)]));
  return out;
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& m) {
  SnfResult r = snf_run(m, SnfOptions{.track_u = true, .track_v = true});
  return SmithDecomposition{std::move(r.u), std::move(r.d), std::move(r.v)};
}

RowLattice RowLattice::from_rows(int cols, const std::vector<std::vector<i64>>& rows) {
  EchelonRows ech;
  ech.width = cols;
  ech.pivot_width = cols;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("lattice row width mismatch");
    ech.insert(r);
  }
  ech.normalize();
  RowLattice out;
  out.cols_ = cols;
  out.rows_ = std::move(ech.rows);
  out.pivots_ = std::move(ech.pivcols);
  return out;
}

i64 RowLattice::pivot_entry(int which) const {
  return rows_[static_cast<std::size_t>(which)]
              [static_cast<std::size_t>(pivots_[static_cast<std::size_t>(which)])];
}

std::vector<i64> RowLattice::reduce(std::span<const i64> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("lattice reduce width mismatch");
  std::vector<i64> w(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int c = pivots_[r];
    i64 q = floor_div(w[static_cast<std::size_t>(c)], pivot_entry(static_cast<int>(r)));
    if (q != 0) vec_axpy(w, -q, rows_[r]);
  }
  return w;
}

bool RowLattice::contains(std::span<const i64> v) const {
  std::vector<i64> w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](i64 x) { return x == 0; });
}

bool RowLattice::contains_lattice(const RowLattice& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool RowLattice::operator==(const RowLattice& other) const {
  return cols_ == other.cols_ && rows_ == other.rows_ && pivots_ == other.pivots_;
}

std::string RowLattice::key() const {
  std::ostringstream os;
  os << cols_ << '#';
  for (const auto& r : rows_) {
    for (i64 x : r) os << x << ',';
    os << ';';
  }
  return os.str();
}

RowLattice lattice_join(const RowLattice& a, const std::vector<std::vector<i64>>& extra) {
  std::vector<std::vector<i64>> rows = a.basis();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return RowLattice::from_rows(a.cols(), rows);
}

u128 lattice_points_mod(const RowLattice& lat, std::span<const i64> moduli) {
  if (lat.cols() != static_cast<int>(moduli.size()) || lat.rank() != lat.cols())
    throw std::invalid_argument("lattice_points_mod needs a full-rank lattice over the box");
  u128 count = 1;
  for (int j = 0; j < lat.cols(); ++j) {
    i64 p = lat.pivot_entry(j);
    if (moduli[static_cast<std::size_t>(j)] % p != 0)
      internal_error("lattice_points_mod on a lattice outside diag(moduli)");
    count = checked_mul_u128(count, static_cast<u128>(moduli[static_cast<std::size_t>(j)] / p));
  }
  return count;
}

u128 lattice_index(const RowLattice& big, const RowLattice& small) {
  if (big.cols() != small.cols() || big.rank() != big.cols() || small.rank() != small.cols())
    throw std::invalid_argument("lattice_index needs full-rank lattices of equal width");
  u128 idx = 1;
  for (int j = 0; j < big.cols(); ++j) {
    i64 bp = big.pivot_entry(j);
    i64 sp = small.pivot_entry(j);
    if (sp % bp != 0) internal_error("lattice_index on non-nested lattices");
    idx = checked_mul_u128(idx, static_cast<u128>(sp / bp));
  }
  return idx;
}

std::optional<CongruenceSolution> solve_congruence_system(const IntMatrix& a,
                                                          std::span<const i64> moduli,
                                                          std::span<const i64> rhs) {
  const int r = a.rows(), n = a.cols();
  if (static_cast<int>(moduli.size()) != r || static_cast<int>(rhs.size()) != r)
    throw std::invalid_argument("congruence system shape mismatch");
  i64 big_l = 1;
  for (i64 m : moduli) {
    if (m < 1) throw std::invalid_argument("congruence modulus must be >= 1");
    big_l = lcm_checked(big_l, m);
  }

  std::vector<std::vector<i64>> identity_rows;
  if (big_l == 1) {
    for (int j = 0; j < n; ++j) {
      std::vector<i64> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      identity_rows.push_back(std::move(e));
    }
    return CongruenceSolution{std::vector<i64>(static_cast<std::size_t>(n), 0),
                              RowLattice::from_rows(n, identity_rows), 1};
  }

  // Uniform modulus: row i scaled by L/m_i turns "mod m_i" into "mod L",
  // then gcd elimination mod L dedups the constraint set down to <= n rows.
  EchelonRows ech;
  ech.width = n + 1;
  ech.pivot_width = n;
  ech.modulus = big_l;
  for (int i = 0; i < r; ++i) {
    i64 scale = big_l / moduli[static_cast<std::size_t>(i)];
    std::vector<i64> w(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = checked_mul(a(i, j), scale);
    w[static_cast<std::size_t>(n)] = checked_mul(rhs[static_cast<std::size_t>(i)], scale);
    std::vector<i64> residual = ech.insert(std::move(w));
    if (mod_floor(residual[static_cast<std::size_t>(n)], big_l) != 0) return std::nullopt;
  }
  ech.normalize();

  // Exact solve of H*x + L*k = c over Z via one Smith decomposition.
  const int h = static_cast<int>(ech.rows.size());
  IntMatrix c(h, n + h);
  std::vector<i64> cvec(static_cast<std::size_t>(h));
  for (int p = 0; p < h; ++p) {
    for (int j = 0; j < n; ++j) c(p, j) = ech.rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    c(p, n + p) = big_l;
    cvec[static_cast<std::size_t>(p)] = ech.rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
  }
  SnfResult s = snf_run(std::move(c), SnfOptions{.track_u = true, .track_v = true});
  std::vector<i64> uc = h > 0 ? mat_times_col(s.u, cvec) : std::vector<i64>{};
  std::vector<i64> z(static_cast<std::size_t>(n + h), 0);
  for (int i = 0; i < h; ++i) {
    i64 di = s.d(i, i);
    i64 ci = uc[static_cast<std::size_t>(i)];
    if (di != 0) {
      if (ci % di != 0) return std::nullopt;
      z[static_cast<std::size_t>(i)] = ci / di;
    } else if (ci != 0) {
      return std::nullopt;
    }
  }
  std::vector<i64> particular(static_cast<std::size_t>(n), 0);
  if (h > 0) {
    std::vector<i64> y = mat_times_col(s.v, z);
    for (int j = 0; j < n; ++j) particular[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)];
  }

  std::vector<std::vector<i64>> kernel_rows;
  for (int j = 0; j < n + h; ++j) {
    bool free_col = j >= h || s.d(j, j) == 0;
    if (!free_col) continue;
    std::vector<i64> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = s.v(i, j);
    kernel_rows.push_back(std::move(x));
  }
  RowLattice hom = RowLattice::from_rows(n, kernel_rows);
  if (hom.rank() != n) internal_error("congruence kernel lattice lost rank");
  particular = hom.reduce(particular);

  for (int i = 0; i < r; ++i) {
    i64 acc = 0;
    for (int j = 0; j < n; ++j)
      acc = checked_add(acc, checked_mul(a(i, j), particular[static_cast<std::size_t>(j)]));
    if (mod_floor(acc - rhs[static_cast<std::size_t>(i)], moduli[static_cast<std::size_t>(i)]) != 0)
      internal_error("congruence particular solution failed the original system");
  }
  return CongruenceSolution{std::move(particular), std::move(hom), big_l};
}

namespace {

std::vector<i64> count_ratios(const CongruenceSolution& sol, std::span<const i64> var_moduli) {
  const int n = sol.homogeneous.cols();
  if (static_cast<int>(var_moduli.size()) != n)
    throw std::invalid_argument("variable moduli width mismatch");
  std::vector<std::vector<i64>> diag;
  for (int j = 0; j < n; ++j) {
    std::vector<i64> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = var_moduli[static_cast<std::size_t>(j)];
    diag.push_back(std::move(e));
  }
  RowLattice joined = lattice_join(sol.homogeneous, diag);
  std::vector<i64> ratios;
  for (int j = 0; j < n; ++j) {
    i64 pj = joined.pivot_entry(j);
    i64 vj = var_moduli[static_cast<std::size_t>(j)];
    if (vj % pj != 0) internal_error("solution lattice does not refine the variable moduli");
    ratios.push_back(vj / pj);
  }
  return ratios;
}

}  // namespace

u128 congruence_solution_count(const CongruenceSolution& sol,
                               std::span<const i64> var_moduli) {
  u128 count = 1;
  for (i64 r : count_ratios(sol, var_moduli)) count = checked_mul_u128(count, static_cast<u128>(r));
  return count;
}

u128 congruence_solution_count_capped(const CongruenceSolution& sol,
                                      std::span<const i64> var_moduli, u128 cap) {
  u128 count = 1;
  for (i64 r : count_ratios(sol, var_moduli)) {
    u128 ratio = static_cast<u128>(r);
    if (ratio > 1 && count > cap / ratio) return cap + 1;
    count *= ratio;
  }
  return count;
}

std::vector<std::vector<i64>> congruence_solutions_mod(const CongruenceSolution& sol,
                                                       std::span<const i64> var_moduli,
                                                       std::size_t cap) {
  const int n = sol.homogeneous.cols();
  auto reduce_vec = [&](std::vector<i64> v) {
    for (int j = 0; j < n; ++j)
      v[static_cast<std::size_t>(j)] =
          mod_floor(v[static_cast<std::size_t>(j)], var_moduli[static_cast<std::size_t>(j)]);
    return v;
  };
  std::vector<std::vector<i64>> gens;
  for (const auto& r : sol.homogeneous.basis()) {
    auto g = reduce_vec(r);
    if (std::any_of(g.begin(), g.end(), [](i64 x) { return x != 0; })) gens.push_back(g);
  }
  std::set<std::vector<i64>> seen;
  std::vector<std::vector<i64>> queue;
  queue.push_back(reduce_vec(sol.particular));
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<i64> cur = queue[head];
    for (const auto& g : gens) {
      std::vector<i64> nxt(cur);
      for (int j = 0; j < n; ++j)
        nxt[static_cast<std::size_t>(j)] += g[static_cast<std::size_t>(j)];
      nxt = reduce_vec(std::move(nxt));
      if (seen.insert(nxt).second) {
        if (seen.size() > cap)
          throw std::invalid_argument("solution enumeration exceeds requested cap");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return std::vector<std::vector<i64>>(seen.begin(), seen.end());
}

namespace {

QuotientPresentation canonical_quotient(IntMatrix rel, int m, i64 reduce_modulus,
                                        std::span<const i64> lift_moduli) {
  SnfResult s = snf_run(std::move(rel),
                        SnfOptions{.track_u = false,
                                   .track_v = true,
                                   .track_vinv = true,
                                   .reduce_modulus = reduce_modulus});
  std::vector<int> kept;
  std::vector<i64> orders;
  for (int j = 0; j < m; ++j) {
    i64 dj = j < s.d.rows() ? s.d(j, j) : 0;
    if (dj < 1) throw std::invalid_argument("relations do not present a finite group");
    if (dj >= 2) {
      kept.push_back(j);
      orders.push_back(dj);
    }
  }
  const int q = static_cast<int>(kept.size());
  IntMatrix to_quotient(m, q);
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < q; ++l)
      to_quotient(i, l) = mod_floor(s.v(i, kept[static_cast<std::size_t>(l)]),
                                    orders[static_cast<std::size_t>(l)]);
  IntMatrix lift(q, m);
  for (int l = 0; l < q; ++l)
    for (int i = 0; i < m; ++i) {
      i64 x = s.vinv(kept[static_cast<std::size_t>(l)], i);
      if (!lift_moduli.empty()) x = mod_floor(x, lift_moduli[static_cast<std::size_t>(i)]);
      lift(l, i) = x;
    }
  QuotientPresentation out;
  out.presentation.generator_count = q;
  out.presentation.orders = orders;
  out.presentation.relation_matrix = IntMatrix::diagonal(orders);
  out.to_quotient = std::move(to_quotient);
  out.lift = std::move(lift);
  return out;
}

}  // namespace

QuotientPresentation quotient_presentation(std::span<const i64> ambient_orders,
                                           const IntMatrix& sub_generators) {
  const int m = static_cast<int>(ambient_orders.size());
  if (sub_generators.rows() > 0 && sub_generators.cols() != m)
    throw std::invalid_argument("sub-generator width must match ambient rank");
  i64 big_l = 1;
  for (i64 e : ambient_orders) {
    if (e < 1) throw std::invalid_argument("ambient orders must be >= 1");
    big_l = lcm_checked(big_l, e);
  }
  IntMatrix rel(sub_generators.rows() + m, m);
  for (int i = 0; i < sub_generators.rows(); ++i)
    for (int j = 0; j < m; ++j)
      rel(i, j) = mod_floor(sub_generators(i, j), ambient_orders[static_cast<std::size_t>(j)]);
  for (int j = 0; j < m; ++j)
    rel(sub_generators.rows() + j, j) = ambient_orders[static_cast<std::size_t>(j)];
  return canonical_quotient(std::move(rel), m, big_l, ambient_orders);
}

QuotientPresentation presentation_from_relations(
    int generator_count, const std::vector<std::vector<i64>>& relations) {
  IntMatrix rel = IntMatrix::from_rows(relations, generator_count);
  return canonical_quotient(std::move(rel), generator_count, 0, {});
}

}  // namespace cokasch
