#include "cokasch/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cokasch/presentation.hpp"

namespace cokasch {

namespace {

constexpr i64 kMaxSize = 4096;

std::string triple(int i, int j, int k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

}  // namespace

void validate_ring(const RingData& data) {
  const std::size_t n = data.orders.size();
  if (n == 0) throw ValidationError("shape", "a unital ring needs at least one generator");
  for (std::size_t i = 0; i < n; ++i)
    if (data.orders[i] < 2)
      throw ValidationError("shape", "generator " + std::to_string(i) + " has additive order below 2");
  if (data.structure.size() != n)
    throw ValidationError("shape", "structure table must have one row block per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (data.structure[i].size() != n)
      throw ValidationError("shape", "structure row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (data.structure[i][j].size() != n)
        throw ValidationError("shape", "structure entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                           ") has the wrong width");
  }
  if (data.one.size() != n)
    throw ValidationError("shape", "identity coordinate width differs from the generator count");

  i64 size = 1;
  for (i64 d : data.orders) {
    size = checked_mul(size, d);
    if (size > kMaxSize)
      throw ValidationError("size", "the presented ring exceeds " + std::to_string(kMaxSize) + " elements");
  }

  auto cst = [&](std::size_t i, std::size_t j, std::size_t k) {
    return mod_floor(data.structure[i][j][k], data.orders[k]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (mod_floor(data.orders[i] * cst(i, j, k), data.orders[k]) != 0)
          throw ValidationError("bilinearity",
                                "structure constant " + triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) +
                                    " is not annihilated by the order of generator " + std::to_string(i));
        if (mod_floor(data.orders[j] * cst(i, j, k), data.orders[k]) != 0)
          throw ValidationError("bilinearity",
                                "structure constant " + triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) +
                                    " is not annihilated by the order of generator " + std::to_string(j));
      }

  // x is a coordinate vector; the products below stay far inside i64 range
  // because orders and constants are < 2^12 and n <= 12.
  auto mul_basis_vec = [&](std::size_t i, const Vec& y) {
    Vec out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += y[j] * cst(i, j, k);
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = mod_floor(out[k], data.orders[k]);
    return out;
  };
  auto mul_vec = [&](const Vec& x, const Vec& y) {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      Vec row = mul_basis_vec(i, y);
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * row[k];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = mod_floor(out[k], data.orders[k]);
    return out;
  };
  auto basis = [&](std::size_t i) {
    Vec e(n, 0);
    e[i] = 1;
    return e;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = mul_basis_vec(i, basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = mul_vec(ij, basis(k));
        Vec rhs = mul_basis_vec(i, mul_basis_vec(j, basis(k)));
        if (lhs != rhs)
          throw ValidationError("associativity",
                                "basis triple " + triple(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)));
      }
    }

  Vec one(n);
  for (std::size_t k = 0; k < n; ++k) one[k] = mod_floor(data.one[k], data.orders[k]);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul_vec(one, basis(i)) != basis(i))
      throw ValidationError("unity", "one does not fix generator " + std::to_string(i) + " from the left");
    if (mul_vec(basis(i), one) != basis(i))
      throw ValidationError("unity", "one does not fix generator " + std::to_string(i) + " from the right");
  }
}

bool RingIdeal::contains_index(i64 index) const {
  return std::binary_search(element_indices.begin(), element_indices.end(), index);
}

FiniteRing::FiniteRing(RingData data) : data_(std::move(data)) {
  const std::size_t n = data_.orders.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        data_.structure[i][j][k] = mod_floor(data_.structure[i][j][k], data_.orders[k]);
  for (std::size_t k = 0; k < n; ++k) data_.one[k] = mod_floor(data_.one[k], data_.orders[k]);
  strides_.assign(n, 1);
  for (int i = static_cast<int>(n) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] * data_.orders[static_cast<std::size_t>(i) + 1];
  size_ = n == 0 ? 1 : strides_[0] * data_.orders[0];
}

RingPtr FiniteRing::create(RingData data) {
  validate_ring(data);
  return RingPtr(new FiniteRing(std::move(data)));
}

Vec FiniteRing::basis_element(int i) const {
  Vec e(data_.orders.size(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Vec FiniteRing::canon(Vec x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], data_.orders[i]);
  return x;
}

Vec FiniteRing::add(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i] + y[i], data_.orders[i]);
  return out;
}

Vec FiniteRing::negate(const Vec& x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(-x[i], data_.orders[i]);
  return out;
}

Vec FiniteRing::sub(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i] - y[i], data_.orders[i]);
  return out;
}

Vec FiniteRing::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = data_.orders.size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      i64 f = x[i] * y[j];
      const Vec& c = data_.structure[i][j];
      for (std::size_t k = 0; k < n; ++k) out[k] += f * c[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) out[k] = mod_floor(out[k], data_.orders[k]);
  return out;
}

bool FiniteRing::is_zero(const Vec& x) const {
  return std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; });
}

bool FiniteRing::is_one(const Vec& x) const { return x == data_.one; }

i64 FiniteRing::additive_order(const Vec& x) const {
  i64 ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    ord = std::lcm(ord, data_.orders[i] / std::gcd(data_.orders[i], x[i]));
  return ord;
}

i64 FiniteRing::index_of(const Vec& x) const {
  i64 idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx += x[i] * strides_[i];
  return idx;
}

Vec FiniteRing::element_at(i64 index) const {
  Vec x(data_.orders.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = index / strides_[i];
    index %= strides_[i];
  }
  return x;
}

template <class F>
void FiniteRing::scan_products(const Vec& x, F&& f) const {
  const std::size_t n = data_.orders.size();
  std::vector<Vec> xb(n);
  for (std::size_t j = 0; j < n; ++j) xb[j] = mul(x, basis_element(static_cast<int>(j)));
  Vec y(n, 0), prod(n, 0);
  i64 yi = 0;
  for (;;) {
    if (!f(yi, prod)) return;
    // Mixed-radix increment; a wrap from d_j - 1 to 0 shifts the product by
    // x*b_j as well, because d_j * (x*b_j) = 0.
    std::size_t j = n;
    while (j > 0 && y[j - 1] == data_.orders[j - 1] - 1) {
      --j;
      y[j] = 0;
      for (std::size_t k = 0; k < n; ++k) prod[k] = mod_floor(prod[k] + xb[j][k], data_.orders[k]);
    }
    if (j == 0) return;
    ++y[j - 1];
    for (std::size_t k = 0; k < n; ++k)
      prod[k] = mod_floor(prod[k] + xb[j - 1][k], data_.orders[k]);
    ++yi;
  }
}

const std::vector<char>& FiniteRing::unit_flags() const {
  if (!units_) {
    std::vector<char> flags(static_cast<std::size_t>(size_), 0);
    for (i64 xi = 0; xi < size_; ++xi) {
      if (flags[static_cast<std::size_t>(xi)]) continue;
      Vec x = element_at(xi);
      // x y = 1 already forces y x = 1 in a finite ring, so one pass marks
      // both factors.
      scan_products(x, [&](i64 yi, const Vec& prod) {
        if (is_one(prod)) {
          flags[static_cast<std::size_t>(xi)] = 1;
          flags[static_cast<std::size_t>(yi)] = 1;
          return false;
        }
        return true;
      });
    }
    units_ = std::move(flags);
  }
  return *units_;
}

bool FiniteRing::is_unit(const Vec& x) const {
  return unit_flags()[static_cast<std::size_t>(index_of(canon(x)))] != 0;
}

bool FiniteRing::is_idempotent(const Vec& x) const {
  Vec c = canon(x);
  return mul(c, c) == c;
}

const RingIdeal& FiniteRing::jacobson_radical() const {
  if (!radical_) {
    const std::vector<char>& units = unit_flags();
    std::vector<i64> members;
    for (i64 xi = 0; xi < size_; ++xi) {
      Vec x = element_at(xi);
      bool quasi = true;
      scan_products(x, [&](i64, const Vec& prod) {
        if (!units[static_cast<std::size_t>(index_of(sub(data_.one, prod)))]) {
          quasi = false;
          return false;
        }
        return true;
      });
      if (quasi) members.push_back(xi);
    }

    RingIdeal ideal;
    ideal.element_indices = std::move(members);
    std::vector<Vec> rows;
    for (i64 idx : ideal.element_indices) rows.push_back(element_at(idx));
    for (std::size_t j = 0; j < data_.orders.size(); ++j) {
      Vec r(data_.orders.size(), 0);
      r[j] = data_.orders[j];
      rows.push_back(std::move(r));
    }
    RowLattice span = RowLattice::from_rows(static_cast<int>(data_.orders.size()), rows);
    u128 span_points = 1;
    for (int j = 0; j < span.cols(); ++j)
      span_points *= static_cast<u128>(data_.orders[static_cast<std::size_t>(j)] / span.pivot_entry(j));
    if (span_points != static_cast<u128>(ideal.element_indices.size()))
      throw std::logic_error("internal invariant breach: radical is not additively closed");
    for (i64 idx : ideal.element_indices) {
      Vec x = element_at(idx);
      for (int i = 0; i < rank(); ++i) {
        Vec b = basis_element(i);
        if (!ideal.contains_index(index_of(mul(x, b))) || !ideal.contains_index(index_of(mul(b, x))))
          throw std::logic_error("internal invariant breach: radical is not a two-sided ideal");
      }
    }
    for (const auto& row : span.basis()) {
      Vec g = canon(Vec(row.begin(), row.end()));
      if (!is_zero(g)) ideal.generators.push_back(std::move(g));
    }
    radical_ = std::move(ideal);
  }
  return *radical_;
}

const std::vector<Vec>& FiniteRing::idempotents() const {
  if (!idempotents_) {
    std::vector<Vec> found;
    for (i64 xi = 0; xi < size_; ++xi) {
      Vec x = element_at(xi);
      if (mul(x, x) == x) found.push_back(std::move(x));
    }
    idempotents_ = std::move(found);
  }
  return *idempotents_;
}

bool FiniteRing::is_primitive_idempotent(const Vec& e) const {
  Vec c = canon(e);
  if (is_zero(c) || mul(c, c) != c) return false;
  for (i64 xi = 0; xi < size_; ++xi) {
    Vec corner = mul(mul(c, element_at(xi)), c);
    if (is_zero(corner) || corner == c) continue;
    if (mul(corner, corner) == corner) return false;
  }
  return true;
}

std::vector<Vec> FiniteRing::primitive_idempotents() const {
  std::vector<Vec> out;
  for (const Vec& e : idempotents())
    if (is_primitive_idempotent(e)) out.push_back(e);
  return out;
}

const std::vector<Vec>& FiniteRing::primitive_decomposition() const {
  if (!prim_decomp_) {
    std::vector<Vec> prims = primitive_idempotents();
    std::vector<Vec> chosen;
    auto orthogonal = [&](const Vec& e) {
      for (const Vec& f : chosen)
        if (!is_zero(mul(e, f)) || !is_zero(mul(f, e))) return false;
      return true;
    };
    // Depth-first over ascending candidates yields the lexicographically
    // first complete orthogonal system.
    std::function<bool(std::size_t, Vec)> dfs = [&](std::size_t start, Vec sum) {
      if (is_one(sum)) return true;
      for (std::size_t t = start; t < prims.size(); ++t) {
        if (!orthogonal(prims[t])) continue;
        chosen.push_back(prims[t]);
        if (dfs(t + 1, add(sum, prims[t]))) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!dfs(0, zero()))
      throw std::logic_error("internal invariant breach: no complete system of primitive idempotents");
    prim_decomp_ = std::move(chosen);
  }
  return *prim_decomp_;
}

RingData ring_direct_product(const RingData& a, const RingData& b) {
  const std::size_t na = a.orders.size(), nb = b.orders.size(), n = na + nb;
  RingData out;
  out.orders = a.orders;
  out.orders.insert(out.orders.end(), b.orders.begin(), b.orders.end());
  out.structure.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) out.structure[i][j][k] = a.structure[i][j][k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) out.structure[na + i][na + j][na + k] = b.structure[i][j][k];
  out.one = a.one;
  out.one.insert(out.one.end(), b.one.begin(), b.one.end());
  return out;
}

}  // namespace cokasch
