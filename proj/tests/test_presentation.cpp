#include "doctest.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cokasch/intmat.hpp"
#include "cokasch/presentation.hpp"

using namespace cokasch;

namespace {

using VV = std::vector<std::vector<i64>>;

VV to_vv(const IntMatrix& m) {
  VV out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return out;
}

// Dimensions taken from the arguments so empty factors keep their shape.
VV triple_product(const IntMatrix& u, const IntMatrix& m, const IntMatrix& v) {
  VV um(static_cast<std::size_t>(u.rows()), std::vector<i64>(static_cast<std::size_t>(m.cols()), 0));
  for (int i = 0; i < u.rows(); ++i)
    for (int t = 0; t < u.cols(); ++t)
      for (int j = 0; j < m.cols(); ++j)
        um[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += u(i, t) * m(t, j);
  VV out(static_cast<std::size_t>(u.rows()), std::vector<i64>(static_cast<std::size_t>(v.cols()), 0));
  for (int i = 0; i < u.rows(); ++i)
    for (int t = 0; t < v.rows(); ++t)
      for (int j = 0; j < v.cols(); ++j)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            um[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * v(t, j);
  return out;
}

i64 det_rec(const VV& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 acc = 0, sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] != 0) {
      VV minor(n - 1, std::vector<i64>(n - 1));
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == c) continue;
          minor[i - 1][jj++] = m[i][j];
        }
      }
      acc += sign * m[0][c] * det_rec(minor);
    }
    sign = -sign;
  }
  return acc;
}

i64 pos_mod(i64 a, i64 p) {
  i64 r = a % p;
  return r < 0 ? r + p : r;
}

// Every x in the box [0,L)^n tested against the raw system.
std::vector<std::vector<i64>> brute_solutions(const IntMatrix& a, const std::vector<i64>& moduli,
                                              const std::vector<i64>& rhs, i64 box) {
  int n = a.cols();
  std::vector<std::vector<i64>> found;
  std::vector<i64> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < a.rows() && ok; ++i) {
      i64 acc = 0;
      for (int j = 0; j < n; ++j) acc += a(i, j) * x[static_cast<std::size_t>(j)];
      ok = pos_mod(acc - rhs[static_cast<std::size_t>(i)], moduli[static_cast<std::size_t>(i)]) == 0;
    }
    if (ok) found.push_back(x);
    int j = n - 1;
    while (j >= 0 && x[static_cast<std::size_t>(j)] == box - 1) x[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++x[static_cast<std::size_t>(j)];
  }
  return found;
}

std::size_t subgroup_size(const std::vector<i64>& orders, const VV& gens) {
  std::size_t n = orders.size();
  auto canon = [&](std::vector<i64> v) {
    for (std::size_t j = 0; j < n; ++j) v[j] = pos_mod(v[j], orders[j]);
    return v;
  };
  std::set<std::vector<i64>> seen;
  std::vector<std::vector<i64>> queue{std::vector<i64>(n, 0)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      std::vector<i64> nxt = queue[head];
      for (std::size_t j = 0; j < n; ++j) nxt[j] += g[j];
      nxt = canon(std::move(nxt));
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  return seen.size();
}

struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(u64 seed) : eng(seed) {}
  i64 below(i64 n) { return static_cast<i64>(eng() % static_cast<u64>(n)); }
  i64 in(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }
};

void check_smith(const IntMatrix& m) {
  SmithDecomposition s = smith_decompose(m);
  REQUIRE(s.u.rows() == m.rows());
  REQUIRE(s.v.rows() == m.cols());
  CHECK(std::abs(det_rec(to_vv(s.u))) == 1);
  CHECK(std::abs(det_rec(to_vv(s.v))) == 1);
  CHECK(triple_product(s.u, m, s.v) == to_vv(s.d));
  int lim = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  i64 prev = -1;
  for (int t = 0; t < lim; ++t) {
    i64 dt = s.d(t, t);
    CHECK(dt >= 0);
    if (prev == 0) CHECK(dt == 0);
    if (prev > 0 && dt != 0) CHECK(dt % prev == 0);
    prev = dt;
  }
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(floor_div(-5, 3) == -2);
  CHECK(mod_floor(-5, 3) == 1);
  CHECK(mod_floor(7, 3) == 1);
  CHECK(balanced_rem(3, 4) == -1);
  CHECK(balanced_rem(2, 4) == 2);
  CHECK(balanced_rem(-3, 4) == 1);
  CHECK(lcm_checked(4, 6) == 12);
  CHECK(lcm_checked(1, 1) == 1);
  CHECK(checked_add(3, 4) == 7);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<i64>::max(), 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<i64>::max() / 2 + 1, 2), std::overflow_error);
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(static_cast<u128>(1) << 100) == "1267650600228229401496703205376");
  CHECK_THROWS_AS(checked_mul_u128(static_cast<u128>(1) << 100, static_cast<u128>(1) << 100),
                  std::overflow_error);
}

TEST_CASE("smith normal form of a fixed matrix") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}}, 2);
  SmithDecomposition s = smith_decompose(m);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 4);
  CHECK(s.d(0, 1) == 0);
  CHECK(s.d(1, 0) == 0);
  check_smith(m);
}

TEST_CASE("smith normal form edge shapes") {
  check_smith(IntMatrix(0, 0));
  check_smith(IntMatrix(2, 3));
  check_smith(IntMatrix::identity(3));
  check_smith(IntMatrix::from_rows({{0, 0, 5}}, 3));
  check_smith(IntMatrix::from_rows({{4}, {6}}, 1));
}

TEST_CASE("smith normal form on random matrices") {
  TestRng rng(0x5eed0001);
  for (int iter = 0; iter < 300; ++iter) {
    int r = static_cast<int>(rng.below(5));
    int c = static_cast<int>(rng.below(5));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.in(-9, 9);
    check_smith(m);
  }
}

TEST_CASE("row lattices are canonical") {
  RowLattice a = RowLattice::from_rows(2, {{2, 0}, {0, 4}});
  RowLattice b = RowLattice::from_rows(2, {{2, 4}, {2, 0}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.rank() == 2);
  CHECK(a.pivot_entry(0) == 2);
  CHECK(a.pivot_entry(1) == 4);
  CHECK(a.contains(std::vector<i64>{4, 8}));
  CHECK_FALSE(a.contains(std::vector<i64>{1, 0}));
  CHECK_FALSE(a.contains(std::vector<i64>{2, 2}));

  RowLattice full = RowLattice::from_rows(2, {{1, 0}, {0, 1}});
  CHECK(full.contains_lattice(a));
  CHECK_FALSE(a.contains_lattice(full));
  CHECK(lattice_index(full, a) == 8);
  CHECK(lattice_index(a, a) == 1);

  RowLattice joined = lattice_join(a, {{1, 2}});
  CHECK(joined.contains(std::vector<i64>{1, 2}));
  CHECK(joined.contains_lattice(a));
  CHECK(lattice_index(joined, a) == 2);
}

TEST_CASE("lattice reduction picks one representative per coset") {
  RowLattice a = RowLattice::from_rows(3, {{2, 1, 0}, {0, 3, 1}, {0, 0, 4}});
  TestRng rng(0x5eed0002);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<i64> v{rng.in(-20, 20), rng.in(-20, 20), rng.in(-20, 20)};
    std::vector<i64> r = a.reduce(v);
    std::vector<i64> diff(3);
    for (int j = 0; j < 3; ++j) diff[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - r[static_cast<std::size_t>(j)];
    CHECK(a.contains(diff));
    const std::vector<i64>& row = a.basis()[static_cast<std::size_t>(rng.below(3))];
    std::vector<i64> shifted = v;
    for (int j = 0; j < 3; ++j) shifted[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    CHECK(a.reduce(shifted) == r);
  }
}

TEST_CASE("congruence solver on fixed systems") {
  SUBCASE("2x = 0 mod 4") {
    IntMatrix a = IntMatrix::from_rows({{2}}, 1);
    auto sol = solve_congruence_system(a, std::vector<i64>{4}, std::vector<i64>{0});
    REQUIRE(sol.has_value());
    CHECK(sol->homogeneous.pivot_entry(0) == 2);
    std::vector<i64> vm{4};
    CHECK(congruence_solution_count(*sol, vm) == 2);
    auto all = congruence_solutions_mod(*sol, vm, 16);
    CHECK(all == std::vector<std::vector<i64>>{{0}, {2}});
  }
  SUBCASE("2x = 1 mod 4 is inconsistent") {
    IntMatrix a = IntMatrix::from_rows({{2}}, 1);
    CHECK_FALSE(solve_congruence_system(a, std::vector<i64>{4}, std::vector<i64>{1}).has_value());
  }
  SUBCASE("two equations mod 2") {
    IntMatrix a = IntMatrix::from_rows({{1, 1}, {1, 0}}, 2);
    auto sol = solve_congruence_system(a, std::vector<i64>{2, 2}, std::vector<i64>{1, 1});
    REQUIRE(sol.has_value());
    std::vector<i64> vm{2, 2};
    CHECK(congruence_solution_count(*sol, vm) == 1);
    auto all = congruence_solutions_mod(*sol, vm, 16);
    CHECK(all == std::vector<std::vector<i64>>{{1, 0}});
  }
  SUBCASE("no constraints") {
    IntMatrix a(0, 2);
    auto sol = solve_congruence_system(a, std::vector<i64>{}, std::vector<i64>{});
    REQUIRE(sol.has_value());
    std::vector<i64> vm{2, 3};
    CHECK(congruence_solution_count(*sol, vm) == 6);
  }
  SUBCASE("modulus one rows constrain nothing") {
    IntMatrix a = IntMatrix::from_rows({{5, 7}}, 2);
    auto sol = solve_congruence_system(a, std::vector<i64>{1}, std::vector<i64>{3});
    REQUIRE(sol.has_value());
    std::vector<i64> vm{2, 2};
    CHECK(congruence_solution_count(*sol, vm) == 4);
  }
  SUBCASE("no variables") {
    IntMatrix a(2, 0);
    auto sol = solve_congruence_system(a, std::vector<i64>{3, 3}, std::vector<i64>{3, 0});
    REQUIRE(sol.has_value());
    CHECK(sol->particular.empty());
    auto none = solve_congruence_system(a, std::vector<i64>{3, 3}, std::vector<i64>{1, 0});
    CHECK_FALSE(none.has_value());
  }
}

TEST_CASE("congruence solver matches exhaustive search") {
  TestRng rng(0x5eed0003);
  const std::vector<i64> mod_pool{1, 2, 3, 4, 6};
  for (int iter = 0; iter < 250; ++iter) {
    int n = static_cast<int>(rng.in(1, 3));
    int r = static_cast<int>(rng.below(4));
    IntMatrix a(r, n);
    std::vector<i64> moduli, rhs;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = rng.in(-3, 3);
      moduli.push_back(mod_pool[static_cast<std::size_t>(rng.below(static_cast<i64>(mod_pool.size())))]);
      rhs.push_back(rng.in(-4, 4));
    }
    i64 big_l = 1;
    for (i64 m : moduli) big_l = std::lcm(big_l, m);
    std::vector<std::vector<i64>> expected = brute_solutions(a, moduli, rhs, big_l);
    auto sol = solve_congruence_system(a, moduli, rhs);
    if (expected.empty()) {
      CHECK_FALSE(sol.has_value());
      continue;
    }
    REQUIRE(sol.has_value());
    CHECK(sol->uniform_modulus == big_l);
    std::vector<i64> vm(static_cast<std::size_t>(n), big_l);
    CHECK(congruence_solution_count(*sol, vm) == static_cast<u128>(expected.size()));
    auto got = congruence_solutions_mod(*sol, vm, 4096);
    CHECK(got == expected);
  }
}

TEST_CASE("quotient presentations of fixed groups") {
  SUBCASE("Z/4 by the subgroup generated by 2") {
    QuotientPresentation q = quotient_presentation(std::vector<i64>{4}, IntMatrix::from_rows({{2}}, 1));
    REQUIRE(q.presentation.orders == std::vector<i64>{2});
    CHECK(q.to_quotient(0, 0) == 1);
    CHECK(q.lift(0, 0) % 2 == 1);
  }
  SUBCASE("diagonal of Z/2 x Z/2") {
    QuotientPresentation q =
        quotient_presentation(std::vector<i64>{2, 2}, IntMatrix::from_rows({{1, 1}}, 2));
    REQUIRE(q.presentation.orders == std::vector<i64>{2});
    CHECK(q.to_quotient(0, 0) == 1);
    CHECK(q.to_quotient(1, 0) == 1);
  }
  SUBCASE("trivial subgroup keeps the group") {
    QuotientPresentation q = quotient_presentation(std::vector<i64>{6}, IntMatrix(0, 1));
    CHECK(q.presentation.orders == std::vector<i64>{6});
  }
  SUBCASE("whole group gives the zero quotient") {
    QuotientPresentation q = quotient_presentation(std::vector<i64>{4}, IntMatrix::from_rows({{1}}, 1));
    CHECK(q.presentation.orders.empty());
    CHECK(q.presentation.generator_count == 0);
  }
}

TEST_CASE("presentation from raw relations") {
  QuotientPresentation q = presentation_from_relations(2, {{2, 0}, {0, 3}});
  CHECK(q.presentation.orders == std::vector<i64>{6});
  CHECK_THROWS_AS(presentation_from_relations(2, {{2, 0}}), std::invalid_argument);
}

TEST_CASE("quotient presentations on random groups") {
  TestRng rng(0x5eed0004);
  const std::vector<i64> order_pool{2, 3, 4};
  for (int iter = 0; iter < 200; ++iter) {
    int m = static_cast<int>(rng.in(1, 3));
    std::vector<i64> ambient;
    for (int j = 0; j < m; ++j)
      ambient.push_back(order_pool[static_cast<std::size_t>(rng.below(3))]);
    int ng = static_cast<int>(rng.below(3));
    IntMatrix sub(ng, m);
    VV sub_rows;
    for (int i = 0; i < ng; ++i) {
      std::vector<i64> row;
      for (int j = 0; j < m; ++j) {
        sub(i, j) = rng.below(ambient[static_cast<std::size_t>(j)]);
        row.push_back(sub(i, j));
      }
      sub_rows.push_back(row);
    }
    QuotientPresentation q = quotient_presentation(ambient, sub);
    const std::vector<i64>& orders = q.presentation.orders;
    for (std::size_t t = 0; t + 1 < orders.size(); ++t) CHECK(orders[t + 1] % orders[t] == 0);

    std::size_t ambient_size = 1, quotient_size = 1;
    for (i64 e : ambient) ambient_size *= static_cast<std::size_t>(e);
    for (i64 e : orders) quotient_size *= static_cast<std::size_t>(e);
    CHECK(ambient_size == quotient_size * subgroup_size(ambient, sub_rows));

    auto apply_to_quotient = [&](const std::vector<i64>& x) {
      std::vector<i64> y(orders.size(), 0);
      for (int i = 0; i < m; ++i)
        for (std::size_t l = 0; l < orders.size(); ++l)
          y[l] = pos_mod(y[l] + x[static_cast<std::size_t>(i)] * q.to_quotient(i, static_cast<int>(l)), orders[l]);
      return y;
    };
    for (const auto& row : sub_rows)
      CHECK(apply_to_quotient(row) == std::vector<i64>(orders.size(), 0));
    for (int i = 0; i < m; ++i) {
      std::vector<i64> rel(static_cast<std::size_t>(m), 0);
      rel[static_cast<std::size_t>(i)] = ambient[static_cast<std::size_t>(i)];
      CHECK(apply_to_quotient(rel) == std::vector<i64>(orders.size(), 0));
    }
    for (std::size_t l = 0; l < orders.size(); ++l) {
      std::vector<i64> lifted(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) lifted[static_cast<std::size_t>(i)] = q.lift(static_cast<int>(l), i);
      std::vector<i64> image = apply_to_quotient(lifted);
      for (std::size_t l2 = 0; l2 < orders.size(); ++l2)
        CHECK(image[l2] == (l2 == l ? 1 : 0));
    }
  }
}
