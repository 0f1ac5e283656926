#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "cokasch/module.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cokasch;

namespace {

struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(u64 seed) : eng(seed) {}
  i64 below(i64 n) { return static_cast<i64>(eng() % static_cast<u64>(n)); }
};

std::vector<Vec> all_elements(const ModulePtr& m) {
  std::vector<Vec> out;
  for (i64 i = 0; i < m->size(); ++i) out.push_back(m->element_at(i));
  return out;
}

// Smallest subset containing the seeds and closed under addition and the
// ring action, grown by plain fixed-point iteration.
std::set<Vec> brute_closure(const ModulePtr& m, const std::vector<Vec>& seeds) {
  std::set<Vec> seen{m->zero()};
  for (const Vec& s : seeds) seen.insert(m->canon(s));
  for (;;) {
    std::set<Vec> next = seen;
    for (const Vec& a : seen) {
      for (const Vec& b : seen) next.insert(m->add(a, b));
      for (int k = 0; k < m->ring()->rank(); ++k) next.insert(m->act_basis(a, k));
    }
    if (next.size() == seen.size()) return seen;
    seen.swap(next);
  }
}

std::set<Vec> to_set(const std::vector<Vec>& v) { return std::set<Vec>(v.begin(), v.end()); }

u64 brute_hom_count(const ModulePtr& src, const ModulePtr& dst) {
  const int m = src->rank(), n = dst->rank();
  std::vector<Vec> images(static_cast<std::size_t>(m), dst->zero());
  u64 count = 0;
  std::function<void(int)> scan = [&](int i) {
    if (i == m) {
      for (int a = 0; a < m; ++a) {
        Vec scaled(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          scaled[static_cast<std::size_t>(j)] =
              src->gen_orders()[static_cast<std::size_t>(a)] * images[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
        if (!dst->is_zero(dst->canon(scaled))) return;
      }
      for (int a = 0; a < m; ++a)
        for (int k = 0; k < src->ring()->rank(); ++k) {
          Vec lhs = dst->zero();
          for (int j = 0; j < m; ++j) {
            i64 c = src->action(k)(a, j);
            for (int l = 0; l < n; ++l)
              lhs[static_cast<std::size_t>(l)] += c * images[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
          }
          if (dst->canon(lhs) != dst->act_basis(images[static_cast<std::size_t>(a)], k)) return;
        }
      ++count;
      return;
    }
    for (i64 y = 0; y < dst->size(); ++y) {
      images[static_cast<std::size_t>(i)] = dst->element_at(y);
      scan(i + 1);
    }
  };
  scan(0);
  return count;
}

std::set<Vec> brute_radical(const ModulePtr& m) {
  std::vector<Vec> products;
  for (const Vec& x : all_elements(m))
    for (i64 j : m->ring()->jacobson_radical().element_indices)
      products.push_back(m->act(x, m->ring()->element_at(j)));
  return brute_closure(m, products);
}

std::set<Vec> brute_socle(const ModulePtr& m) {
  std::set<Vec> out;
  for (const Vec& x : all_elements(m)) {
    bool killed = true;
    for (i64 j : m->ring()->jacobson_radical().element_indices)
      if (!m->is_zero(m->act(x, m->ring()->element_at(j)))) {
        killed = false;
        break;
      }
    if (killed) out.insert(x);
  }
  return out;
}

bool map_is_equivariant(const ModuleMap& f) {
  for (int i = 0; i < f.src->rank(); ++i)
    for (int k = 0; k < f.src->ring()->rank(); ++k) {
      Vec lhs = f.apply(f.src->act_basis(f.src->generator(i), k));
      Vec rhs = f.dst->act_basis(f.apply(f.src->generator(i)), k);
      if (lhs != rhs) return false;
    }
  return true;
}

ModulePtr cyclic_with_actions(const RingPtr& ring, i64 order, const std::vector<i64>& diag) {
  ModuleData data;
  data.gen_orders = {order};
  for (i64 d : diag) {
    IntMatrix a(1, 1);
    a(0, 0) = d;
    data.action.push_back(a);
  }
  return FiniteModule::create(ring, std::move(data));
}

}  // namespace

TEST_CASE("module validation reports the first broken axiom") {
  RingPtr f2 = FiniteRing::create(fixtures::f2());
  RingPtr z4 = FiniteRing::create(fixtures::z4());
  RingPtr f2x = FiniteRing::create(fixtures::f2x());

  auto axiom_of = [](const FiniteRing& ring, const ModuleData& data) {
    try {
      validate_module(ring, data);
    } catch (const ValidationError& e) {
      return std::string(e.axiom()) + " | " + e.what();
    }
    return std::string("valid");
  };

  ModuleData bad_order;
  bad_order.gen_orders = {1};
  bad_order.action = {IntMatrix::identity(1)};
  CHECK(axiom_of(*f2, bad_order).substr(0, 5) == "shape");

  ModuleData missing_action;
  missing_action.gen_orders = {2};
  missing_action.action = {};
  CHECK(axiom_of(*f2, missing_action).substr(0, 5) == "shape");

  ModuleData ragged;
  ragged.gen_orders = {2, 2};
  ragged.action = {IntMatrix(1, 2)};
  CHECK(axiom_of(*f2, ragged).substr(0, 5) == "shape");

  ModuleData huge;
  huge.gen_orders.assign(13, 2);
  huge.action.assign(1, IntMatrix(13, 13));
  CHECK(axiom_of(*f2, huge).substr(0, 4) == "size");

  // 2 * A(0, 1) = 2 is nonzero mod 4, caught at entry (0, 0, 1).
  ModuleData bad_row;
  bad_row.gen_orders = {2, 4};
  bad_row.action = {IntMatrix::identity(2)};
  bad_row.action[0](0, 1) = 1;
  std::string msg = axiom_of(*f2, bad_row);
  CHECK(msg.substr(0, 11) == "bilinearity");
  CHECK(msg.find("(0, 0, 1)") != std::string::npos);
  CHECK(msg.find("module generator 0") != std::string::npos);

  // The ring generator of F2 has additive order 2, but 2 * 1 != 0 mod 4.
  ModuleData bad_scalar;
  bad_scalar.gen_orders = {4};
  bad_scalar.action = {IntMatrix::identity(1)};
  msg = axiom_of(*f2, bad_scalar);
  CHECK(msg.substr(0, 11) == "bilinearity");
  CHECK(msg.find("(0, 0, 0)") != std::string::npos);
  CHECK(msg.find("ring generator 0") != std::string::npos);

  ModuleData no_unit;
  no_unit.gen_orders = {2};
  no_unit.action = {IntMatrix(1, 1)};
  msg = axiom_of(*z4, no_unit);
  CHECK(msg.substr(0, 9) == "unitality");
  CHECK(msg.find("(0, 0)") != std::string::npos);

  // x acts invertibly even though x * x = 0 in F2[x]/(x^2).
  ModuleData bad_square;
  bad_square.gen_orders = {2};
  bad_square.action = {IntMatrix::identity(1), IntMatrix::identity(1)};
  msg = axiom_of(*f2x, bad_square);
  CHECK(msg.substr(0, 13) == "compatibility");
  CHECK(msg.find("ring pair (1, 1)") != std::string::npos);

  CHECK(axiom_of(*f2, bad_order) == axiom_of(*f2, bad_order));
}

TEST_CASE("regular modules act by the structure constants") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr reg = FiniteModule::regular(t2);
  CHECK(reg->size() == 8);
  CHECK(reg->gen_orders() == std::vector<i64>{2, 2, 2});

  // Generators: 0 = e11, 1 = e12, 2 = e22.
  Vec e11 = reg->generator(0), e12 = reg->generator(1), e22 = reg->generator(2);
  CHECK(reg->act(e11, t2->basis_element(1)) == e12);  // e11 * e12 = e12
  CHECK(reg->act(e22, t2->basis_element(1)) == reg->zero());
  CHECK(reg->act(e12, t2->basis_element(2)) == e12);  // e12 * e22 = e12
  CHECK(reg->act(e12, t2->basis_element(0)) == reg->zero());
  CHECK(reg->act(e11, t2->one()) == e11);

  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr rz4 = FiniteModule::regular(z4);
  CHECK(rz4->act(Vec{3}, Vec{3}) == Vec{1});
  CHECK(rz4->additive_order(Vec{2}) == 2);
  CHECK(rz4->additive_order(Vec{3}) == 4);
  CHECK(rz4->additive_order(rz4->zero()) == 1);

  for (i64 i = 0; i < reg->size(); ++i) CHECK(reg->index_of(reg->element_at(i)) == i);

  // Ring-module arithmetic coherence on every pair.
  for (const Vec& x : all_elements(rz4))
    for (const Vec& r : all_elements(rz4)) {
      CHECK(rz4->act(x, r) == z4->mul(x, r));
      for (const Vec& s : all_elements(rz4)) {
        CHECK(rz4->act(rz4->add(x, r), s) == rz4->add(rz4->act(x, s), rz4->act(r, s)));
        CHECK(rz4->act(rz4->act(x, r), s) == rz4->act(x, z4->mul(r, s)));
      }
    }
}

TEST_CASE("direct sums concatenate coordinates and respect the ring object") {
  RingPtr ff = FiniteRing::create(fixtures::f2f2());
  ModulePtr first = cyclic_with_actions(ff, 2, {1, 0});
  ModulePtr second = cyclic_with_actions(ff, 2, {0, 1});
  ModulePtr sum = FiniteModule::direct_sum(first, second);
  CHECK(sum->size() == 4);
  CHECK(sum->gen_orders() == std::vector<i64>{2, 2});
  CHECK(sum->act(Vec{1, 1}, ff->basis_element(0)) == Vec{1, 0});
  CHECK(sum->act(Vec{1, 1}, ff->basis_element(1)) == Vec{0, 1});

  RingPtr other = FiniteRing::create(fixtures::f2f2());
  ModulePtr foreign = cyclic_with_actions(other, 2, {1, 0});
  CHECK_THROWS_AS((void)FiniteModule::direct_sum(first, foreign), std::invalid_argument);
}

TEST_CASE("hom spaces match the exhaustive map count") {
  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr reg = FiniteModule::regular(z4);
  ModulePtr half = cyclic_with_actions(z4, 2, {1});

  CHECK(hom_count(reg, reg) == static_cast<u128>(4));
  CHECK(hom_count(reg, half) == static_cast<u128>(2));
  CHECK(hom_count(half, reg) == static_cast<u128>(2));
  CHECK(hom_count(half, half) == static_cast<u128>(2));

  std::vector<IntMatrix> maps = hom_space(half, reg).matrices(16);
  REQUIRE(maps.size() == 2);
  CHECK(maps[0](0, 0) == 0);
  CHECK(maps[1](0, 0) == 2);

  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr rt2 = FiniteModule::regular(t2);
  CHECK(hom_count(rt2, rt2) == static_cast<u128>(8));

  for (const auto& [name, data] : fixtures::all_rings()) {
    CAPTURE(name);
    RingPtr ring = FiniteRing::create(data);
    ModulePtr r = FiniteModule::regular(ring);
    CHECK(hom_count(r, r) == static_cast<u128>(brute_hom_count(r, r)));
  }

  // Every enumerated matrix really is a module map.
  HomSpace hs = hom_space(rt2, rt2);
  for (const IntMatrix& h : hs.matrices(64))
    CHECK(map_is_equivariant(ModuleMap{rt2, rt2, h}));
}

TEST_CASE("radical and socle agree with element scans") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr rt2 = FiniteModule::regular(t2);

  Submodule rad = radical_submodule(rt2);
  CHECK(rad.size() == static_cast<u128>(2));
  CHECK(rad.contains(Vec{0, 1, 0}));

  Submodule soc = socle_submodule(rt2);
  CHECK(soc.size() == static_cast<u128>(4));
  CHECK(to_set(submodule_elements(soc, 16)) ==
        std::set<Vec>{Vec{0, 0, 0}, Vec{0, 0, 1}, Vec{0, 1, 0}, Vec{0, 1, 1}});

  for (const auto& [name, data] : fixtures::all_rings()) {
    CAPTURE(name);
    RingPtr ring = FiniteRing::create(data);
    ModulePtr reg = FiniteModule::regular(ring);
    CHECK(to_set(submodule_elements(radical_submodule(reg), 4096)) == brute_radical(reg));
    CHECK(to_set(submodule_elements(socle_submodule(reg), 4096)) == brute_socle(reg));
  }

  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr rz4 = FiniteModule::regular(z4);
  CHECK(to_set(submodule_elements(socle_submodule(rz4), 8)) == std::set<Vec>{Vec{0}, Vec{2}});
}

TEST_CASE("submodule generation closes under the action") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr reg = FiniteModule::regular(t2);

  Submodule e11r = submodule_generated(reg, {Vec{1, 0, 0}});
  CHECK(e11r.size() == static_cast<u128>(4));
  CHECK(e11r.contains(Vec{0, 1, 0}));

  Submodule e22r = submodule_generated(reg, {Vec{0, 0, 1}});
  CHECK(e22r.size() == static_cast<u128>(2));
  CHECK_FALSE(submodule_contains(e11r, e22r));

  Submodule whole = submodule_sum(e11r, e22r);
  CHECK(whole.is_full());
  CHECK(submodule_equal(whole, full_submodule(reg)));
  CHECK(zero_submodule(reg).is_zero());

  TestRng rng(0x5eed0005);
  for (const auto& [name, data] : fixtures::all_rings()) {
    CAPTURE(name);
    RingPtr ring = FiniteRing::create(data);
    ModulePtr r = FiniteModule::regular(ring);
    for (int iter = 0; iter < 25; ++iter) {
      std::vector<Vec> seeds;
      for (int t = rng.below(3); t >= 0; --t) seeds.push_back(r->element_at(rng.below(r->size())));
      Submodule s = submodule_generated(r, seeds);
      CHECK(to_set(submodule_elements(s, 4096)) == brute_closure(r, seeds));
    }
  }
}

TEST_CASE("quotient modules carry exact coordinate maps") {
  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr reg = FiniteModule::regular(z4);
  Submodule even = submodule_generated(reg, {Vec{2}});
  QuotientModule q = quotient_module(even);
  CHECK(q.module->size() == 2);
  CHECK(q.module->gen_orders() == std::vector<i64>{2});

  ModuleMap proj{reg, q.module, q.to_quotient};
  CHECK(map_is_equivariant(proj));
  CHECK(proj.is_surjective());
  CHECK(submodule_equal(proj.kernel(), even));

  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr rt2 = FiniteModule::regular(t2);
  QuotientModule top = quotient_module(socle_submodule(rt2));
  CHECK(top.module->size() == 2);

  TestRng rng(0x5eed0006);
  for (const auto& [name, data] : fixtures::all_rings()) {
    CAPTURE(name);
    RingPtr ring = FiniteRing::create(data);
    ModulePtr r = FiniteModule::regular(ring);
    for (int iter = 0; iter < 20; ++iter) {
      std::vector<Vec> seeds;
      for (int t = rng.below(3); t >= 0; --t) seeds.push_back(r->element_at(rng.below(r->size())));
      Submodule s = submodule_generated(r, seeds);
      QuotientModule qq = quotient_module(s);
      ModuleMap f{r, qq.module, qq.to_quotient};
      CHECK(map_is_equivariant(f));
      CHECK(f.is_surjective());
      CHECK(submodule_equal(f.kernel(), s));
      CHECK(static_cast<u128>(r->size()) == s.size() * static_cast<u128>(qq.module->size()));
      IntMatrix section = matmul(qq.lift, qq.to_quotient);
      for (int i = 0; i < section.rows(); ++i)
        for (int j = 0; j < section.cols(); ++j)
          CHECK(mod_floor(section(i, j) - (i == j ? 1 : 0),
                          qq.module->gen_orders()[static_cast<std::size_t>(j)]) == 0);
    }
  }
}

TEST_CASE("submodules re-present as standalone modules") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr reg = FiniteModule::regular(t2);
  Submodule e11r = submodule_generated(reg, {Vec{1, 0, 0}});
  EmbeddedModule emb = submodule_as_module(e11r);
  CHECK(static_cast<u128>(emb.module->size()) == e11r.size());

  ModuleMap in{emb.module, reg, emb.embed};
  CHECK(map_is_equivariant(in));
  CHECK(in.is_injective());
  CHECK(submodule_equal(in.image(), e11r));

  TestRng rng(0x5eed0007);
  for (const auto& [name, data] : fixtures::all_rings()) {
    CAPTURE(name);
    RingPtr ring = FiniteRing::create(data);
    ModulePtr r = FiniteModule::regular(ring);
    for (int iter = 0; iter < 20; ++iter) {
      std::vector<Vec> seeds;
      for (int t = rng.below(3); t >= 0; --t) seeds.push_back(r->element_at(rng.below(r->size())));
      Submodule s = submodule_generated(r, seeds);
      EmbeddedModule e = submodule_as_module(s);
      CHECK(static_cast<u128>(e.module->size()) == s.size());
      ModuleMap f{e.module, r, e.embed};
      CHECK(map_is_equivariant(f));
      CHECK(f.is_injective());
      CHECK(submodule_equal(f.image(), s));
    }
  }
}

TEST_CASE("isomorphism testing separates the fixture modules") {
  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr reg = FiniteModule::regular(z4);
  ModulePtr reg2 = FiniteModule::create(z4, reg->data());
  ModulePtr half = cyclic_with_actions(z4, 2, {1});
  CHECK(is_isomorphic(reg, reg2));
  CHECK_FALSE(is_isomorphic(reg, FiniteModule::direct_sum(half, half)));

  RingPtr f2x = FiniteRing::create(fixtures::f2x());
  ModulePtr rx = FiniteModule::regular(f2x);
  ModulePtr triv = cyclic_with_actions(f2x, 2, {1, 0});
  CHECK_FALSE(is_isomorphic(rx, FiniteModule::direct_sum(triv, triv)));
  CHECK(is_isomorphic(rx, rx));

  RingPtr ff = FiniteRing::create(fixtures::f2f2());
  ModulePtr first = cyclic_with_actions(ff, 2, {1, 0});
  ModulePtr second = cyclic_with_actions(ff, 2, {0, 1});
  CHECK(is_isomorphic(FiniteModule::regular(ff), FiniteModule::direct_sum(first, second)));
  CHECK(is_isomorphic(FiniteModule::direct_sum(first, second),
                      FiniteModule::direct_sum(second, first)));
  CHECK_FALSE(is_isomorphic(first, second));

  // Large semisimple pile: the hom space is far too big to enumerate, so the
  // randomized surjectivity trials must find an invertible map.
  RingPtr f2 = FiniteRing::create(fixtures::f2());
  ModulePtr pile = FiniteModule::regular(f2);
  for (int t = 0; t < 11; ++t) pile = FiniteModule::direct_sum(pile, FiniteModule::regular(f2));
  CHECK(pile->size() == 4096);
  ModulePtr pile2 = FiniteModule::create(f2, pile->data());
  CHECK(is_isomorphic(pile, pile2));

  RingPtr other = FiniteRing::create(fixtures::z4());
  CHECK_THROWS_AS((void)is_isomorphic(reg, FiniteModule::regular(other)), std::invalid_argument);
}

TEST_CASE("the simple catalog lists each class once with its cover") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  std::vector<SimpleEntry> cat = simple_catalog(t2);
  REQUIRE(cat.size() == 2);
  CHECK(t2->index_of(cat[0].cover_idempotent) == 1);  // e22
  CHECK(t2->index_of(cat[1].cover_idempotent) == 4);  // e11
  for (const SimpleEntry& entry : cat) {
    CHECK(entry.module->size() == 2);
    CHECK(entry.endo_size == 2);
    CHECK(is_simple(entry.module));
  }
  CHECK_FALSE(is_isomorphic(cat[0].module, cat[1].module));
  // e22 acts as the identity on the class covered by e22.
  CHECK(cat[0].module->act(cat[0].module->generator(0), t2->basis_element(2)) ==
        cat[0].module->generator(0));
  CHECK(cat[1].module->act(cat[1].module->generator(0), t2->basis_element(0)) ==
        cat[1].module->generator(0));

  RingPtr z4 = FiniteRing::create(fixtures::z4());
  std::vector<SimpleEntry> cz4 = simple_catalog(z4);
  REQUIRE(cz4.size() == 1);
  CHECK(z4->index_of(cz4[0].cover_idempotent) == 1);
  CHECK(cz4[0].module->size() == 2);

  RingPtr f2x = FiniteRing::create(fixtures::f2x());
  std::vector<SimpleEntry> cx = simple_catalog(f2x);
  REQUIRE(cx.size() == 1);
  CHECK(f2x->index_of(cx[0].cover_idempotent) == 2);

  RingPtr ff = FiniteRing::create(fixtures::f2f2());
  std::vector<SimpleEntry> cff = simple_catalog(ff);
  REQUIRE(cff.size() == 2);
  CHECK(ff->index_of(cff[0].cover_idempotent) == 1);
  CHECK(ff->index_of(cff[1].cover_idempotent) == 2);
  CHECK(is_isomorphic(cff[1].module, cyclic_with_actions(ff, 2, {1, 0})));

  CHECK_FALSE(is_simple(FiniteModule::regular(t2)));
  CHECK(is_simple(cyclic_with_actions(FiniteRing::create(fixtures::f2()), 2, {1})));
  CHECK_FALSE(is_simple(FiniteModule::zero_module(FiniteRing::create(fixtures::f2()))));
}

TEST_CASE("composition profiles count the simple factors") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  std::vector<SimpleEntry> cat = simple_catalog(t2);
  ModulePtr reg = FiniteModule::regular(t2);
  CHECK(composition_profile(reg, cat) == std::vector<i64>{2, 1});
  CHECK(composition_profile(FiniteModule::direct_sum(reg, reg), cat) == std::vector<i64>{4, 2});
  CHECK(composition_profile(cat[0].module, cat) == std::vector<i64>{1, 0});
  CHECK(composition_profile(cat[1].module, cat) == std::vector<i64>{0, 1});
  CHECK(composition_profile(FiniteModule::zero_module(t2), cat) == std::vector<i64>{0, 0});

  RingPtr z4 = FiniteRing::create(fixtures::z4());
  CHECK(composition_profile(FiniteModule::regular(z4), simple_catalog(z4)) == std::vector<i64>{2});

  RingPtr f2x = FiniteRing::create(fixtures::f2x());
  CHECK(composition_profile(FiniteModule::regular(f2x), simple_catalog(f2x)) ==
        std::vector<i64>{2});

  RingPtr ff = FiniteRing::create(fixtures::f2f2());
  CHECK(composition_profile(FiniteModule::regular(ff), simple_catalog(ff)) ==
        std::vector<i64>{1, 1});
}

TEST_CASE("additive invariants are canonical") {
  RingPtr z4 = FiniteRing::create(fixtures::z4());
  ModulePtr reg = FiniteModule::regular(z4);
  ModulePtr half = cyclic_with_actions(z4, 2, {1});
  CHECK(reg->additive_invariants() == std::vector<i64>{4});
  CHECK(FiniteModule::direct_sum(half, reg)->additive_invariants() == std::vector<i64>{2, 4});
  CHECK(FiniteModule::direct_sum(reg, half)->additive_invariants() == std::vector<i64>{2, 4});
  CHECK(FiniteModule::regular(FiniteRing::create(fixtures::t2f2()))->additive_invariants() ==
        std::vector<i64>{2, 2, 2});
}

TEST_CASE("zero modules behave at every boundary") {
  RingPtr t2 = FiniteRing::create(fixtures::t2f2());
  ModulePtr zero = FiniteModule::zero_module(t2);
  ModulePtr reg = FiniteModule::regular(t2);
  CHECK(zero->size() == 1);
  CHECK(zero->rank() == 0);
  CHECK(zero->additive_invariants().empty());
  CHECK(hom_count(zero, reg) == static_cast<u128>(1));
  CHECK(hom_count(reg, zero) == static_cast<u128>(1));
  CHECK(is_isomorphic(zero, FiniteModule::zero_module(t2)));

  QuotientModule collapse = quotient_module(full_submodule(reg));
  CHECK(collapse.module->size() == 1);
  CHECK(submodule_as_module(zero_submodule(reg)).module->size() == 1);
  CHECK(full_submodule(zero).is_zero());
  CHECK(full_submodule(zero).is_full());
}
