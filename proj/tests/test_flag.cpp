#include <doctest.h>

#include <random>

#include "adelie/error.hpp"
#include "adelie/flag_cohomology.hpp"
#include "test_helpers.hpp"

using namespace adelie;
using namespace adelie::flag;

namespace {

LatticeVector w(IntVector c) { return LatticeVector::weight(std::move(c)); }

IntVector as_int(const oracle::Vec& v) { return IntVector(v.begin(), v.end()); }

// Every weight with coordinates in [-radius, radius].
std::vector<IntVector> ball(std::size_t rank, Int radius) {
  std::vector<IntVector> out;
  IntVector x(rank, -radius);
  while (true) {
    out.push_back(x);
    std::size_t k = 0;
    while (k < rank && x[k] == radius) x[k++] = -radius;
    if (k == rank) break;
    ++x[k];
  }
  return out;
}

}  // namespace

TEST_SUITE("flag_cohomology") {
  TEST_CASE("singularity and index examples") {
    auto a2 = system_of("A2");
    CHECK_FALSE(is_singular(*a2, w({1, 1})));
    CHECK(is_singular(*a2, w({0, 0})));
    // -theta + rho: theta is (1,1) in weight coordinates.
    CHECK(is_singular(*a2, w({-1 + 1, -1 + 1})));
    CHECK(index(*a2, w({1, 1})) == 0);
    CHECK(index(*a2, w({-1, 2})) == 1);
    for (const char* name : {"A3", "D4", "E6"}) {
      auto rs = system_of(name);
      CHECK(index(*rs, w(IntVector(rs->r(), -1))) == rs->num_positive());
    }
  }

  TEST_CASE("dominant conjugate examples") {
    auto a2 = system_of("A2");
    const auto s = dominant_conjugate(*a2, w({-1, 2}));
    CHECK(s.dominant.coords == IntVector{1, 1});
    CHECK(s.word == std::vector<std::size_t>{0});
    CHECK(dominant_conjugate(*a2, w({1, 1})).word.empty());
    for (const char* name : {"A4", "D5", "E7"}) {
      auto rs = system_of(name);
      const auto t = dominant_conjugate(*rs, w(IntVector(rs->r(), -1)));
      CHECK(t.dominant.coords == IntVector(rs->r(), 1));
      CHECK(t.word.size() == rs->num_positive());
    }
  }

  TEST_CASE("weyl_dim") {
    for (const auto& name : listed_types()) {
      CAPTURE(name);
      auto rs = system_of(name);
      CHECK(weyl_dim(*rs, w(IntVector(rs->r(), 0))) == 1);
      CHECK(weyl_dim(*rs, LatticeVector::root(rs->highest_root())) == BigInt(rs->dimension()));
    }
    auto a2 = system_of("A2");
    CHECK(weyl_dim(*a2, w({3, 2})) == oracle::euler_chi(oracle_cartan(*a2), {3, 2}));
    try {
      weyl_dim(*a2, w({-1, 0}));
      FAIL("non-dominant accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotDominant);
    }
  }

  TEST_CASE("bwb examples") {
    auto a2 = system_of("A2");
    const auto v = bwb(*a2, LatticeVector::root({-1, 0}));
    CHECK(v.status == Status::Concentrated);
    CHECK(v.degree == 1);
    CHECK(v.highest_weight.coords == IntVector{0, 0});
    CHECK(v.dimension == 1);
    const auto zero = bwb(*a2, w({0, 0}));
    CHECK(zero.status == Status::Concentrated);
    CHECK(zero.degree == 0);
    CHECK(zero.dimension == 1);
    CHECK(bwb(*a2, LatticeVector::root({-1, -1})).status == Status::AllVanish);
  }

  TEST_CASE("bwb agrees with a Weyl group search") {
    for (const char* name : {"A2", "A3", "D4"}) {
      CAPTURE(name);
      auto rs = system_of(name);
      const auto a = oracle_cartan(*rs);
      const auto group = oracle::weyl_group(a);
      for (const auto& lam : ball(rs->r(), 3)) {
        oracle::Vec shifted(lam.begin(), lam.end());
        for (auto& x : shifted) x += 1;
        bool singular = false;
        const oracle::WeylElement* sorter = nullptr;
        oracle::Vec image;
        for (const auto& g : group) {
          const auto y = oracle::apply(g.m, shifted);
          if (std::any_of(y.begin(), y.end(), [](auto c) { return c == 0; })) singular = true;
          if (std::all_of(y.begin(), y.end(), [](auto c) { return c > 0; })) {
            sorter = &g;
            image = y;
          }
        }
        const auto v = bwb(*rs, w(lam));
        CAPTURE(lam);
        if (singular) {
          CHECK(v.status == Status::AllVanish);
          continue;
        }
        REQUIRE(sorter != nullptr);
        for (auto& x : image) x -= 1;
        CHECK(v.status == Status::Concentrated);
        CHECK(v.degree == static_cast<std::size_t>(sorter->length));
        CHECK(v.highest_weight.coords == as_int(image));
        CHECK(v.dimension == oracle::euler_chi(a, image));
        CHECK(v.word.size() == v.degree);
      }
    }
  }

  TEST_CASE("Euler characteristic matches the product formula") {
    std::mt19937_64 rng(3);
    for (const char* name : {"A5", "D6", "E6", "E8"}) {
      auto rs = system_of(name);
      const auto a = oracle_cartan(*rs);
      std::uniform_int_distribution<Int> coord(-6, 6);
      for (int t = 0; t < 200; ++t) {
        IntVector lam(rs->r());
        for (auto& x : lam) x = coord(rng);
        CHECK(bwb(*rs, w(lam)).euler_characteristic() == oracle::euler_chi(a, oracle::Vec(lam.begin(), lam.end())));
      }
    }
  }

  TEST_CASE("Serre duality on the radius-3 ball") {
    for (const char* name : {"A2", "A3", "D4"}) {
      auto rs = system_of(name);
      for (const auto& lam : ball(rs->r(), 3)) {
        IntVector dual(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) dual[i] = -lam[i] - 2;
        const auto a = bwb(*rs, w(lam)), b = bwb(*rs, w(dual));
        REQUIRE(a.status == b.status);
        if (a.status == Status::AllVanish) continue;
        CHECK(a.degree + b.degree == rs->num_positive());
        CHECK(a.dimension == b.dimension);
      }
    }
  }

  TEST_CASE("sorting word length equals the index for regular weights") {
    std::mt19937_64 rng(9);
    for (const char* name : {"A6", "D5", "E7"}) {
      auto rs = system_of(name);
      std::uniform_int_distribution<Int> coord(-4, 4);
      for (int t = 0; t < 300; ++t) {
        IntVector mu(rs->r());
        for (auto& x : mu) x = coord(rng);
        if (is_singular(*rs, w(mu))) continue;
        CHECK(dominant_conjugate(*rs, w(mu)).word.size() == index(*rs, w(mu)));
      }
    }
  }

  TEST_CASE("roots have cohomology in degree at most one") {
    for (const auto& name : listed_types()) {
      CAPTURE(name);
      auto rs = system_of(name);
      const auto p2 = verify_prop2(*rs);
      CHECK(p2.ok());
      CHECK(p2.checked == rs->num_roots());
      CHECK(verify_lemma3(*rs).ok());
      for (std::size_t i = 0; i < rs->r(); ++i) {
        IntVector neg(rs->r(), 0);
        neg[i] = -1;
        const auto v = bwb(*rs, LatticeVector::root(neg));
        CHECK(v.degree == 1);
        CHECK(v.dimension == 1);
        CHECK(v.dimension == bwb(*rs, w(IntVector(rs->r(), 0))).dimension);
      }
    }
  }

  TEST_CASE("schubert restriction degree") {
    auto a2 = system_of("A2");
    CHECK(schubert_restriction_degree(*a2, LatticeVector::root({-1, 0}), 0) == -2);
    CHECK(schubert_restriction_degree(*a2, LatticeVector::root({-1, 0}), 1) == 1);
    auto e6 = system_of("E6");
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        IntVector lam(6, 0);
        lam[j] = 1;
        CHECK(schubert_restriction_degree(*e6, w(lam), i) == (i == j ? 1 : 0));
      }
    try {
      schubert_restriction_degree(*a2, w({0, 0}), 2);
      FAIL("index accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }

  TEST_CASE("triviality criterion") {
    auto a2 = system_of("A2");
    CHECK(triviality_criterion(*a2, {{0, true}, {1, true}}).trivial);
    const auto v = triviality_criterion(*a2, {{0, false}, {1, true}});
    CHECK_FALSE(v.trivial);
    CHECK(v.failing == std::vector<std::size_t>{0});
    CHECK(triviality_criterion(*system_of("A1"), {{0, true}}).trivial);
  }
}
