#include <doctest.h>

#include <random>
#include <set>

#include "adelie/error.hpp"
#include "test_helpers.hpp"

using namespace adelie;

TEST_SUITE("root_system") {
  TEST_CASE("type parsing") {
    CHECK(parse_type("a3") == TypeSpec{Kind::A, 3});
    CHECK(parse_type("E8").name() == "E8");
    for (const char* bad : {"D2", "E5", "E9", "A0", "B3", "A", "", "A-1", "A17"}) {
      CAPTURE(bad);
      try {
        parse_type(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalType);
      }
    }
  }

  TEST_CASE("roots equal the reflection closure of the simple roots") {
    for (const auto& name : listed_types()) {
      CAPTURE(name);
      auto rs = system_of(name);
      const auto a = oracle_cartan(*rs);
      CHECK(rs->cartan().to_rows() == a);
      const auto closure = oracle::closure_roots(a);
      std::set<IntVector> ours(rs->roots().begin(), rs->roots().end());
      CHECK(ours == closure);
      CHECK(rs->dimension() == rs->r() + closure.size());
    }
  }

  TEST_CASE("roots equal the norm-2 lattice vectors") {
    for (const char* name : {"A3", "A4", "D4", "D5"}) {
      auto rs = system_of(name);
      std::set<IntVector> ours(rs->roots().begin(), rs->roots().end());
      CHECK(ours == oracle::norm_two(oracle_cartan(*rs), 2));
    }
  }

  TEST_CASE("positive root counts") {
    const std::map<std::string, std::size_t> expected = {{"A1", 1},  {"A2", 3},  {"A5", 15}, {"A7", 28},
                                                         {"D3", 6},  {"D4", 12}, {"D7", 42}, {"E6", 36},
                                                         {"E7", 63}, {"E8", 120}};
    for (const auto& [name, count] : expected) CHECK(system_of(name)->num_positive() == count);
  }

  TEST_CASE("ordering: height, then alpha_1 first; negatives mirror positives") {
    auto rs = system_of("A3");
    CHECK(rs->roots()[0] == IntVector{1, 0, 0});
    CHECK(rs->roots()[2] == IntVector{0, 0, 1});
    CHECK(rs->roots()[3] == IntVector{1, 1, 0});
    for (const auto& name : listed_types()) {
      auto s = system_of(name);
      Int last = 0;
      for (std::size_t k = 0; k < s->num_positive(); ++k) {
        const Int h = RootSystem::height(s->roots()[k]);
        CHECK(h >= last);
        last = h;
        IntVector neg = s->roots()[k];
        for (auto& c : neg) c = -c;
        CHECK(s->roots()[s->num_positive() + k] == neg);
        CHECK(s->negation(k) == s->num_positive() + k);
      }
    }
  }

  TEST_CASE("pairing examples") {
    auto a2 = system_of("A2");
    CHECK(a2->pairing(LatticeVector::root({1, 0}), LatticeVector::weight({1, 0})) == 1);
    CHECK(a2->pairing(LatticeVector::root({1, 0}), LatticeVector::root({0, 1})) == -1);
    auto e8 = system_of("E8");
    const auto theta = LatticeVector::root(e8->highest_root());
    CHECK(e8->pairing(theta, theta) == 2);
    CHECK_THROWS_AS(a2->pairing(LatticeVector::root({1, 0}), LatticeVector::root({1, 0, 0})), Error);
  }

  TEST_CASE("pairing does not depend on the basis") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> c(-4, 4);
    for (const char* name : {"A4", "D5", "E6", "E8"}) {
      auto rs = system_of(name);
      for (int t = 0; t < 200; ++t) {
        IntVector x(rs->r()), y(rs->r());
        for (auto& v : x) v = c(rng);
        for (auto& v : y) v = c(rng);
        const auto xr = LatticeVector::root(x), yr = LatticeVector::root(y);
        const auto yw = rs->to_basis(yr, Basis::FundamentalWeight);
        CHECK(rs->pairing(xr, yr) == rs->pairing(xr, yw));
        CHECK(rs->pairing(xr, yr) == rs->pairing(yr, xr));
        CHECK(rs->to_basis(yw, Basis::SimpleRoot) == yr);
      }
    }
  }

  TEST_CASE("heights") {
    auto a2 = system_of("A2");
    CHECK(RootSystem::height({1, 1}) == 2);
    CHECK(RootSystem::height({-1, 0}) == 1);
    CHECK(system_of("E8")->highest_root() == IntVector{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootSystem::height(system_of("E8")->highest_root()) == 29);
  }

  TEST_CASE("root strings agree with a membership scan") {
    auto a2 = system_of("A2");
    CHECK(a2->root_string({1, 0}, {0, 1}).p == 0);
    CHECK(a2->root_string({1, 0}, {0, 1}).q == 1);
    CHECK(a2->root_string({1, 0}, {1, 1}).p == 1);
    CHECK(a2->root_string({1, 0}, {1, 1}).q == 0);
    auto a3 = system_of("A3");
    CHECK(a3->root_string({1, 0, 0}, {0, 0, 1}).p == 0);
    CHECK(a3->root_string({1, 0, 0}, {0, 0, 1}).q == 0);
    try {
      a2->root_string({1, 0}, {-1, 0});
      FAIL("dependent roots accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DependentRoots);
    }
    for (const char* name : {"D4", "E6"}) {
      auto rs = system_of(name);
      const std::set<IntVector> all(rs->roots().begin(), rs->roots().end());
      for (const auto& a : rs->roots())
        for (const auto& b : rs->roots()) {
          IntVector na = a;
          for (auto& x : na) x = -x;
          if (a == b || na == b) continue;
          auto shift = [&](int k) {
            IntVector v = b;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * a[i];
            return v;
          };
          int p = 0, q = 0;
          while (all.contains(shift(-(p + 1)))) ++p;
          while (all.contains(shift(q + 1))) ++q;
          const auto s = rs->root_string(a, b);
          CHECK(s.p == p);
          CHECK(s.q == q);
          CHECK(p - q == rs->root_pairing(b, a));
          CHECK(p + q <= 1);
        }
    }
  }

  TEST_CASE("rho is the half-sum of the positive roots") {
    for (const auto& name : listed_types()) {
      auto rs = system_of(name);
      IntVector two_rho(rs->r(), 0);
      for (const auto& r : oracle::positive_roots(oracle_cartan(*rs)))
        for (std::size_t i = 0; i < r.size(); ++i) two_rho[i] += r[i];
      const IntVector w = rs->to_weight_coords(two_rho);
      for (Int c : w) CHECK(c == 2);
      CHECK(rs->rho().coords == IntVector(rs->r(), 1));
    }
  }

  TEST_CASE("highest root is maximal and dominant") {
    CHECK(system_of("A2")->highest_root() == IntVector{1, 1});
    CHECK(system_of("A1")->highest_root() == IntVector{1});
    CHECK(system_of("D4")->highest_root() == IntVector{1, 2, 1, 1});
    for (const auto& name : listed_types()) {
      auto rs = system_of(name);
      const auto& theta = rs->highest_root();
      for (Int c : rs->to_weight_coords(theta)) CHECK(c >= 0);
      for (const auto& r : rs->positive_roots())
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] <= theta[i]);
    }
  }

  TEST_CASE("closure under simple reflections and pairing bounds") {
    for (const auto& name : listed_types()) {
      auto rs = system_of(name);
      for (const auto& a : rs->roots()) {
        for (std::size_t i = 0; i < rs->r(); ++i) {
          IntVector s = a;
          s[i] -= rs->root_pairing(a, rs->simple_root(i));
          CHECK(rs->is_root(s));
        }
      }
      for (const auto& a : rs->roots())
        for (const auto& b : rs->roots()) {
          const Int p = rs->root_pairing(a, b);
          IntVector nb = b;
          for (auto& x : nb) x = -x;
          if (a == b) CHECK(p == 2);
          else if (a == nb) CHECK(p == -2);
          else CHECK(std::abs(p) <= 1);
        }
    }
  }

  TEST_CASE("basis errors") {
    auto a2 = system_of("A2");
    try {
      a2->to_basis(LatticeVector::weight({1, 0}), Basis::SimpleRoot);
      FAIL("fundamental weight accepted as a root-lattice vector");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInRootLattice);
    }
    CHECK_THROWS_AS(LatticeVector::root({1, 0}) + LatticeVector::weight({1, 0}), Error);
  }
}
