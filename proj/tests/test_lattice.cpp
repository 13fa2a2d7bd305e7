#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "cgeom/constructions.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/lattice.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cgeom;
using testing::boolean_lattice;
using testing::m3_lattice;
using testing::n5_lattice;

namespace {

FiniteLattice p1_lattice() { return lattice_of_closed_sets(convex_shelling(testing::p1_configuration())); }

FiniteLattice::Element at(const FiniteLattice& l, const ConvexGeometry& g, const char* set) {
  return *l.find_origin(g.ground().parse_set(set));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("lattice_of_closed_sets examples") {
  const auto chain = lattice_of_closed_sets(chain_geometry(2));
  CHECK(chain.size() == 3);
  CHECK(canonical_key(chain) == canonical_key(chain_lattice(3)));

  const auto diamond = lattice_of_closed_sets(boolean_geometry(2));
  CHECK(testing::isomorphic_brute_force(diamond, boolean_lattice(2)));

  const auto p1 = p1_lattice();
  CHECK(p1.size() == 25);
  CHECK(p1.rank_sizes() == std::vector<std::size_t>{1, 5, 8, 6, 4, 1});
  CHECK(p1.origin(p1.bottom()) == SubsetMask{});
  CHECK(p1.origin(p1.top()) == SubsetMask::full(5));
}

TEST_CASE("meet and join examples") {
  const auto chain_g = chain_geometry(2);
  const auto chain = lattice_of_closed_sets(chain_g);
  CHECK(chain.meet(at(chain, chain_g, "1"), at(chain, chain_g, "1,2")) == at(chain, chain_g, "1"));

  const auto b2_g = boolean_geometry(2);
  const auto b2 = lattice_of_closed_sets(b2_g);
  CHECK(b2.join(at(b2, b2_g, "1"), at(b2, b2_g, "2")) == at(b2, b2_g, "1,2"));

  const auto p1_g = convex_shelling(testing::p1_configuration());
  const auto p1 = lattice_of_closed_sets(p1_g);
  CHECK(p1.join(at(p1, p1_g, "a"), at(p1, p1_g, "e")) == at(p1, p1_g, "a,c,e"));
  CHECK(p1.meet(at(p1, p1_g, "a,b,c"), at(p1, p1_g, "a,c,d")) == at(p1, p1_g, "a,c"));
}

TEST_CASE("interval examples") {
  const auto p1_g = convex_shelling(testing::p1_configuration());
  const auto p1 = lattice_of_closed_sets(p1_g);
  for (FiniteLattice::Element x = 0; x < p1.size(); ++x) CHECK(interval(p1, x, x).size() == 1);
  CHECK(canonical_key(interval(p1, p1.bottom(), p1.top())) == canonical_key(p1));

  const auto ace = interval(p1, at(p1, p1_g, "a"), at(p1, p1_g, "a,c,e"));
  CHECK(ace.size() == 3);
  CHECK(canonical_key(ace) == canonical_key(chain_lattice(3)));
  CHECK(ace.label(1) == "a,c");

  CHECK_THROWS_AS(interval(p1, at(p1, p1_g, "a"), at(p1, p1_g, "b")), NotComparable);
}

TEST_CASE("direct_product examples") {
  CHECK(canonical_key(direct_product(chain_lattice(2), chain_lattice(2))) == canonical_key(boolean_lattice(2)));
  const auto p1 = p1_lattice();
  CHECK(canonical_key(direct_product(p1, chain_lattice(1))) == canonical_key(p1));

  const auto grid = direct_product(chain_lattice(3), chain_lattice(2));
  CHECK(grid.size() == 6);
  CHECK(grid.upper_covers(grid.bottom()).size() == 2);
  CHECK(grid.rank_sizes() == std::vector<std::size_t>{1, 2, 2, 1});
}

TEST_CASE("direct_product tables match the order-derived product") {
  const std::vector<FiniteLattice> ls{n5_lattice(), m3_lattice(), chain_lattice(3), p1_lattice()};
  for (const auto& a : ls)
    for (const auto& b : ls) {
      const std::size_t n1 = a.size(), n2 = b.size(), n = n1 * n2;
      std::vector<std::uint8_t> leq(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = a.leq(x / n2, y / n2) && b.leq(x % n2, y % n2);
      const auto expected = FiniteLattice::from_order(n, std::move(leq));
      const auto got = direct_product(a, b);
      REQUIRE(got.size() == n);
      CHECK(got.bottom() == expected.bottom());
      CHECK(got.top() == expected.top());
      CHECK(got.cover_pairs() == expected.cover_pairs());
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(got.height(x) == expected.height(x));
        CHECK(got.lower_covers(x) == expected.lower_covers(x));
        for (std::size_t y = 0; y < n; ++y) {
          REQUIRE(got.leq(x, y) == expected.leq(x, y));
          REQUIRE(got.meet(x, y) == expected.meet(x, y));
          REQUIRE(got.join(x, y) == expected.join(x, y));
        }
      }
    }
}

TEST_CASE("is_meet_distributive agrees with building each interval") {
  std::vector<FiniteLattice> pool{m3_lattice(), n5_lattice(), direct_product(n5_lattice(), chain_lattice(2))};
  for (const auto& e : testing::distinct_classes(5)) pool.push_back(lattice_of_closed_sets(e.geometry));
  for (const auto& l : pool) {
    bool slow = true;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (x != l.bottom()) slow = slow && is_boolean(interval(l, meet_all(l, l.lower_covers(x)), x));
    CHECK(is_meet_distributive(l) == slow);
  }
}

TEST_CASE("is_boolean examples") {
  CHECK(is_boolean(boolean_lattice(2)));
  CHECK(is_boolean(chain_lattice(1)));
  CHECK(is_boolean(chain_lattice(2)));
  CHECK_FALSE(is_boolean(chain_lattice(3)));
  CHECK_FALSE(is_boolean(m3_lattice()));
  CHECK(is_boolean(boolean_lattice(4)));
}

TEST_CASE("is_meet_distributive examples") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_meet_distributive(chain_lattice(n)));
  CHECK_FALSE(is_meet_distributive(m3_lattice()));
  CHECK_FALSE(is_meet_distributive(n5_lattice()));
  CHECK(is_meet_distributive(p1_lattice()));
}

TEST_CASE("is_distributive examples") {
  CHECK(is_distributive(boolean_lattice(3)));
  CHECK(is_distributive(chain_lattice(3)));
  CHECK_FALSE(is_distributive(m3_lattice()));
  CHECK_FALSE(is_distributive(n5_lattice()));
  CHECK_FALSE(is_distributive(p1_lattice()));  // meet-distributive but not distributive
}

TEST_CASE("construction errors") {
  const std::vector<std::pair<std::size_t, std::size_t>> cycle{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FiniteLattice::from_covers(2, cycle), NotALattice);
  const std::vector<std::pair<std::size_t, std::size_t>> two_tops{{0, 1}, {0, 2}};
  CHECK_THROWS_AS(FiniteLattice::from_covers(3, two_tops), NotALattice);
  // Two incomparable upper bounds of {1, 2} below the top: no join.
  const std::vector<std::pair<std::size_t, std::size_t>> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                                                {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK_THROWS_AS(FiniteLattice::from_covers(6, bowtie), NotALattice);
  CHECK_THROWS_AS(FiniteLattice::from_covers(0, {}), NotALattice);
}

TEST_CASE("meet and join tables satisfy the lattice axioms") {
  for (const auto& l : {p1_lattice(), m3_lattice(), n5_lattice(), boolean_lattice(3)}) {
    const std::size_t n = l.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(l.meet(x, y) == l.meet(y, x));
        CHECK(l.join(l.meet(x, y), x) == x);
        CHECK(l.meet(l.join(x, y), x) == x);
        CHECK(l.leq(l.meet(x, y), x));
        CHECK(l.leq(y, l.join(x, y)));
        for (std::size_t z = 0; z < n; ++z) CHECK(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
      }
  }
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const auto& l : {p1_lattice(), n5_lattice(), lattice_of_closed_sets(boolean_geometry(4))}) {
    const auto key = canonical_key(l);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(l.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(detail::canonical_key_uncached(testing::relabel(l, perm)) == key);
    }
  }
}

TEST_CASE("canonical key distinguishes known pairs") {
  CHECK(canonical_key(chain_lattice(3)) != canonical_key(boolean_lattice(2)));
  CHECK(canonical_key(m3_lattice()) != canonical_key(n5_lattice()));
  CHECK(canonical_key(direct_product(chain_lattice(2), chain_lattice(2))) ==
        canonical_key(lattice_of_closed_sets(boolean_geometry(2))));
  CHECK(canonical_key(chain_lattice(3)).text == "L3[0<1,1<2]");
  CHECK(canonical_key(chain_lattice(1)).text == "L1[]");
}

TEST_CASE("equal keys exactly for isomorphic lattices (brute-force oracle)") {
  // Group every small lattice from the corpus by key; members of a group must
  // be isomorphic, representatives of different groups must not be.
  std::vector<FiniteLattice> pool{m3_lattice(), n5_lattice()};
  for (const auto& e : testing::corpus()) {
    auto l = lattice_of_closed_sets(e.geometry);
    if (l.size() <= 9) pool.push_back(std::move(l));
  }
  std::map<std::string, std::vector<const FiniteLattice*>> groups;
  for (const auto& l : pool) groups[canonical_key(l).text].push_back(&l);

  for (const auto& [key, members] : groups)
    for (const auto* m : members) CHECK(testing::isomorphic_brute_force(*members.front(), *m));

  std::vector<const FiniteLattice*> reps;
  for (const auto& [key, members] : groups) reps.push_back(members.front());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(testing::isomorphic_brute_force(*reps[i], *reps[j]));
  CHECK(groups.size() > 20);
}

TEST_CASE("is_boolean agrees with isomorphism to B_k") {
  for (const auto& e : testing::corpus()) {
    const auto l = lattice_of_closed_sets(e.geometry);
    if (l.size() > 16) continue;
    bool iso = false;
    for (std::size_t k = 0; (std::size_t{1} << k) <= l.size(); ++k)
      iso = iso || testing::isomorphic_brute_force(l, boolean_lattice(k));
    CAPTURE(e.name);
    CHECK(is_boolean(l) == iso);
  }
}

TEST_CASE("intervals of corpus lattices are meet-distributive") {
  for (const auto& e : testing::distinct_classes(6)) {
    CAPTURE(e.name);
    const auto l = lattice_of_closed_sets(e.geometry);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b)
        if (l.leq(a, b)) CHECK(is_meet_distributive(interval(l, a, b)));
  }
}

TEST_CASE("products of meet-distributive lattices") {
  const auto classes = testing::distinct_classes(3);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      const auto lx = lattice_of_closed_sets(x.geometry), ly = lattice_of_closed_sets(y.geometry);
      const auto xy = direct_product(lx, ly);
      CHECK(is_meet_distributive(xy));
      CHECK(canonical_key(xy) == canonical_key(direct_product(ly, lx)));
    }
}

TEST_CASE("boolean => distributive => meet-distributive on small lattices") {
  std::vector<FiniteLattice> pool{m3_lattice(), n5_lattice()};
  for (const auto& e : testing::distinct_classes(6)) {
    const auto l = lattice_of_closed_sets(e.geometry);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b)
        if (l.leq(a, b) && pool.size() < 4000) {
          auto iv = interval(l, a, b);
          if (iv.size() <= 12) pool.push_back(std::move(iv));
        }
  }
  std::size_t boolean = 0, distributive = 0;
  for (const auto& l : pool) {
    const bool b = is_boolean(l), d = is_distributive(l), md = is_meet_distributive(l);
    if (b) CHECK(d);
    if (d) CHECK(md);
    boolean += b;
    distributive += d;
  }
  CHECK(boolean > 0);
  CHECK(distributive > boolean);
}

TEST_CASE("nested intervals") {
  const auto l = p1_lattice();
  for (std::size_t a = 0; a < l.size(); a += 3)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (!l.leq(a, b)) continue;
      const auto outer = interval(l, a, b);
      for (std::size_t c = 0; c < outer.size(); ++c)
        for (std::size_t d = 0; d < outer.size(); ++d) {
          if (!outer.leq(c, d)) continue;
          const auto direct =
              interval(l, *l.find_origin(outer.origin(c)), *l.find_origin(outer.origin(d)));
          CHECK(canonical_key(interval(outer, c, d)) == canonical_key(direct));
        }
    }
}

}  // TEST_SUITE
