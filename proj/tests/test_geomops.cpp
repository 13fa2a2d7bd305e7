#include <doctest.h>

#include <set>

#include "cgeom/constructions.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/geomops.hpp"
#include "cgeom/lattice.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cgeom;

namespace {

CanonicalKey key_of(const ConvexGeometry& g) { return canonical_key(lattice_of_closed_sets(g)); }

std::set<std::string> formatted(const ConvexGeometry& g) {
  std::set<std::string> out;
  for (auto x : g.closed()) out.insert(g.ground().format_set(x));
  return out;
}

}  // namespace

TEST_SUITE("geomops") {

TEST_CASE("minor examples") {
  const auto p1 = convex_shelling(testing::p1_configuration());
  const auto& gs = p1.ground();
  const auto whole = minor(p1, SubsetMask{}, gs.full());
  CHECK(whole.closed() == p1.closed());
  CHECK(whole.ground().names() == gs.names());

  const auto abc = minor(p1, SubsetMask{}, gs.parse_set("a,b,c"));
  CHECK(abc.ground().names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(abc.closed().size() == 8);

  const auto ce = minor(p1, gs.parse_set("a"), gs.parse_set("a,c,e"));
  CHECK(ce.ground().names() == std::vector<std::string>{"c", "e"});
  CHECK(formatted(ce) == std::set<std::string>{"{}", "c", "c,e"});
}

TEST_CASE("minor errors") {
  const auto p1 = convex_shelling(testing::p1_configuration());
  const auto& gs = p1.ground();
  CHECK_THROWS_AS(minor(p1, gs.parse_set("a,e"), gs.full()), NotClosed);
  CHECK_THROWS_AS(minor(p1, SubsetMask{}, gs.parse_set("b,d")), NotClosed);
  CHECK_THROWS_AS(minor(p1, gs.parse_set("a"), gs.parse_set("b,c")), NotNested);
}

TEST_CASE("product examples") {
  const auto point = chain_geometry(1);
  const auto z2 = chain_geometry(2);
  const auto p1 = convex_shelling(testing::p1_configuration());

  const auto unit = product_geometry(p1, empty_geometry());
  CHECK(unit.closed() == p1.closed());
  CHECK(unit.ground().names().front() == "1.a");

  const auto b2 = product_geometry(point, point);
  CHECK(b2.closed().size() == 4);
  CHECK(b2.ground().names() == std::vector<std::string>{"1.1", "2.1"});

  const auto grid = product_geometry(z2, point);
  CHECK(grid.closed().size() == 6);
  CHECK(key_of(grid) == canonical_key(direct_product(chain_lattice(3), chain_lattice(2))));
}

TEST_CASE("geometry_from_lattice examples") {
  const auto from_chain = geometry_from_lattice(chain_lattice(3));
  CHECK(from_chain.ground_size() == 2);
  CHECK(key_of(from_chain) == key_of(chain_geometry(2)));

  for (std::size_t k = 0; k <= 4; ++k) {
    const auto g = geometry_from_lattice(testing::boolean_lattice(k));
    CHECK(g.ground_size() == k);
    CHECK(g.closed().size() == (std::size_t{1} << k));
  }

  const auto p1_lat = lattice_of_closed_sets(convex_shelling(testing::p1_configuration()));
  const auto back = geometry_from_lattice(p1_lat);
  CHECK(back.ground_size() == 5);
  CHECK(key_of(back) == canonical_key(p1_lat));

  CHECK_THROWS_AS(geometry_from_lattice(testing::m3_lattice()), NotMeetDistributive);
  CHECK_THROWS_AS(geometry_from_lattice(testing::n5_lattice()), NotMeetDistributive);
}

TEST_CASE("minors correspond to intervals") {
  for (const auto& e : testing::corpus()) {
    const auto& g = e.geometry;
    if (g.ground_size() > 5) continue;
    CAPTURE(e.name);
    const auto l = lattice_of_closed_sets(g);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const auto m = minor(g, l.origin(a), l.origin(b));
        CHECK(m.ground_size() == (l.origin(b) - l.origin(a)).size());
        CHECK(key_of(m) == canonical_key(interval(l, a, b)));
      }
  }
}

TEST_CASE("lattice of a product is the product of lattices") {
  const auto classes = testing::distinct_classes(4);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      if (x.geometry.ground_size() + y.geometry.ground_size() > 6) continue;
      CAPTURE(x.name);
      CAPTURE(y.name);
      const auto p = product_geometry(x.geometry, y.geometry);
      CHECK(p.closed().size() == x.geometry.closed().size() * y.geometry.closed().size());
      CHECK(key_of(p) == canonical_key(direct_product(lattice_of_closed_sets(x.geometry),
                                                      lattice_of_closed_sets(y.geometry))));
    }
}

TEST_CASE("round trip through the join-irreducible representation") {
  for (const auto& e : testing::corpus()) {
    CAPTURE(e.name);
    const auto l = lattice_of_closed_sets(e.geometry);
    const auto g = geometry_from_lattice(l);
    CHECK(g.ground_size() == e.geometry.ground_size());
    CHECK(key_of(g) == canonical_key(l));
  }
}

TEST_CASE("product is commutative and associative up to isomorphism") {
  const auto classes = testing::distinct_classes(2);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      CHECK(key_of(product_geometry(x.geometry, y.geometry)) == key_of(product_geometry(y.geometry, x.geometry)));
      for (const auto& z : classes)
        CHECK(key_of(product_geometry(product_geometry(x.geometry, y.geometry), z.geometry)) ==
              key_of(product_geometry(x.geometry, product_geometry(y.geometry, z.geometry))));
    }
}

TEST_CASE("intervals of a product lattice are products of intervals") {
  const auto classes = testing::distinct_classes(3);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      const auto l1 = lattice_of_closed_sets(x.geometry), l2 = lattice_of_closed_sets(y.geometry);
      const auto prod = direct_product(l1, l2);
      const std::size_t n2 = l2.size();
      for (std::size_t a = 0; a < prod.size(); ++a)
        for (std::size_t b = 0; b < prod.size(); ++b) {
          if (!prod.leq(a, b)) continue;
          const auto i1 = interval(l1, a / n2, b / n2), i2 = interval(l2, a % n2, b % n2);
          const auto iv = interval(prod, a, b);
          CHECK(iv.size() == i1.size() * i2.size());
          CHECK(canonical_key(iv) == canonical_key(direct_product(i1, i2)));
        }
    }
}

TEST_CASE("every minor is a convex geometry") {
  for (const auto& e : testing::distinct_classes(6)) {
    const auto& g = e.geometry;
    for (auto a : g.closed())
      for (auto b : g.closed())
        if (a.subset_of(b)) {
          const auto m = minor(g, a, b);
          CHECK_FALSE(check_antiexchange(m).has_value());
        }
  }
}

}  // TEST_SUITE
