#include <doctest.h>

#include "cgeom/constructions.hpp"
#include "cgeom/errors.hpp"
#include "cgeom/kernels.hpp"
#include "cgeom/setfam.hpp"
#include "support/corpus.hpp"

using namespace cgeom;

namespace {

SubsetMask set_of(const GroundSet& g, const char* text) { return g.parse_set(text); }

ConvexGeometry make(std::vector<std::string> names, std::vector<const char*> sets) {
  GroundSet ground(std::move(names));
  std::vector<SubsetMask> fam;
  for (auto* s : sets) fam.push_back(ground.parse_set(s));
  return validate_family(ground, fam);
}

}  // namespace

TEST_SUITE("setfam") {

TEST_CASE("ground set labels") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(GroundSet({"a b"}), InputError);
  CHECK_THROWS_AS(GroundSet({"a,b"}), InputError);
  CHECK_THROWS_AS(GroundSet({""}), InputError);
  CHECK_THROWS_AS(GroundSet({"{}"}), InputError);
  CHECK_THROWS_AS(GroundSet::numbered(17), InputError);

  const GroundSet g({"x", "y", "z"});
  CHECK(g.parse_set("{}") == SubsetMask{});
  CHECK(g.parse_set("z,x") == SubsetMask(0b101));
  CHECK(g.format_set(SubsetMask(0b101)) == "x,z");
  CHECK_THROWS_AS(g.parse_set("w"), InputError);
  CHECK_THROWS_AS(g.parse_set("x,x"), InputError);
  CHECK_THROWS_AS(g.parse_set(""), InputError);
}

TEST_CASE("storage and text orders differ on {a,d} vs {b,c}") {
  const SubsetMask ad(0b1001), bc(0b0110);
  CHECK(bc < ad);                     // numeric within equal cardinality
  CHECK(ground_order_less(ad, bc));   // lexicographic on index lists
  CHECK_FALSE(ground_order_less(bc, ad));
  CHECK(ground_order_less(SubsetMask(0b1000), ad));  // cardinality first
}

TEST_CASE("validate_family accepts the 2-chain") {
  const auto g = make({"1", "2"}, {"{}", "1", "1,2"});
  CHECK(g.closed().size() == 3);
  CHECK(g.is_closed(SubsetMask(0b01)));
  CHECK_FALSE(g.is_closed(SubsetMask(0b10)));
}

TEST_CASE("validate_family reports axiom iii with witness {}") {
  try {
    make({"1", "2"}, {"{}", "1,2"});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 3);
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] == SubsetMask{});
  }
}

TEST_CASE("validate_family reports axiom i") {
  try {
    make({"1", "2"}, {"1", "1,2"});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 1);
    CHECK(e.witness() == std::vector<SubsetMask>{SubsetMask{}});
  }
  try {
    make({"1", "2"}, {"{}", "1"});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 1);
    CHECK(e.witness() == std::vector<SubsetMask>{SubsetMask(0b11)});
  }
}

TEST_CASE("validate_family reports the least axiom ii pair") {
  // Storage order: {}, {1}, {1,2}, {2,3}, {1,2,3}; {1,2} ∩ {2,3} = {2} is missing.
  try {
    make({"1", "2", "3"}, {"{}", "1", "1,2", "2,3", "1,2,3"});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 2);
    CHECK(e.witness() == std::vector<SubsetMask>{SubsetMask(0b011), SubsetMask(0b110), SubsetMask(0b010)});
  }
}

TEST_CASE("validate_family input errors") {
  CHECK_THROWS_AS(validate_family(GroundSet({"1"}), {}), InputError);
  CHECK_THROWS_AS(validate_family(GroundSet({"1"}), {SubsetMask{}, SubsetMask(0b10)}), InputError);
}

TEST_CASE("duplicates are merged and order is canonical") {
  const GroundSet g({"1", "2"});
  const auto a = validate_family(g, {SubsetMask(3), SubsetMask(1), SubsetMask(0), SubsetMask(1)});
  CHECK(a.closed() == std::vector<SubsetMask>{SubsetMask(0), SubsetMask(1), SubsetMask(3)});
}

TEST_CASE("empty geometry") {
  const auto e = empty_geometry();
  CHECK(e.ground_size() == 0);
  CHECK(e.closed().size() == 1);
  CHECK(closure(e, SubsetMask{}) == SubsetMask{});
  CHECK_FALSE(check_antiexchange(e).has_value());
}

TEST_CASE("closure examples") {
  const auto chain = chain_geometry(2);
  CHECK(closure(chain, SubsetMask(0b10)) == SubsetMask(0b11));
  for (auto x : chain.closed()) CHECK(closure(chain, x) == x);

  const auto p1 = convex_shelling(testing::p1_configuration());
  const auto& gs = p1.ground();
  CHECK(closure(p1, set_of(gs, "a,e")) == set_of(gs, "a,c,e"));
  CHECK(closure(p1, set_of(gs, "b,d")) == set_of(gs, "b,c,d"));
  CHECK(closure(p1, set_of(gs, "a,b,d,e")) == gs.full());
}

TEST_CASE("antiexchange examples") {
  CHECK_FALSE(check_antiexchange(chain_geometry(2)).has_value());
  CHECK_FALSE(check_antiexchange(convex_shelling(testing::p1_configuration())).has_value());
}

TEST_CASE("antiexchange counterexample from a matroid closure") {
  // Uniform matroid U(2,3): any two elements span everything.
  const std::vector<SubsetMask> closed{SubsetMask(0), SubsetMask(1), SubsetMask(2), SubsetMask(4), SubsetMask(7)};
  const auto table = serial::closure_table(3, closed);
  for (auto bad : {serial::find_antiexchange_violation(3, table), parallel::find_antiexchange_violation(3, table)}) {
    REQUIRE(bad.has_value());
    CHECK(bad->base == SubsetMask(0b001));
    CHECK(bad->x == 1);
    CHECK(bad->y == 2);
  }
}

TEST_CASE("closure is a closure operator on every small corpus geometry") {
  for (const auto& entry : testing::corpus()) {
    const auto& g = entry.geometry;
    if (g.ground_size() > 5) continue;
    CAPTURE(entry.name);
    const auto table = closure_table(g);
    const std::uint32_t count = 1u << g.ground_size();
    std::size_t fixed_points = 0;
    for (std::uint32_t a = 0; a < count; ++a) {
      const SubsetMask ca = table[a];
      REQUIRE(ca == closure(g, SubsetMask(a)));
      CHECK(SubsetMask(a).subset_of(ca));
      CHECK(table[ca.bits] == ca);
      CHECK(g.is_closed(ca));
      if (ca == SubsetMask(a)) ++fixed_points;
      for (std::uint32_t b = 0; b < count; ++b)
        if (SubsetMask(a).subset_of(SubsetMask(b))) CHECK(ca.subset_of(table[b]));
    }
    CHECK(fixed_points == g.closed().size());
  }
}

TEST_CASE("every accepted family has the antiexchange property") {
  for (const auto& entry : testing::corpus()) {
    CAPTURE(entry.name);
    CHECK_FALSE(check_antiexchange(entry.geometry).has_value());
  }
}

}  // TEST_SUITE
