#include <doctest.h>

#include "belyicert/errors.hpp"
#include "belyicert/triples.hpp"
#include "fixtures.hpp"

using namespace belyicert;

namespace
{

PermGroup s3()
{ return PermGroup({parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3)}); }

} // namespace

TEST_CASE("close_triple")
{
  auto t = close_triple(parse_permutation("(1,2)", 3), parse_permutation("(2,3)", 3));
  CHECK(compose(compose(t.x, t.y), t.z).is_identity());
  CHECK(cycle_type(t.z) == CycleType::parse("3"));
  // (1,2) then (2,3) is (1,3,2); its inverse
  CHECK(t.z == parse_permutation("(1,2,3)", 3));

  auto y = parse_permutation("(1,4,2)", 4);
  CHECK(close_triple(Permutation::identity(4), y).z == inverse(y));
  CHECK_THROWS_AS(close_triple(Permutation::identity(3), y), DegreeMismatch);

  auto t56 = testing::triple_of(testing::load("nl34_56"));
  CHECK(cycle_type(t56.z) == CycleType::parse("2^25.1^6"));
}

TEST_CASE("genus")
{
  auto t52 = testing::triple_of(testing::load("aut_psl33_52"));
  CHECK(ramification_index(t52.x) == 44);
  CHECK(ramification_index(t52.y) == 24);
  CHECK(ramification_index(t52.z) == 34);
  CHECK(genus(t52) == 0);

  auto c = parse_permutation("(1,2,3)", 3);
  CHECK(genus(TripleDatum{c, c, c}) == 1);

  auto a = parse_permutation("(1,2,3,4,5)", 5);
  CHECK(genus(TripleDatum{Permutation::identity(5), a, inverse(a)}) == 0);

  CHECK_THROWS_AS(genus({CycleType::parse("2.1"), CycleType::parse("1^3"),
                         CycleType::parse("1^3")}),
                  std::domain_error);
}

TEST_CASE("generates")
{
  auto g = s3();
  auto id = Permutation::identity(3);
  CHECK_FALSE(generates(g, close_triple(id, id)));
  CHECK(generates(g, close_triple(parse_permutation("(1,2)", 3), parse_permutation("(2,3)", 3))));
  PermGroup c3({parse_permutation("(1,2,3)", 3)});
  CHECK_THROWS_AS(generates(c3, close_triple(parse_permutation("(1,2)", 3), id)),
                  std::invalid_argument);
}

TEST_CASE("divisibility criterion")
{
  using V = PrimitivityVerdict;
  CHECK(divisibility_primitivity({1, 6, 18, 27}, 52) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 6, 24, 32}, 63) == V::inconclusive);
  CHECK(divisibility_primitivity({1, 4, 6, 8, 12, 24}, 55) == V::inconclusive);
  CHECK(divisibility_primitivity({1, 16, 60}, 77) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 6, 12, 12, 12, 12}, 55) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 10, 45}, 56) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 20, 64}, 85) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 22, 77}, 100) == V::certified_primitive);
  CHECK(divisibility_primitivity({1, 64, 70}, 135) == V::certified_primitive);
  // 1 + 1 = 2 divides 4: a repeated 1 counts once more
  CHECK(divisibility_primitivity({1, 1, 2}, 4) == V::inconclusive);
  CHECK_THROWS_AS(divisibility_primitivity({2, 3}, 5), std::invalid_argument);
  CHECK_THROWS_AS(divisibility_primitivity({1, 3}, 5), std::invalid_argument);
}

TEST_CASE("census in S3")
{
  Budget b;
  auto g = s3();
  auto transpositions = class_orbit(g, parse_permutation("(1,2)", 3), b);
  auto three_cycles = class_orbit(g, parse_permutation("(1,2,3)", 3), b);
  auto identity = class_orbit(g, Permutation::identity(3), b);

  auto c = count_class_triples(g, transpositions, transpositions, three_cycles, b);
  CHECK(c.pair_count == 2);
  CHECK(c.generating_pairs == 2);
  CHECK(c.all_generate);
  CHECK(c.generating_orbit_count == 1);
  REQUIRE(c.orbit_count);
  CHECK(*c.orbit_count == 1);

  auto none = count_class_triples(g, transpositions, three_cycles, identity, b);
  CHECK(none.pair_count == 0);

  auto table = all_classes(g, b);
  auto by = count_triples_by_types(g, table, CycleType::parse("2.1"), CycleType::parse("2.1"),
                                   CycleType::parse("3"), b);
  CHECK(by.generating_orbit_count == 1);
  // a product of two 3-cycles in S3 is never a transposition
  auto empty = count_triples_by_types(g, table, CycleType::parse("3"), CycleType::parse("3"),
                                      CycleType::parse("2.1"), b);
  CHECK(empty.pair_count == 0);
  CHECK(empty.generating_orbit_count == 0);

  ClassTable partial = table;
  partial.complete = false;
  CHECK_THROWS_AS(count_triples_by_types(g, partial, CycleType::parse("3"),
                                         CycleType::parse("3"), CycleType::parse("3"), b),
                  std::invalid_argument);
}

TEST_CASE("census for the first PGL(2,11) triple")
{
  Budget b;
  auto t = testing::triple_of(testing::load("pgl211_55a"));
  auto g = testing::group_of(t);
  auto c = count_class_triples(g, class_orbit(g, t.x, b), class_orbit(g, t.y, b),
                               class_orbit(g, t.z, b), b);
  CHECK(c.all_generate);
  REQUIRE(c.orbit_count);
  CHECK(*c.orbit_count == 1);
}

TEST_CASE("census by types for the degree-52 group")
{
  Budget b;
  auto t = testing::triple_of(testing::load("aut_psl33_52"));
  auto g = testing::group_of(t);
  auto table = all_classes(g, b);
  auto c = count_triples_by_types(g, table, cycle_type(t.x), cycle_type(t.y), cycle_type(t.z), b);
  CHECK(c.generating_orbit_count == 1);
}

TEST_CASE("census runs out of time")
{
  Budget b;
  auto t = testing::triple_of(testing::load("aut_m22_77"));
  auto g = testing::group_of(t);
  auto cx = class_orbit(g, t.x, b), cy = class_orbit(g, t.y, b), cz = class_orbit(g, t.z, b);
  Budget none = b;
  none.seconds = std::chrono::duration<double>(0);
  CHECK_THROWS_AS(count_class_triples(g, cx, cy, cz, none), ResourceError);
}

TEST_CASE("scan")
{
  Budget b;
  std::size_t pgl_total = 0;
  for (char const *name : {"pgl211_55a", "pgl211_55b"}) {
    auto g = testing::group_of(testing::triple_of(testing::load(name)));
    auto r = scan_nice_triples(g, all_classes(g, b), {true, false}, b);
    CHECK(r.applicable);
    CHECK(r.unordered_count() == 1);
    pgl_total += r.unordered_count();
  }
  CHECK(pgl_total == 2);

  auto t = testing::triple_of(testing::load("aut_m22_77"));
  auto g = testing::group_of(t);
  auto r = scan_nice_triples(g, all_classes(g, b), {true, false}, b);
  REQUIRE(r.unordered_count() == 1);
  CHECK(r.triples[0].orderings == 6);
  CHECK(r.ordered_count() == 6);
  std::multiset<CycleType> found(r.triples[0].types.begin(), r.triples[0].types.end());
  std::multiset<CycleType> expect{cycle_type(t.x), cycle_type(t.y), cycle_type(t.z)};
  CHECK(found == expect);

  auto sg = s3();
  auto none = scan_nice_triples(sg, all_classes(sg, b), {true, true}, b);
  CHECK_FALSE(none.applicable);
  CHECK(none.triples.empty());
  auto undeclared = scan_nice_triples(sg, all_classes(sg, b), {false, false}, b);
  CHECK(undeclared.triples.empty());
}
