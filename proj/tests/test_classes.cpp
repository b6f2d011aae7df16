#include <doctest.h>

#include <algorithm>
#include <random>

#include "belyicert/classes.hpp"
#include "belyicert/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace belyicert;

namespace
{

PermGroup sym(std::size_t n)
{
  std::vector<std::size_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = (i + 1) % n + 1;
  return PermGroup({parse_permutation("(1,2)", n), Permutation::from_one_based(cyc)});
}

} // namespace

TEST_CASE("class_orbit small cases")
{
  Budget b;
  auto s3 = sym(3);
  auto c = class_orbit(s3, parse_permutation("(1,2,3)", 3), b);
  CHECK(c.size == 2);
  CHECK(c.contains(parse_permutation("(1,3,2)", 3)));
  CHECK_FALSE(c.contains(parse_permutation("(1,2)", 3)));
  CHECK(c.element_order == 3);
  CHECK(class_orbit(s3, Permutation::identity(3), b).size == 1);

  PermGroup c4({parse_permutation("(1,2,3,4)", 4)});
  CHECK_THROWS_AS(class_orbit(c4, parse_permutation("(1,2)", 4), b), std::invalid_argument);
}

TEST_CASE("class_orbit respects the size budget")
{
  Budget b;
  b.max_class_size = 5;
  auto s5 = sym(5);
  CHECK_THROWS_AS(class_orbit(s5, parse_permutation("(1,2)", 5), b), ResourceError);
  CHECK(is_conjugate(s5, parse_permutation("(1,2)", 5), parse_permutation("(3,4)", 5), b) ==
        Tristate::unknown);
  CHECK(is_rational_class(s5, parse_permutation("(1,2,3)", 5), b) == Tristate::unknown);
  CHECK_FALSE(all_classes(s5, b).complete);
}

TEST_CASE("class of y in the degree-52 group")
{
  Budget b;
  auto t = testing::triple_of(testing::load("aut_psl33_52"));
  auto g = testing::group_of(t);
  auto c = class_orbit(g, t.y, b);
  CHECK(g.order() % static_cast<unsigned long>(c.size) == 0);
  CHECK(c.members->size() == c.size);

  std::mt19937_64 rng(4);
  auto h = g.random_element(rng);
  auto d = class_orbit(g, conjugate(t.y, h), b);
  CHECK(d.size == c.size);
  CHECK(*d.members == *c.members);
}

TEST_CASE("all_classes of S3 and S4")
{
  Budget b;
  auto t3 = all_classes(sym(3), b);
  REQUIRE(t3.complete);
  std::vector<std::uint64_t> sizes;
  for (auto const &c : t3.classes)
    sizes.push_back(c.size);
  CHECK(sizes == std::vector<std::uint64_t>{1, 3, 2});

  auto s4 = sym(4);
  auto t4 = all_classes(s4, b);
  REQUIRE(t4.complete);
  std::multiset<std::size_t> lib, brute;
  for (auto const &c : t4.classes)
    lib.insert(c.size);
  std::vector<oracle::Perm> gens;
  for (auto const &g : s4.generators())
    gens.push_back({g.images().begin(), g.images().end()});
  for (auto const &c : oracle::classes(*oracle::closure(gens, 100)))
    brute.insert(c.size());
  CHECK(lib == brute);
  CHECK(t4.classes.size() == 5);
}

TEST_CASE("class table of the PGL(2,11) fixture group is complete")
{
  Budget b;
  auto g = testing::group_of(testing::triple_of(testing::load("pgl211_55a")));
  auto table = all_classes(g, b);
  REQUIRE(table.complete);
  std::uint64_t total = 0;
  for (auto const &c : table.classes)
    total += c.size;
  CHECK(total == 1320);
  // representatives pairwise non-conjugate
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    CHECK(table.class_of(table.classes[i].representative) == i);
}

TEST_CASE("is_conjugate")
{
  Budget b;
  auto s5 = sym(5);
  std::mt19937_64 rng(2);
  auto a = parse_permutation("(1,2,3)(4,5)", 5);
  auto g0 = s5.random_element(rng);
  CHECK(is_conjugate(s5, a, conjugate(a, g0), b) == Tristate::yes);
  auto s3 = sym(3);
  CHECK(is_conjugate(s3, parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3), b) ==
        Tristate::no);
  PermGroup c4({parse_permutation("(1,2,3,4)", 4)});
  CHECK(is_conjugate(c4, parse_permutation("(1,2,3,4)", 4), parse_permutation("(1,4,3,2)", 4),
                     b) == Tristate::no);
  CHECK_THROWS_AS(is_conjugate(c4, parse_permutation("(1,2)", 4), Permutation::identity(4), b),
                  std::invalid_argument);
}

TEST_CASE("is_rational_class")
{
  Budget b;
  auto s5 = sym(5);
  CHECK(is_rational_class(s5, parse_permutation("(1,2)", 5), b) == Tristate::yes);
  CHECK(is_rational_class(s5, parse_permutation("(1,2,3,4,5)", 5), b) == Tristate::yes);
  PermGroup a3({parse_permutation("(1,2,3)", 3)});
  CHECK(is_rational_class(a3, parse_permutation("(1,2,3)", 3), b) == Tristate::no);
  // A5: the 5-cycles split into two classes that are not rational
  PermGroup a5({parse_permutation("(1,2,3)", 5), parse_permutation("(1,2,3,4,5)", 5)});
  CHECK(is_rational_class(a5, parse_permutation("(1,2,3,4,5)", 5), b) == Tristate::no);

  for (char const *name : {"pgl211_55a", "pgl211_55b"}) {
    auto t = testing::triple_of(testing::load(name));
    auto g = testing::group_of(t);
    for (auto const *m : t.members())
      CHECK(is_rational_class(g, *m, b) == Tristate::yes);
  }
}

TEST_CASE("exists_cycle_type")
{
  Budget b;
  auto t = testing::triple_of(testing::load("pgl211_55a"));
  auto pgl = testing::group_of(t);
  auto psl = derived_subgroup(pgl);
  REQUIRE(psl.order() == 660);
  CHECK(exists_cycle_type(psl, CycleType::parse("2^25.1^5"), b) == Tristate::no);
  CHECK(exists_cycle_type(pgl, CycleType::parse("2^25.1^5"), b) == Tristate::yes);
  CHECK(exists_cycle_type(psl, CycleType::parse("1^55"), b) == Tristate::yes);
  CHECK_THROWS_AS(exists_cycle_type(psl, CycleType::parse("1^54"), b), DegreeMismatch);

  auto g85 = testing::group_of(testing::triple_of(testing::load("psp44_2_85")));
  CHECK(exists_cycle_type(g85, CycleType::parse("15^5.5^2"), b) == Tristate::yes);

  // no witness and no complete table: unknown, never no
  Budget tiny;
  tiny.max_class_size = 10;
  CHECK(exists_cycle_type(psl, CycleType::parse("2^25.1^5"), tiny) == Tristate::unknown);
}

TEST_CASE("rationality does not depend on the representative")
{
  Budget b;
  auto s6 = sym(6);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    auto a = s6.random_element(rng);
    auto c = conjugate(a, s6.random_element(rng));
    CHECK(is_rational_class(s6, a, b) == is_rational_class(s6, c, b));
  }
}
