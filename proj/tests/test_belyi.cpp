#include <doctest.h>

#include "belyicert/belyi.hpp"
#include "fixtures.hpp"

using namespace belyicert;

namespace
{

std::optional<FactoredPolynomial> opt(std::optional<std::string> const &s)
{
  if (!s)
    return std::nullopt;
  return parse_factored(*s);
}

} // namespace

TEST_CASE("every fixture map has three branch points and matches its triple")
{
  for (auto const &name : testing::fixture_names) {
    CAPTURE(name);
    auto f = testing::load(name);
    auto m = load_belyi(opt(f.p_text), opt(f.q_text), opt(f.r_text), f.degree);
    CHECK(m.p - m.q - m.r == IntegerPolynomial());
    CHECK(poly_gcd(m.p, m.q).degree() == 0);
    auto profile = ramification_profile(m);
    for (auto const *fib : profile.fibers())
      CHECK(fib->partition.degree() == f.degree);
    CHECK(certify_three_branch_points(profile, f.degree));
    auto match = match_profile_to_triple(profile, testing::triple_of(f));
    CHECK(match.matched());
    CHECK_FALSE(match.ambiguous());
  }
}

TEST_CASE("degree one and two maps")
{
  // f = X: p = X, q = 1, r = X - 1
  auto m1 = load_belyi(parse_factored("X"), parse_factored("1"), std::nullopt, 1);
  CHECK(m1.derived == BelyiPart::r);
  CHECK(m1.r == expand(parse_factored("(X - 1)")));
  auto pr1 = ramification_profile(m1);
  CHECK(pr1.over_inf.at_infinity == 1);
  CHECK(certify_three_branch_points(pr1, 1));

  // f = X^2 / (2X - 1): r = (X - 1)^2
  auto m2 = load_belyi(parse_factored("X^2"), std::nullopt, parse_factored("(X - 1)^2"), 2);
  CHECK(m2.q == expand(parse_factored("(2X - 1)")));
  auto pr2 = ramification_profile(m2);
  CHECK(pr2.over0.partition == CycleType::parse("2"));
  CHECK(pr2.over1.partition == CycleType::parse("2"));
  CHECK(pr2.over_inf.partition == CycleType::parse("1^2"));
  CHECK(pr2.over_inf.at_infinity == 1);
  CHECK(certify_three_branch_points(pr2, 2));

  auto t = close_triple(parse_permutation("(1,2)", 2), parse_permutation("(1,2)", 2));
  auto match = match_profile_to_triple(pr2, t);
  CHECK(match.matched());
  CHECK(match.assignments.size() == 2);
  CHECK(match.ambiguous());
}

TEST_CASE("load_belyi rejects bad data")
{
  auto x2 = parse_factored("X^2");
  auto sq = parse_factored("(X - 1)^2");
  try {
    load_belyi(x2, parse_factored("(2X + 1)"), sq, 2);
    FAIL("no throw");
  } catch (BelyiIdentityError const &e) {
    CHECK(e.difference() == IntegerPolynomial::constant(-2));
  }
  CHECK_THROWS_AS(load_belyi(x2, std::nullopt, std::nullopt, 2), std::invalid_argument);
  CHECK_THROWS_AS(load_belyi(x2, std::nullopt, sq, 3), BelyiDataError);
  // common factor X: p = X^2, q = X
  CHECK_THROWS_AS(load_belyi(x2, parse_factored("X"), std::nullopt, 2), BelyiDataError);
  CHECK_THROWS_AS(load_belyi(x2, parse_factored("X^2"), std::nullopt, 2), BelyiDataError);
}

TEST_CASE("a non-Belyi map is not certified")
{
  // f = X^3 - 3X: critical values are 2 and -2, so 0 and 1 are not branch points
  auto m = load_belyi(parse_factored("(X^3 - 3X)"), parse_factored("1"), std::nullopt, 3);
  auto pr = ramification_profile(m);
  CHECK_FALSE(certify_three_branch_points(pr, 3));
}

TEST_CASE("profile mismatch")
{
  auto f = testing::load("aut_psl33_52");
  auto m = load_belyi(opt(f.p_text), opt(f.q_text), opt(f.r_text), f.degree);
  auto pr = ramification_profile(m);
  std::array<CycleType, 3> wrong{CycleType::parse("8^5.4^3"), CycleType::parse("2^24.1^4"),
                                 CycleType::parse("4^10.2^4.1^4")};
  CHECK(match_profile_to_triple(pr, wrong).matched());
  wrong[2] = CycleType::parse("4^11.2^3.1^2");
  CHECK_FALSE(match_profile_to_triple(pr, wrong).matched());
}
