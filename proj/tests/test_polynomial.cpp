#include <doctest.h>

#include "belyicert/errors.hpp"
#include "belyicert/polynomial.hpp"

using namespace belyicert;

namespace
{

IntegerPolynomial P(std::initializer_list<long> c)
{
  std::vector<mpz_class> v;
  for (long x : c)
    v.emplace_back(x);
  return IntegerPolynomial(v);
}

IntegerPolynomial E(char const *text)
{ return expand(parse_factored(text)); }

} // namespace

TEST_CASE("basic arithmetic")
{
  auto a = P({1, 1});
  CHECK(a * a == P({1, 2, 1}));
  CHECK(a - a == IntegerPolynomial());
  CHECK(IntegerPolynomial().degree() == -1);
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(power(a, 3) == P({1, 3, 3, 1}));
  CHECK(derivative(P({2, -1, 0, 3})) == P({-1, 0, 9}));
  CHECK(evaluate(P({1, 0, 1}), mpq_class(5, 4)) == mpq_class(41, 16));
  CHECK(P({6, 0, 9}).content() == 3);
  CHECK(P({-2, 0, -4}).primitive_part() == P({1, 0, 2}));
  CHECK_THROWS_AS(IntegerPolynomial().leading(), std::domain_error);
}

TEST_CASE("exact division")
{
  auto q = exact_divide(P({-1, 0, 1}), P({1, 1}));
  REQUIRE(q);
  CHECK(*q == P({-1, 1}));
  CHECK_FALSE(exact_divide(P({1, 0, 1}), P({1, 1})));
  CHECK_FALSE(exact_divide(P({1, 1}), P({0, 2})));
  CHECK_THROWS_AS(exact_divide(P({1}), IntegerPolynomial()), std::domain_error);
}

TEST_CASE("parse_factored")
{
  auto f = parse_factored("-2^4");
  CHECK(f.constant == -16);
  CHECK(f.factors.empty());

  CHECK(E("X") == P({0, 1}));
  CHECK(E("3 * (X + 1)^2") == P({3, 6, 3}));
  CHECK(E("(2X^2 - 8X - 1)") == P({-1, -8, 2}));
  CHECK(E("X^3 · (X - 1)") == P({0, 0, 0, -1, 1}));
  CHECK(E("-(X-1)") == P({1, -1}));

  auto r = parse_factored("3^3 * (X + 1)^8 * (2X^2 - 8X - 1)^8 * (2X^2 + 1)^4 * (6X^2 + 4X + 1)^8");
  CHECK(r.constant == 27);
  CHECK(r.factors.size() == 4);
  CHECK(r.total_degree() == 48);
  CHECK(expand(r).degree() == 48);

  CHECK_THROWS_AS(parse_factored("(X + 1/2)"), ParseError);
  CHECK_THROWS_AS(parse_factored("(0)"), ParseError);
  CHECK_THROWS_AS(parse_factored("X^"), ParseError);
  CHECK_THROWS_AS(parse_factored("(X + 1"), ParseError);
  CHECK_THROWS_AS(parse_factored(""), ParseError);
}

TEST_CASE("gcd")
{
  auto a = P({1, 1}), b = P({-2, 1}), c = P({1, 0, 1});
  CHECK(poly_gcd(a * b, a * c) == a);
  CHECK(poly_gcd(b, c) == P({1}));
  CHECK(poly_gcd(P({6, 6}), P({4, 4})) == a);
  CHECK(poly_gcd(IntegerPolynomial(), P({-3, -1})) == P({3, 1}));
  CHECK(subresultant_gcd(a * a * b, a * c) == a);
  CHECK_THROWS_AS(poly_gcd(IntegerPolynomial(), IntegerPolynomial()), std::invalid_argument);

  // large coefficients
  auto big = P({1, 0, 0, 1}) * E("(123456789X - 987654321)^3");
  CHECK(poly_gcd(big, E("(123456789X - 987654321)^2 * (X + 7)")) ==
        E("(123456789X - 987654321)^2").primitive_part());
}

TEST_CASE("squarefree decomposition of the degree-52 r")
{
  auto r = E("3^3 * (X + 1)^8 * (2X^2 - 8X - 1)^8 * (2X^2 + 1)^4 * (6X^2 + 4X + 1)^8");
  auto d = squarefree_decomposition(r);
  CHECK(d.unit == 27);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].second == 4);
  CHECK(d.parts[0].first == P({1, 0, 2}));
  CHECK(d.parts[1].second == 8);
  CHECK(d.parts[1].first.degree() == 5);
  CHECK(d.parts[1].first ==
        (P({1, 1}) * P({-1, -8, 2}) * P({1, 4, 6})));

  auto m = multiplicity_multiset(r);
  CHECK(m.total() == 48);
  CHECK(m.as_partition() == CycleType::parse("8^5.4^2"));
  CHECK_THROWS_AS(squarefree_decomposition(IntegerPolynomial()), std::domain_error);
}

TEST_CASE("multiplicity multisets")
{
  CHECK(multiplicity_multiset(P({5})).total() == 0);
  CHECK(multiplicity_multiset(P({0, 0, 1})).as_partition() == CycleType::parse("2"));
  auto m = multiplicity_multiset(E("(X - 1)^3 * (X + 1)^3 * X"));
  CHECK(m.as_partition() == CycleType::parse("3^2.1"));
  // repeated irreducible factor written twice
  CHECK(multiplicity_multiset(E("(X^2 + 1) * (X^2 + 1)")).as_partition() ==
        CycleType::parse("2^2"));
}
