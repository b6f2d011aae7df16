#ifndef BELYICERT_POLYNOMIAL_HPP
#define BELYICERT_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "belyicert/permutation.hpp"

namespace belyicert
{

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntegerPolynomial
{
public:
  IntegerPolynomial() = default;

  /// Trailing zero coefficients are dropped.
  explicit IntegerPolynomial(std::vector<mpz_class> coefficients);

  static IntegerPolynomial constant(mpz_class c);
  static IntegerPolynomial monomial(mpz_class c, std::size_t k);

  /// -1 for the zero polynomial.
  long degree() const
  { return static_cast<long>(_coeffs.size()) - 1; }

  bool is_zero() const
  { return _coeffs.empty(); }

  std::vector<mpz_class> const &coefficients() const
  { return _coeffs; }

  /// Zero beyond the degree.
  mpz_class coefficient(std::size_t k) const;

  /// Throws std::domain_error on the zero polynomial.
  mpz_class const &leading() const;

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;

  /// Divided by the content, leading coefficient made positive.
  IntegerPolynomial primitive_part() const;

  std::string to_string() const;

  bool operator==(IntegerPolynomial const &other) const = default;

private:
  void normalize();

  std::vector<mpz_class> _coeffs;
};

std::ostream &operator<<(std::ostream &os, IntegerPolynomial const &p);

IntegerPolynomial operator+(IntegerPolynomial const &a, IntegerPolynomial const &b);
IntegerPolynomial operator-(IntegerPolynomial const &a, IntegerPolynomial const &b);
IntegerPolynomial operator-(IntegerPolynomial const &a);
IntegerPolynomial operator*(IntegerPolynomial const &a, IntegerPolynomial const &b);
IntegerPolynomial operator*(mpz_class const &c, IntegerPolynomial const &a);

IntegerPolynomial power(IntegerPolynomial const &a, std::size_t k);
IntegerPolynomial derivative(IntegerPolynomial const &a);
mpq_class evaluate(IntegerPolynomial const &a, mpq_class const &x);

/// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[X].
/// Throws std::domain_error when b is zero.
std::optional<IntegerPolynomial> exact_divide(IntegerPolynomial const &a,
                                              IntegerPolynomial const &b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntegerPolynomial pseudo_remainder(IntegerPolynomial const &a,
                                   IntegerPolynomial const &b);

/// Primitive gcd with positive leading coefficient (1 when coprime).
/// Multi-modular: gcds modulo word-size primes are combined by CRT until the
/// lifted candidate divides both inputs. Throws std::invalid_argument when
/// both inputs are zero.
IntegerPolynomial poly_gcd(IntegerPolynomial const &a, IntegerPolynomial const &b);

/// Same contract as poly_gcd, computed by the subresultant remainder
/// sequence. Slower; kept as an independent route.
IntegerPolynomial subresultant_gcd(IntegerPolynomial const &a,
                                   IntegerPolynomial const &b);

/// a = unit * prod parts[i].first ^ parts[i].second with each part primitive,
/// squarefree, positive-leading and pairwise coprime. Parts are listed by
/// increasing multiplicity; constant parts are omitted.
struct SquarefreeDecomposition
{
  mpz_class unit;
  std::vector<std::pair<IntegerPolynomial, std::size_t>> parts;
};

/// Yun's algorithm. Throws std::domain_error on the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(IntegerPolynomial const &a);

/// Root multiplicities of a polynomial: `roots` distinct roots of each
/// multiplicity. total() equals the degree.
struct MultiplicityMultiset
{
  std::vector<std::pair<std::size_t, std::size_t>> entries; ///< (multiplicity, roots)

  std::size_t total() const;

  /// The multiplicities as a partition of total(), e.g. 4^10.2^4.1^4.
  CycleType as_partition() const;
};

MultiplicityMultiset multiplicity_multiset(IntegerPolynomial const &a);

/// A product as printed: an integer constant times powers of polynomials.
struct FactoredPolynomial
{
  mpz_class constant = 1;
  std::vector<std::pair<IntegerPolynomial, std::size_t>> factors;

  /// sum of exponent * degree over the factors
  std::size_t total_degree() const;
};

/// Grammar (whitespace-insensitive, `*` or `·` as product sign):
///
///   expr := sign? term ("*" term)*
///   term := int ("^" uint)? | "(" poly ")" ("^" uint)? | "X" ("^" uint)?
///   poly := sign? mono (("+" | "-") mono)*
///   mono := int | int? "*"? "X" ("^" uint)?
///
/// A leading sign applies after exponentiation, so "-2^4" is -16.
/// Throws ParseError on syntax errors, zero factors and non-integer
/// coefficients.
FactoredPolynomial parse_factored(std::string_view text);

IntegerPolynomial expand(FactoredPolynomial const &f);

} // namespace belyicert

#endif // BELYICERT_POLYNOMIAL_HPP
