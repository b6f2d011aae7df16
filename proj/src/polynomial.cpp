#include "belyicert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "belyicert/errors.hpp"

namespace belyicert
{

// IntegerPolynomial ---------------------------------------------------------

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coefficients)
: _coeffs(std::move(coefficients))
{ normalize(); }

IntegerPolynomial IntegerPolynomial::constant(mpz_class c)
{ return IntegerPolynomial(std::vector<mpz_class>{std::move(c)}); }

IntegerPolynomial IntegerPolynomial::monomial(mpz_class c, std::size_t k)
{
  std::vector<mpz_class> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return IntegerPolynomial(std::move(coeffs));
}

void IntegerPolynomial::normalize()
{
  while (!_coeffs.empty() && _coeffs.back() == 0)
    _coeffs.pop_back();
}

mpz_class IntegerPolynomial::coefficient(std::size_t k) const
{ return k < _coeffs.size() ? _coeffs[k] : mpz_class(0); }

mpz_class const &IntegerPolynomial::leading() const
{
  if (_coeffs.empty())
    throw std::domain_error("zero polynomial has no leading coefficient");
  return _coeffs.back();
}

mpz_class IntegerPolynomial::content() const
{
  mpz_class g = 0;
  for (auto const &c : _coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const
{
  if (is_zero())
    return {};
  mpz_class c = content();
  if (leading() < 0)
    c = -c;
  std::vector<mpz_class> coeffs(_coeffs.size());
  for (std::size_t i = 0; i < _coeffs.size(); ++i)
    mpz_divexact(coeffs[i].get_mpz_t(), _coeffs[i].get_mpz_t(), c.get_mpz_t());
  return IntegerPolynomial(std::move(coeffs));
}

std::string IntegerPolynomial::to_string() const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = _coeffs.size(); k-- > 0;) {
    mpz_class const &c = _coeffs[k];
    if (c == 0)
      continue;
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1)
      os << mag;
    if (k >= 1)
      os << 'X';
    if (k >= 2)
      os << '^' << k;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, IntegerPolynomial const &p)
{ return os << p.to_string(); }

// Arithmetic ----------------------------------------------------------------

IntegerPolynomial operator+(IntegerPolynomial const &a, IntegerPolynomial const &b)
{
  auto const &x = a.coefficients();
  auto const &y = b.coefficients();
  std::vector<mpz_class> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < x.size())
      out[i] += x[i];
    if (i < y.size())
      out[i] += y[i];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator-(IntegerPolynomial const &a)
{
  std::vector<mpz_class> out = a.coefficients();
  for (auto &c : out)
    c = -c;
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator-(IntegerPolynomial const &a, IntegerPolynomial const &b)
{ return a + (-b); }

IntegerPolynomial operator*(IntegerPolynomial const &a, IntegerPolynomial const &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  auto const &x = a.coefficients();
  auto const &y = b.coefficients();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(mpz_class const &c, IntegerPolynomial const &a)
{
  std::vector<mpz_class> out = a.coefficients();
  for (auto &v : out)
    v *= c;
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial power(IntegerPolynomial const &a, std::size_t k)
{
  IntegerPolynomial result = IntegerPolynomial::constant(1);
  IntegerPolynomial base = a;
  while (k) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

IntegerPolynomial derivative(IntegerPolynomial const &a)
{
  auto const &x = a.coefficients();
  if (x.size() <= 1)
    return {};
  std::vector<mpz_class> out(x.size() - 1);
  for (std::size_t k = 1; k < x.size(); ++k)
    out[k - 1] = x[k] * static_cast<unsigned long>(k);
  return IntegerPolynomial(std::move(out));
}

mpq_class evaluate(IntegerPolynomial const &a, mpq_class const &x)
{
  mpq_class acc = 0;
  auto const &c = a.coefficients();
  for (std::size_t k = c.size(); k-- > 0;)
    acc = acc * x + mpq_class(c[k]);
  acc.canonicalize();
  return acc;
}

std::optional<IntegerPolynomial> exact_divide(IntegerPolynomial const &a,
                                              IntegerPolynomial const &b)
{
  if (b.is_zero())
    throw std::domain_error("division by the zero polynomial");
  if (a.is_zero())
    return IntegerPolynomial();
  if (a.degree() < b.degree())
    return std::nullopt;

  std::vector<mpz_class> rem = a.coefficients();
  auto const &d = b.coefficients();
  std::size_t db = d.size() - 1;
  mpz_class const &lc = d.back();
  std::vector<mpz_class> quot(rem.size() - db);
  mpz_class q, r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class &top = rem[k + db];
    if (top == 0)
      continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0)
      return std::nullopt;
    for (std::size_t i = 0; i <= db; ++i)
      mpz_submul(rem[k + i].get_mpz_t(), q.get_mpz_t(), d[i].get_mpz_t());
    quot[k] = q;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0)
      return std::nullopt;
  return IntegerPolynomial(std::move(quot));
}

IntegerPolynomial pseudo_remainder(IntegerPolynomial const &a,
                                   IntegerPolynomial const &b)
{
  if (b.is_zero())
    throw std::domain_error("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree())
    return a;
  std::vector<mpz_class> rem = a.coefficients();
  auto const &d = b.coefficients();
  std::size_t db = d.size() - 1;
  mpz_class const &lc = d.back();
  long steps_left = a.degree() - b.degree() + 1;

  while (!rem.empty() && rem.size() - 1 >= db) {
    std::size_t shift = rem.size() - 1 - db;
    mpz_class top = rem.back();
    for (auto &c : rem)
      c *= lc;
    for (std::size_t i = 0; i <= db; ++i)
      mpz_submul(rem[shift + i].get_mpz_t(), top.get_mpz_t(), d[i].get_mpz_t());
    --steps_left;
    while (!rem.empty() && rem.back() == 0)
      rem.pop_back();
  }
  IntegerPolynomial r(std::move(rem));
  if (steps_left > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps_left));
    r = scale * r;
  }
  return r;
}

// GCD -----------------------------------------------------------------------

namespace
{

using Residues = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Primes below 2^31, descending; products of two residues fit in 64 bits.
class PrimeSource
{
public:
  std::uint64_t next()
  {
    do
      _candidate -= 2;
    while (!is_prime(_candidate));
    return _candidate;
  }

private:
  std::uint64_t _candidate = (1ULL << 31) + 1;
};

void trim(Residues &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Residues reduce(IntegerPolynomial const &a, std::uint64_t p)
{
  Residues r(a.coefficients().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mpz_fdiv_ui(a.coefficients()[i].get_mpz_t(), p);
  trim(r);
  return r;
}

// a mod b over F_p; b nonzero
void remainder_mod(Residues &a, Residues const &b, std::uint64_t p)
{
  std::uint64_t inv = pow_mod(b.back(), p - 2, p);
  std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    std::uint64_t factor = a.back() * inv % p;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    trim(a);
  }
}

Residues monic_gcd_mod(Residues a, Residues b, std::uint64_t p)
{
  while (!b.empty()) {
    remainder_mod(a, b, p);
    std::swap(a, b);
  }
  if (a.empty())
    return a;
  std::uint64_t inv = pow_mod(a.back(), p - 2, p);
  for (auto &c : a)
    c = c * inv % p;
  return a;
}

IntegerPolynomial modular_gcd_primitive(IntegerPolynomial const &a,
                                        IntegerPolynomial const &b)
{
  // a, b primitive with positive degree
  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.leading().get_mpz_t(), b.leading().get_mpz_t());

  PrimeSource primes;
  long best_degree = std::min(a.degree(), b.degree()) + 1;
  std::vector<mpz_class> acc;
  mpz_class modulus = 1;
  IntegerPolynomial previous;

  for (;;) {
    std::uint64_t p = primes.next();
    if (mpz_fdiv_ui(a.leading().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(b.leading().get_mpz_t(), p) == 0)
      continue;

    Residues g = monic_gcd_mod(reduce(a, p), reduce(b, p), p);
    long deg = static_cast<long>(g.size()) - 1;
    if (deg == 0)
      return IntegerPolynomial::constant(1);
    if (deg > best_degree)
      continue; // unlucky prime
    std::uint64_t scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto &c : g)
      c = c * scale % p;

    if (deg < best_degree) {
      best_degree = deg;
      acc.assign(g.size(), mpz_class(0));
      for (std::size_t i = 0; i < g.size(); ++i)
        acc[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      previous = IntegerPolynomial();
      continue;
    }

    // CRT: acc + modulus * t with t = (g - acc) / modulus mod p
    std::uint64_t minv = pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      std::uint64_t t = (g[i] + p - cur) % p * minv % p;
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    modulus *= static_cast<unsigned long>(p);

    mpz_class half = modulus / 2;
    std::vector<mpz_class> lifted = acc;
    for (auto &c : lifted)
      if (c > half)
        c -= modulus;
    IntegerPolynomial candidate = IntegerPolynomial(std::move(lifted)).primitive_part();
    if (candidate == previous && exact_divide(a, candidate) && exact_divide(b, candidate))
      return candidate;
    previous = std::move(candidate);
  }
}

} // namespace

IntegerPolynomial poly_gcd(IntegerPolynomial const &a, IntegerPolynomial const &b)
{
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero())
    return b.primitive_part();
  if (b.is_zero())
    return a.primitive_part();
  if (a.degree() == 0 || b.degree() == 0)
    return IntegerPolynomial::constant(1);
  return modular_gcd_primitive(a.primitive_part(), b.primitive_part());
}

IntegerPolynomial subresultant_gcd(IntegerPolynomial const &a,
                                   IntegerPolynomial const &b)
{
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  IntegerPolynomial u = a.primitive_part();
  IntegerPolynomial v = b.primitive_part();
  if (u.degree() < v.degree())
    std::swap(u, v);
  if (v.is_zero())
    return u;

  mpz_class g = 1, h = 1;
  for (;;) {
    long delta = u.degree() - v.degree();
    IntegerPolynomial r = pseudo_remainder(u, v);
    if (r.is_zero())
      return v.primitive_part();
    if (r.degree() == 0)
      return IntegerPolynomial::constant(1);

    mpz_class hpow;
    mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    mpz_class divisor = g * hpow;
    std::vector<mpz_class> coeffs = r.coefficients();
    for (auto &c : coeffs)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());

    u = std::move(v);
    v = IntegerPolynomial(std::move(coeffs));
    g = u.leading();
    // h = g^delta / h^(delta - 1)
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta >= 1) {
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
      h = num * h;
    }
  }
}

// Squarefree decomposition --------------------------------------------------

SquarefreeDecomposition squarefree_decomposition(IntegerPolynomial const &a)
{
  if (a.is_zero())
    throw std::domain_error("squarefree decomposition of zero");

  SquarefreeDecomposition result;
  IntegerPolynomial f = a.primitive_part();
  result.unit = a.content();
  if (a.leading() < 0)
    result.unit = -result.unit;
  if (f.degree() == 0)
    return result;

  auto divide = [](IntegerPolynomial const &x, IntegerPolynomial const &y) {
    auto q = exact_divide(x, y);
    if (!q)
      throw IntegrityError("inexact division in squarefree decomposition");
    return *q;
  };

  IntegerPolynomial df = derivative(f);
  IntegerPolynomial g = poly_gcd(f, df);
  IntegerPolynomial b = divide(f, g);
  IntegerPolynomial c = divide(df, g);
  IntegerPolynomial d = c - derivative(b);

  for (std::size_t i = 1; b.degree() > 0; ++i) {
    IntegerPolynomial part = poly_gcd(b, d);
    b = divide(b, part);
    c = divide(d, part);
    d = c - derivative(b);
    if (part.degree() > 0)
      result.parts.emplace_back(std::move(part), i);
  }
  return result;
}

std::size_t MultiplicityMultiset::total() const
{
  std::size_t t = 0;
  for (auto [mult, roots] : entries)
    t += mult * roots;
  return t;
}

CycleType MultiplicityMultiset::as_partition() const
{
  std::vector<std::size_t> parts;
  for (auto [mult, roots] : entries)
    parts.insert(parts.end(), roots, mult);
  return CycleType(std::move(parts));
}

MultiplicityMultiset multiplicity_multiset(IntegerPolynomial const &a)
{
  MultiplicityMultiset m;
  for (auto const &[part, mult] : squarefree_decomposition(a).parts)
    m.entries.emplace_back(mult, static_cast<std::size_t>(part.degree()));
  return m;
}

// Factored form -------------------------------------------------------------

std::size_t FactoredPolynomial::total_degree() const
{
  std::size_t d = 0;
  for (auto const &[poly, e] : factors)
    d += static_cast<std::size_t>(poly.degree()) * e;
  return d;
}

namespace
{

class FactoredParser
{
public:
  explicit FactoredParser(std::string_view text)
  : _text(text)
  {}

  FactoredPolynomial parse()
  {
    FactoredPolynomial result;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');

    do
      term(result);
    while (accept_product());

    skip_space();
    if (_pos != _text.size())
      fail("unexpected input");
    if (negate)
      result.constant = -result.constant;
    return result;
  }

private:
  [[noreturn]] void fail(std::string const &what)
  { throw ParseError(what, _pos); }

  void skip_space()
  {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool peek(char c)
  {
    skip_space();
    return _pos < _text.size() && _text[_pos] == c;
  }

  bool accept(char c)
  {
    if (!peek(c))
      return false;
    ++_pos;
    return true;
  }

  bool accept_product()
  {
    if (accept('*'))
      return true;
    skip_space();
    // U+00B7 MIDDLE DOT
    if (_text.substr(_pos, 2) == "\xC2\xB7") {
      _pos += 2;
      return true;
    }
    return false;
  }

  bool peek_digit()
  {
    skip_space();
    return _pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos]));
  }

  bool peek_variable()
  {
    skip_space();
    return _pos < _text.size() && (_text[_pos] == 'X' || _text[_pos] == 'x');
  }

  mpz_class integer()
  {
    skip_space();
    std::size_t start = _pos;
    while (_pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      fail("expected an integer");
    if (_pos < _text.size() && (_text[_pos] == '.' || _text[_pos] == '/'))
      fail("coefficients must be integers");
    return mpz_class(std::string(_text.substr(start, _pos - start)));
  }

  std::size_t exponent()
  {
    if (!accept('^'))
      return 1;
    // tolerate TeX-style braces: X^{12}
    bool brace = accept('{');
    mpz_class e = integer();
    if (brace && !accept('}'))
      fail("expected '}'");
    if (!e.fits_ulong_p() || e > 100000)
      fail("exponent too large");
    return e.get_ui();
  }

  // mono := int | int? "*"? "X" ("^" uint)?
  IntegerPolynomial monomial()
  {
    mpz_class coeff = 1;
    bool has_coeff = false;
    if (peek_digit()) {
      coeff = integer();
      has_coeff = true;
      std::size_t save = _pos;
      if (accept('*') && !peek_variable())
        _pos = save; // the '*' belongs to the enclosing product
    }
    if (peek_variable()) {
      ++_pos;
      return IntegerPolynomial::monomial(coeff, exponent());
    }
    if (!has_coeff)
      fail("expected a coefficient or X");
    return IntegerPolynomial::constant(coeff);
  }

  IntegerPolynomial polynomial()
  {
    bool negative = accept('-');
    if (!negative)
      accept('+');
    IntegerPolynomial sum = monomial();
    if (negative)
      sum = -sum;
    for (;;) {
      if (accept('+'))
        sum = sum + monomial();
      else if (accept('-'))
        sum = sum - monomial();
      else
        return sum;
    }
  }

  void add_factor(FactoredPolynomial &out, IntegerPolynomial poly, std::size_t e,
                  std::size_t at)
  {
    if (poly.is_zero())
      throw ParseError("zero factor", at);
    if (poly.degree() == 0) {
      mpz_class c;
      mpz_pow_ui(c.get_mpz_t(), poly.leading().get_mpz_t(), e);
      out.constant *= c;
      return;
    }
    out.factors.emplace_back(std::move(poly), e);
  }

  void term(FactoredPolynomial &out)
  {
    skip_space();
    std::size_t at = _pos;
    if (accept('(')) {
      IntegerPolynomial inner = polynomial();
      if (!accept(')'))
        fail("expected ')'");
      add_factor(out, std::move(inner), exponent(), at);
      return;
    }
    if (peek_digit()) {
      mpz_class c = integer();
      if (peek_variable())
        fail("write polynomial factors in parentheses");
      add_factor(out, IntegerPolynomial::constant(c), exponent(), at);
      return;
    }
    if (peek_variable()) {
      ++_pos;
      std::size_t k = exponent();
      // bare X^k is the factor X with multiplicity k
      add_factor(out, IntegerPolynomial::monomial(1, 1), k, at);
      return;
    }
    fail("expected a factor");
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

FactoredPolynomial parse_factored(std::string_view text)
{ return FactoredParser(text).parse(); }

IntegerPolynomial expand(FactoredPolynomial const &f)
{
  IntegerPolynomial result = IntegerPolynomial::constant(f.constant);
  for (auto const &[poly, e] : f.factors)
    result = result * power(poly, e);
  return result;
}

} // namespace belyicert
