#include "belyicert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "belyicert/errors.hpp"

namespace belyicert
{

namespace
{

void check_same_degree(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("permutation degrees differ: " +
                         std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = b / g;
  if (a > std::numeric_limits<std::uint64_t>::max() / q)
    throw std::overflow_error("element order exceeds 64 bits");
  return a * q;
}

class Scanner
{
public:
  explicit Scanner(std::string_view text)
  : _text(text)
  {}

  void skip_space()
  {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool at_end()
  {
    skip_space();
    return _pos == _text.size();
  }

  bool accept(char c)
  {
    skip_space();
    if (_pos < _text.size() && _text[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", _pos);
  }

  std::size_t integer()
  {
    skip_space();
    std::size_t value = 0;
    auto first = _text.data() + _pos;
    auto last = _text.data() + _text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
      throw ParseError("expected a positive integer", _pos);
    _pos += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::size_t position() const
  { return _pos; }

private:
  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

Permutation Permutation::identity(std::size_t n)
{
  if (n > max_degree)
    throw std::invalid_argument("degree too large");
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  if (images.size() > max_degree)
    throw std::invalid_argument("degree too large");
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw std::invalid_argument("image table is not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::vector<std::size_t> const &images)
{
  std::vector<Point> zero_based;
  zero_based.reserve(images.size());
  for (std::size_t p : images) {
    if (p == 0 || p > images.size())
      throw std::invalid_argument("image out of range");
    zero_based.push_back(static_cast<Point>(p - 1));
  }
  return from_images(std::move(zero_based));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

CycleType::CycleType(std::vector<std::size_t> parts)
: _parts(std::move(parts))
{
  for (std::size_t part : _parts) {
    if (part == 0)
      throw std::invalid_argument("cycle type parts must be positive");
    _degree += part;
  }
  std::sort(_parts.begin(), _parts.end(), std::greater<>());
}

CycleType CycleType::parse(std::string_view text)
{
  Scanner scan(text);
  std::vector<std::size_t> parts;
  do {
    std::size_t base = scan.integer();
    std::size_t count = 1;
    if (scan.accept('^'))
      count = scan.integer();
    if (base == 0)
      throw ParseError("cycle length must be positive", scan.position());
    parts.insert(parts.end(), count, base);
  } while (scan.accept('.'));
  if (!scan.at_end())
    throw ParseError("unexpected trailing input in cycle type", scan.position());
  return CycleType(std::move(parts));
}

std::string CycleType::to_string() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < _parts.size();) {
    std::size_t j = i;
    while (j < _parts.size() && _parts[j] == _parts[i])
      ++j;
    if (i != 0)
      os << '.';
    os << _parts[i] << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, CycleType const &t)
{ return os << t.to_string(); }

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{ return os << to_cycle_string(p); }

Permutation parse_permutation(std::string_view text, std::size_t n)
{
  if (n == 0 || n > max_degree)
    throw std::invalid_argument("degree must lie in 1.." +
                                std::to_string(max_degree));

  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);

  Scanner scan(text);
  while (!scan.at_end()) {
    std::size_t open_pos = scan.position();
    scan.expect('(');
    std::vector<Point> cycle;
    do {
      std::size_t at = scan.position();
      std::size_t point = scan.integer();
      if (point == 0 || point > n)
        throw ParseError("point " + std::to_string(point) +
                         " outside 1.." + std::to_string(n), at);
      if (used[point - 1])
        throw ParseError("point " + std::to_string(point) + " repeated", at);
      used[point - 1] = true;
      cycle.push_back(static_cast<Point>(point - 1));
    } while (scan.accept(','));
    scan.expect(')');
    if (cycle.size() < 2)
      throw ParseError("a cycle needs at least two points", open_pos);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::string to_cycle_string(Permutation const &a)
{
  auto cs = cycles(a);
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? ", " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

Permutation compose(Permutation const &a, Permutation const &b)
{
  check_same_degree(a, b);
  std::vector<Point> out(a.degree());
  detail::compose_into(a._images, b._images, out);
  return Permutation(std::move(out));
}

Permutation inverse(Permutation const &a)
{
  std::vector<Point> out(a.degree());
  detail::invert_into(a._images, out);
  return Permutation(std::move(out));
}

Permutation conjugate(Permutation const &a, Permutation const &g)
{
  check_same_degree(a, g);
  std::vector<Point> out(a.degree());
  detail::conjugate_into(a._images, g._images, out);
  return Permutation(std::move(out));
}

Permutation power(Permutation const &a, long long k)
{
  // Walk each cycle once; i maps to the point k steps ahead on its cycle.
  std::size_t n = a.degree();
  std::vector<Point> out(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start])
      continue;
    cycle.clear();
    for (Point p = static_cast<Point>(start); !done[p]; p = a[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    long long len = static_cast<long long>(cycle.size());
    long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i)
      out[cycle[static_cast<std::size_t>(i)]] =
        cycle[static_cast<std::size_t>((i + shift) % len)];
  }
  return Permutation::from_images(std::move(out));
}

std::vector<std::vector<Point>> cycles(Permutation const &a)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(a.degree(), false);
  for (std::size_t start = 0; start < a.degree(); ++start) {
    if (done[start] || a[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !done[p]; p = a[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType cycle_type(Permutation const &a)
{
  std::vector<std::size_t> parts;
  std::vector<bool> done(a.degree(), false);
  for (std::size_t start = 0; start < a.degree(); ++start) {
    if (done[start])
      continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(start); !done[p]; p = a[p]) {
      done[p] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::size_t ramification_index(Permutation const &a)
{ return a.degree() - cycle_type(a).cycle_count(); }

std::uint64_t element_order(Permutation const &a)
{
  std::uint64_t order = 1;
  CycleType const t = cycle_type(a);
  auto const &parts = t.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i == 0 || parts[i] != parts[i - 1])
      order = checked_lcm(order, parts[i]);
  return order;
}

} // namespace belyicert
