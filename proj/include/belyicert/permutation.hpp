#ifndef BELYICERT_PERMUTATION_HPP
#define BELYICERT_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace belyicert
{

/// A point of the permuted set, stored 0-based. All text I/O is 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t max_degree = 65535;

/// A bijection of {0, ..., n-1} stored as its image table.
///
/// Products follow the "left factor acts first" convention throughout the
/// library: compose(a, b) maps i to b(a(i)).
class Permutation
{
public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Builds from 1-based images, e.g. {2, 1, 4, 3}.
  static Permutation from_one_based(std::vector<std::size_t> const &images);

  std::size_t degree() const
  { return _images.size(); }

  Point operator[](std::size_t point) const
  { return _images[point]; }

  std::span<Point const> images() const
  { return _images; }

  bool is_identity() const;

  bool operator==(Permutation const &other) const = default;

private:
  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);
  friend Permutation conjugate(Permutation const &, Permutation const &);

  explicit Permutation(std::vector<Point> images)
  : _images(std::move(images))
  {}

  std::vector<Point> _images;
};

/// Multiset of cycle lengths, fixed points included, sorted descending.
class CycleType
{
public:
  CycleType() = default;

  /// Parts are sorted on construction; zero parts are rejected.
  explicit CycleType(std::vector<std::size_t> parts);

  /// Parses the exponent notation used in cycle-structure tables,
  /// e.g. "8^5.4^3" or "2^25.1^5". A bare "7" means one part of size 7.
  static CycleType parse(std::string_view text);

  std::vector<std::size_t> const &parts() const
  { return _parts; }

  std::size_t degree() const
  { return _degree; }

  std::size_t cycle_count() const
  { return _parts.size(); }

  /// Exponent notation with descending bases, e.g. "4^10.2^4.1^4".
  std::string to_string() const;

  bool operator==(CycleType const &other) const = default;
  auto operator<=>(CycleType const &other) const = default;

private:
  std::vector<std::size_t> _parts;
  std::size_t _degree = 0;
};

std::ostream &operator<<(std::ostream &os, CycleType const &t);
std::ostream &operator<<(std::ostream &os, Permutation const &p);

/// Parses a product of disjoint cycles over 1..n; unlisted points are fixed.
/// Grammar: perm := cycle* ; cycle := "(" int ("," int)+ ")". Whitespace is
/// ignored. Throws ParseError.
Permutation parse_permutation(std::string_view text, std::size_t n);

/// Canonical 1-based cycle notation: each cycle starts at its smallest
/// point, cycles ordered by that point, fixed points omitted. The identity
/// prints as "()".
std::string to_cycle_string(Permutation const &a);

/// a first, then b. Throws DegreeMismatch.
Permutation compose(Permutation const &a, Permutation const &b);

Permutation inverse(Permutation const &a);

/// g^-1 a g, mapping g(i) to g(a(i)). Throws DegreeMismatch.
Permutation conjugate(Permutation const &a, Permutation const &g);

/// a^k for any integer k (negative exponents use the inverse).
Permutation power(Permutation const &a, long long k);

/// Cycles of length at least 2, each starting at its smallest point.
std::vector<std::vector<Point>> cycles(Permutation const &a);

CycleType cycle_type(Permutation const &a);

/// n minus the number of cycles (fixed points included).
std::size_t ramification_index(Permutation const &a);

/// lcm of the cycle lengths. Throws std::overflow_error past 64 bits.
std::uint64_t element_order(Permutation const &a);

namespace detail
{

// Allocation-free kernels for hot loops; the caller guarantees sizes agree.

inline void compose_into(std::span<Point const> a,
                         std::span<Point const> b,
                         std::span<Point> out)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[a[i]];
}

inline void conjugate_into(std::span<Point const> a,
                           std::span<Point const> g,
                           std::span<Point> out)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    out[g[i]] = g[a[i]];
}

inline void invert_into(std::span<Point const> a, std::span<Point> out)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    out[a[i]] = static_cast<Point>(i);
}

} // namespace detail

} // namespace belyicert

#endif // BELYICERT_PERMUTATION_HPP
