#ifndef BELYICERT_FINGERPRINT_HPP
#define BELYICERT_FINGERPRINT_HPP

#include <cstdint>
#include <cstring>
#include <span>
#include <utility>

#include "belyicert/permutation.hpp"

namespace belyicert
{

/// 128-bit hash of an image table. Class member sets store these instead of
/// full permutations.
struct Fingerprint
{
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool operator==(Fingerprint const &) const = default;

  template <typename H>
  friend H AbslHashValue(H h, Fingerprint const &f)
  { return H::combine(std::move(h), f.lo, f.hi); }
};

namespace detail
{

inline std::uint64_t mum(std::uint64_t a, std::uint64_t b)
{
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return static_cast<std::uint64_t>(r) ^ static_cast<std::uint64_t>(r >> 64);
}

} // namespace detail

/// Two independently seeded multiply-fold lanes over 8-byte words.
inline Fingerprint fingerprint(std::span<Point const> images)
{
  constexpr std::uint64_t k0 = 0xa0761d6478bd642fULL;
  constexpr std::uint64_t k1 = 0xe7037ed1a0b428dbULL;
  constexpr std::uint64_t k2 = 0x8ebc6af09c88c6e3ULL;
  constexpr std::uint64_t k3 = 0x589965cc75374cc3ULL;

  std::uint64_t a = k2 ^ images.size();
  std::uint64_t b = k3 + images.size();

  auto const *bytes = reinterpret_cast<unsigned char const *>(images.data());
  std::size_t len = images.size_bytes();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, bytes + i, 8);
    a = detail::mum(a ^ w, k0);
    b = detail::mum(b + w, k1) + (b << 7);
  }
  if (i < len) {
    std::uint64_t w = 0;
    std::memcpy(&w, bytes + i, len - i);
    a = detail::mum(a ^ w, k0);
    b = detail::mum(b + w, k1) + (b << 7);
  }
  return {detail::mum(a, k3 ^ b), detail::mum(b ^ k2, a + k1)};
}

inline Fingerprint fingerprint(Permutation const &p)
{ return fingerprint(p.images()); }

} // namespace belyicert

#endif // BELYICERT_FINGERPRINT_HPP
