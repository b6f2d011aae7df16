#ifndef BELYICERT_BELYI_HPP
#define BELYICERT_BELYI_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyicert/permutation.hpp"
#include "belyicert/polynomial.hpp"
#include "belyicert/triples.hpp"

namespace belyicert
{

enum class BelyiPart
{
  p,
  q,
  r
};

char const *to_string(BelyiPart part);

/// f = p / q = 1 + r / q, so p = q + r. Fibers: f = 0 at the roots of p,
/// f = 1 at the roots of r, f = infinity at the roots of q (and at X =
/// infinity when deg q < n).
struct BelyiMapDatum
{
  std::size_t degree = 0;
  IntegerPolynomial p;
  IntegerPolynomial q;
  IntegerPolynomial r;
  /// the member computed from the other two; nullopt when all three given
  std::optional<BelyiPart> derived;
};

/// Supplied data violate p = q + r. Carries p - q - r.
class BelyiIdentityError : public std::runtime_error
{
public:
  explicit BelyiIdentityError(IntegerPolynomial difference)
  : std::runtime_error("p - q - r is not zero: " + difference.to_string()),
    _difference(std::move(difference))
  {}

  IntegerPolynomial const &difference() const
  { return _difference; }

private:
  IntegerPolynomial _difference;
};

/// Degree or coprimality violation.
class BelyiDataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// At least two of p, q, r. Throws std::invalid_argument with fewer,
/// BelyiIdentityError, BelyiDataError.
BelyiMapDatum load_belyi(std::optional<FactoredPolynomial> const &p,
                         std::optional<FactoredPolynomial> const &q,
                         std::optional<FactoredPolynomial> const &r,
                         std::size_t n);

struct Fiber
{
  /// finite root multiplicities
  MultiplicityMultiset finite;
  /// n - deg, when positive: the multiplicity of X = infinity
  std::size_t at_infinity = 0;
  /// partition of n
  CycleType partition;
};

struct RamificationProfile
{
  std::size_t degree = 0;
  Fiber over0;
  Fiber over1;
  Fiber over_inf;

  std::array<Fiber const *, 3> fibers() const
  { return {&over0, &over1, &over_inf}; }
};

/// Throws BelyiDataError when some degree exceeds n.
RamificationProfile ramification_profile(BelyiMapDatum const &m);

/// Sum over the three fibers of (n - number of parts) equals 2n - 2.
bool certify_three_branch_points(RamificationProfile const &profile, std::size_t n);

struct ProfileMatch
{
  /// every bijection found: assignment[i] is the triple member (0 = x,
  /// 1 = y, 2 = z) matched to fiber i (0, 1, infinity)
  std::vector<std::array<int, 3>> assignments;

  bool matched() const
  { return !assignments.empty(); }

  bool ambiguous() const
  { return assignments.size() > 1; }
};

ProfileMatch match_profile_to_triple(RamificationProfile const &profile,
                                     std::array<CycleType, 3> const &types);
ProfileMatch match_profile_to_triple(RamificationProfile const &profile,
                                     TripleDatum const &t);

} // namespace belyicert

#endif // BELYICERT_BELYI_HPP
