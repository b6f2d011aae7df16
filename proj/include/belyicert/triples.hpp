#ifndef BELYICERT_TRIPLES_HPP
#define BELYICERT_TRIPLES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "belyicert/classes.hpp"
#include "belyicert/perm_group.hpp"
#include "belyicert/permutation.hpp"

namespace belyicert
{

/// x, y, z with compose(compose(x, y), z) the identity.
struct TripleDatum
{
  Permutation x;
  Permutation y;
  Permutation z;

  std::array<Permutation const *, 3> members() const
  { return {&x, &y, &z}; }
};

/// z = inverse(compose(x, y)). Throws DegreeMismatch.
TripleDatum close_triple(Permutation const &x, Permutation const &y);

/// Genus of the covering from Riemann-Hurwitz, 1 - n + (sum of indices) / 2.
/// Throws std::domain_error when the index sum is odd (which a valid triple
/// cannot produce) or the genus would be negative.
std::size_t genus(TripleDatum const &t);
std::size_t genus(std::array<CycleType, 3> const &types);

/// <x, y> == g, compared by order. Throws std::invalid_argument when x or y
/// is not in g.
bool generates(PermGroup const &g, TripleDatum const &t);

enum class PrimitivityVerdict
{
  certified_primitive,
  inconclusive
};

/// Primitive when no sub-multiset of the subdegrees containing the trivial
/// subdegree 1 sums to a divisor d of n with 1 < d < n (a block through a
/// point is a union of suborbits). Throws std::invalid_argument unless the
/// subdegrees contain 1 and sum to n.
PrimitivityVerdict divisibility_primitivity(std::vector<std::size_t> const &subdegrees,
                                            std::size_t n);

/// Product-one triples (x, y, z) in C1 x C2 x C3.
struct TripleCensus
{
  /// y in C2 with compose(x0, y) in C3^-1, for the fixed x0 = C1.representative
  std::uint64_t pair_count = 0;
  /// the same count restricted to <x0, y> == G
  std::uint64_t generating_pairs = 0;
  bool all_generate = true;
  std::uint64_t center_order = 1;
  /// G-orbits under simultaneous conjugation on the generating triples,
  /// generating_pairs * |C1| * |Z(G)| / |G| (the action is free modulo the
  /// center).
  mpq_class generating_orbit_count;
  /// Orbits on all counted triples; only set when all_generate holds.
  std::optional<mpq_class> orbit_count;
};

TripleCensus &operator+=(TripleCensus &a, TripleCensus const &b);

/// Counts with x0 fixed in the smallest class, enumerates the smaller of the
/// other two and tests membership in the last; the count is symmetric under
/// permuting the classes, so pair_count is reported relative to C1.
/// Classes must carry member sets. Throws ResourceError past budget.seconds,
/// std::domain_error when |Z(G)| cannot be computed exactly.
TripleCensus count_class_triples(PermGroup const &g,
                                 ConjugacyClass const &c1,
                                 ConjugacyClass const &c2,
                                 ConjugacyClass const &c3,
                                 Budget const &budget);

/// Sum of count_class_triples over all class triples with the given cycle
/// types, from a complete table. Throws std::invalid_argument on an
/// incomplete table.
TripleCensus count_triples_by_types(PermGroup const &g, ClassTable const &table,
                                    CycleType const &t1, CycleType const &t2,
                                    CycleType const &t3, Budget const &budget);

struct GroupMetadata
{
  bool is_almost_simple = false;
  bool is_sym_or_alt = false;
};

struct NiceTriple
{
  /// class indices into the table, ascending
  std::array<std::size_t, 3> classes;
  std::array<CycleType, 3> types;
  TripleCensus census;
  /// distinct orderings of the class multiset (1, 3 or 6)
  std::size_t orderings = 0;
};

/// Rigid, rational, genus-0, generating triples of classes for a primitive
/// almost simple group other than A_n or S_n; reported once per multiset of
/// classes.
struct ScanResult
{
  bool applicable = false;
  std::string reason; ///< why not applicable
  std::vector<NiceTriple> triples;

  std::size_t unordered_count() const
  { return triples.size(); }

  std::size_t ordered_count() const;
};

/// Metadata is trusted as given, it is not recomputed. Requires a complete
/// table (std::invalid_argument otherwise).
ScanResult scan_nice_triples(PermGroup const &g, ClassTable const &table,
                             GroupMetadata const &meta, Budget const &budget);

} // namespace belyicert

#endif // BELYICERT_TRIPLES_HPP
