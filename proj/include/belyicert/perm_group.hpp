#ifndef BELYICERT_PERM_GROUP_HPP
#define BELYICERT_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "belyicert/permutation.hpp"

namespace belyicert
{

/// One level of a stabilizer chain: a base point, the strong generators
/// fixing all earlier base points, and the fundamental orbit with an
/// explicit transversal.
struct ChainLevel
{
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// index into `transversal` per point, -1 outside the orbit
  std::vector<std::int32_t> slot;
  /// transversal[slot[p]] maps `base` to p
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;

  bool in_orbit(Point p) const
  { return slot[p] >= 0; }
};

/// Base and strong generating set built by Schreier-Sims.
class StabilizerChain
{
public:
  StabilizerChain() = default;

  struct SiftResult
  {
    Permutation residue;
    std::size_t level; ///< first level where sifting stopped, or depth()
  };

  /// Deterministic Schreier-Sims. `base_prefix` fixes the first base points;
  /// further base points are the smallest points moved by new strong
  /// generators.
  static StabilizerChain build(std::span<Permutation const> generators,
                               std::size_t degree,
                               std::span<Point const> base_prefix = {});

  /// Random Schreier-Sims. The result is a valid chain for a subgroup of
  /// the generated group, so order() is a certified lower bound. Stops once
  /// the bound reaches `target` or after `patience` consecutive trivial
  /// sifts.
  static StabilizerChain build_random(std::span<Permutation const> generators,
                                      std::size_t degree,
                                      std::mt19937_64 &rng,
                                      std::optional<mpz_class> const &target,
                                      std::size_t patience = 24,
                                      std::span<Point const> base_prefix = {});

  std::size_t degree() const
  { return _degree; }

  std::size_t depth() const
  { return _levels.size(); }

  std::vector<ChainLevel> const &levels() const
  { return _levels; }

  std::vector<Point> base() const;

  mpz_class order() const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;

  bool contains(Permutation const &g) const;

  /// Uniformly distributed element: one random transversal element per level.
  Permutation random_element(std::mt19937_64 &rng) const;

  /// Visits every group element exactly once.
  void for_each_element(std::function<void(Permutation const &)> const &fn) const;

private:
  void append_level(Point base);
  void add_strong_generator(Permutation const &h, std::size_t up_to_level);
  void rebuild_orbit(std::size_t level);
  void complete();

  std::size_t _degree = 0;
  std::vector<ChainLevel> _levels;
};

/// A permutation group given by generators, with its stabilizer chain.
/// Immutable after construction; all queries are read-only.
class PermGroup
{
public:
  /// Throws std::invalid_argument on an empty list, DegreeMismatch on
  /// unequal degrees.
  explicit PermGroup(std::vector<Permutation> generators);

  std::size_t degree() const
  { return _degree; }

  std::vector<Permutation> const &generators() const
  { return _generators; }

  StabilizerChain const &chain() const
  { return _chain; }

  mpz_class const &order() const
  { return _order; }

  /// Throws DegreeMismatch.
  bool contains(Permutation const &a) const;

  std::vector<Point> orbit(Point p) const;

  bool is_transitive() const;

  /// Orbits of the stabilizer of point 0 (1 in I/O), the trivial one first.
  /// Throws std::domain_error when the group is not transitive.
  std::vector<std::vector<Point>> suborbits() const;

  /// Sizes of suborbits(), sorted ascending.
  std::vector<std::size_t> subdegrees() const;

  Permutation random_element(std::mt19937_64 &rng) const
  { return _chain.random_element(rng); }

private:
  std::size_t _degree;
  std::vector<Permutation> _generators;
  StabilizerChain _chain;
  mpz_class _order;
};

PermGroup build_group(std::vector<Permutation> generators);

/// Finest block system with alpha and omega in one block (Atkinson's
/// union-find closure). Blocks are listed by their smallest point.
/// Throws std::invalid_argument when alpha == omega.
std::vector<std::vector<Point>> minimal_block(PermGroup const &g,
                                              Point alpha, Point omega);

/// Transitive and no nontrivial block system. One omega per nontrivial
/// suborbit suffices. Throws std::domain_error when not transitive.
bool is_primitive(PermGroup const &g);

/// Normal closure of the commutators of the generators.
PermGroup derived_subgroup(PermGroup const &g);

/// |Z(G)|. Exact for transitive groups (the centralizer in Sym(n) is then
/// semiregular) and for groups with at most `enumeration_limit` elements;
/// nullopt otherwise.
std::optional<std::uint64_t> center_order(PermGroup const &g,
                                          std::uint64_t enumeration_limit = 100000);

} // namespace belyicert

#endif // BELYICERT_PERM_GROUP_HPP
