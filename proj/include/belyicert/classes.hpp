#ifndef BELYICERT_CLASSES_HPP
#define BELYICERT_CLASSES_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "belyicert/fingerprint.hpp"
#include "belyicert/perm_group.hpp"
#include "belyicert/permutation.hpp"

namespace belyicert
{

enum class Tristate
{
  no,
  yes,
  unknown
};

std::string_view to_string(Tristate t);

/// Resource limits for class enumeration and the computations built on it.
struct Budget
{
  /// Largest number of fingerprints one class (or one class table) may hold.
  std::uint64_t max_class_size = 30'000'000;
  /// Wall-clock limit for each class enumeration, census or class table.
  std::chrono::duration<double> seconds = std::chrono::minutes(10);
  /// Seed for random elements (class discovery, generation checks).
  std::uint64_t seed = 1;
};

using MemberSet = absl::flat_hash_set<Fingerprint>;

struct ConjugacyClass
{
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 1;
  CycleType ctype;
  /// Fingerprints of all members; shared between copies.
  std::shared_ptr<MemberSet const> members;

  /// Exact membership (up to fingerprint collisions). Throws
  /// std::logic_error without a member set.
  bool contains(Permutation const &a) const;
  bool contains(std::span<Point const> images) const;
};

/// Called once per class member with its image table.
using MemberVisitor = std::function<void(std::span<Point const>)>;

/// Orbit of `rep` under conjugation by the generators of `g`, enumerated to
/// closure breadth-first. Throws ResourceError when the class outgrows
/// budget.max_class_size or budget.seconds, IntegrityError on a detected
/// fingerprint collision, std::invalid_argument when rep is not in g.
ConjugacyClass class_orbit(PermGroup const &g, Permutation const &rep,
                           Budget const &budget,
                           MemberVisitor const &visit = nullptr);

struct ClassTable
{
  std::vector<ConjugacyClass> classes;
  /// sum of class sizes equals the group order
  bool complete = false;

  /// Index of the class containing a, if it has been enumerated.
  std::optional<std::size_t> class_of(Permutation const &a) const;
};

/// Discovers classes from uniformly random elements and their powers until
/// the sizes add up to the group order. Returns complete == false with a
/// partial table when the budget runs out.
ClassTable all_classes(PermGroup const &g, Budget const &budget);

/// Throws std::invalid_argument unless both are in g.
Tristate is_conjugate(PermGroup const &g, Permutation const &a,
                      Permutation const &b, Budget const &budget);

/// rep^k conjugate to rep for every k coprime to the element order.
Tristate is_rational_class(PermGroup const &g, Permutation const &rep,
                           Budget const &budget);

/// Same test on an enumerated class.
bool is_rational_class(ConjugacyClass const &c);

/// "yes" needs a witness, "no" needs a complete class table. Pass `table`
/// to reuse one; otherwise one is computed within budget.
Tristate exists_cycle_type(PermGroup const &g, CycleType const &t,
                           Budget const &budget,
                           ClassTable const *table = nullptr);

} // namespace belyicert

#endif // BELYICERT_CLASSES_HPP
