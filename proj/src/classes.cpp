#include "belyicert/classes.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <absl/container/flat_hash_map.h>

#include "belyicert/errors.hpp"

namespace belyicert
{

using Clock = std::chrono::steady_clock;

std::string_view to_string(Tristate t)
{
  switch (t) {
  case Tristate::yes: return "yes";
  case Tristate::no: return "no";
  default: return "unknown";
  }
}

bool ConjugacyClass::contains(std::span<Point const> images) const
{
  if (!members)
    throw std::logic_error("class has no member set");
  if (images.size() != representative.degree())
    throw DegreeMismatch("degree mismatch in class membership");
  return members->contains(fingerprint(images));
}

bool ConjugacyClass::contains(Permutation const &a) const
{ return contains(a.images()); }

ConjugacyClass class_orbit(PermGroup const &g, Permutation const &rep,
                           Budget const &budget, MemberVisitor const &visit)
{
  if (!g.contains(rep))
    throw std::invalid_argument("class representative is not in the group");

  auto const deadline = Clock::now() +
    std::chrono::duration_cast<Clock::duration>(budget.seconds);
  std::size_t const n = g.degree();
  auto members = std::make_shared<MemberSet>();

  // Roughly one member in 64 is kept in full; a fingerprint hit on one of
  // those is compared pointwise.
  absl::flat_hash_map<Fingerprint, std::size_t> sampled;
  std::vector<Point> sample_arena;

  auto admit = [&](std::span<Point const> img) {
    Fingerprint fp = fingerprint(img);
    bool const keep = (fp.lo & 63) == 0;
    if (!members->insert(fp).second) {
      if (keep) {
        auto it = sampled.find(fp);
        if (it != sampled.end() &&
            !std::equal(img.begin(), img.end(), sample_arena.begin() + it->second))
          throw IntegrityError("fingerprint collision during class enumeration");
      }
      return false;
    }
    if (keep) {
      sampled.emplace(fp, sample_arena.size());
      sample_arena.insert(sample_arena.end(), img.begin(), img.end());
    }
    if (members->size() > budget.max_class_size)
      throw ResourceError("class size exceeds " + std::to_string(budget.max_class_size));
    if ((members->size() & 4095) == 0 && Clock::now() > deadline)
      throw ResourceError("class enumeration ran out of time after " +
                          std::to_string(members->size()) + " members");
    if (visit)
      visit(img);
    return true;
  };

  std::vector<Point> layer(rep.images().begin(), rep.images().end());
  std::vector<Point> next;
  std::vector<Point> buf(n);
  admit(layer);

  while (!layer.empty()) {
    next.clear();
    for (std::size_t off = 0; off < layer.size(); off += n) {
      std::span<Point const> cur(layer.data() + off, n);
      for (auto const &s : g.generators()) {
        detail::conjugate_into(cur, s.images(), buf);
        if (admit(buf))
          next.insert(next.end(), buf.begin(), buf.end());
      }
    }
    layer.swap(next);
  }

  ConjugacyClass c;
  c.representative = rep;
  c.size = members->size();
  c.element_order = element_order(rep);
  c.ctype = cycle_type(rep);
  c.members = std::move(members);
  return c;
}

std::optional<std::size_t> ClassTable::class_of(Permutation const &a) const
{
  CycleType t = cycle_type(a);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].ctype == t && classes[i].contains(a))
      return i;
  return std::nullopt;
}

namespace
{

std::vector<std::uint64_t> proper_divisors(std::uint64_t m)
{
  // 1 and every d < m dividing m; only small orders occur in practice
  std::vector<std::uint64_t> out;
  if (m > (1ULL << 40))
    return {1};
  for (std::uint64_t d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m)
        out.push_back(m / d);
    }
  std::sort(out.begin(), out.end());
  out.pop_back();
  return out;
}

} // namespace

ClassTable all_classes(PermGroup const &g, Budget const &budget)
{
  auto const start = Clock::now();
  auto const deadline = start + std::chrono::duration_cast<Clock::duration>(budget.seconds);
  ClassTable table;
  mpz_class covered = 0;
  std::uint64_t stored = 0;
  std::mt19937_64 rng(budget.seed);
  if (g.order() > mpz_class(static_cast<unsigned long>(budget.max_class_size)))
    return table;

  auto add = [&](Permutation const &rep) {
    Budget b = budget;
    b.max_class_size = budget.max_class_size - stored;
    b.seconds = deadline - Clock::now();
    table.classes.push_back(class_orbit(g, rep, b));
    stored += table.classes.back().size;
    covered += static_cast<unsigned long>(table.classes.back().size);
  };

  try {
    add(Permutation::identity(g.degree()));
    while (covered < g.order()) {
      if (Clock::now() > deadline)
        return table;
      Permutation x = g.random_element(rng);
      for (std::uint64_t d : proper_divisors(element_order(x))) {
        Permutation y = power(x, static_cast<long long>(d));
        if (!table.class_of(y))
          add(y);
      }
    }
  } catch (ResourceError const &) {
    return table;
  }
  if (covered != g.order())
    throw IntegrityError("class sizes overshoot the group order");

  std::stable_sort(table.classes.begin(), table.classes.end(),
                   [](ConjugacyClass const &a, ConjugacyClass const &b) {
                     if (a.element_order != b.element_order)
                       return a.element_order < b.element_order;
                     if (a.size != b.size)
                       return a.size < b.size;
                     return a.ctype > b.ctype;
                   });
  table.complete = true;
  return table;
}

Tristate is_conjugate(PermGroup const &g, Permutation const &a,
                      Permutation const &b, Budget const &budget)
{
  if (!g.contains(a) || !g.contains(b))
    throw std::invalid_argument("is_conjugate: element outside the group");
  if (a == b)
    return Tristate::yes;
  if (cycle_type(a) != cycle_type(b))
    return Tristate::no;
  try {
    return class_orbit(g, a, budget).contains(b) ? Tristate::yes : Tristate::no;
  } catch (ResourceError const &) {
    return Tristate::unknown;
  }
}

bool is_rational_class(ConjugacyClass const &c)
{
  std::uint64_t m = c.element_order;
  for (std::uint64_t k = 2; k < m; ++k)
    if (std::gcd(k, m) == 1 &&
        !c.contains(power(c.representative, static_cast<long long>(k))))
      return false;
  return true;
}

Tristate is_rational_class(PermGroup const &g, Permutation const &rep,
                           Budget const &budget)
{
  try {
    return is_rational_class(class_orbit(g, rep, budget)) ? Tristate::yes : Tristate::no;
  } catch (ResourceError const &) {
    return Tristate::unknown;
  }
}

Tristate exists_cycle_type(PermGroup const &g, CycleType const &t,
                           Budget const &budget, ClassTable const *table)
{
  if (t.degree() != g.degree())
    throw DegreeMismatch("cycle type degree differs from the group degree");
  if (t.cycle_count() == t.degree())
    return Tristate::yes;

  std::mt19937_64 rng(budget.seed);
  for (int i = 0; i < 2000; ++i)
    if (cycle_type(g.random_element(rng)) == t)
      return Tristate::yes;

  ClassTable local;
  if (!table) {
    local = all_classes(g, budget);
    table = &local;
  }
  for (auto const &c : table->classes)
    if (c.ctype == t)
      return Tristate::yes;
  return table->complete ? Tristate::no : Tristate::unknown;
}

} // namespace belyicert
