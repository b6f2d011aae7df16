#include "belyicert/triples.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "belyicert/errors.hpp"
#include "belyicert/fingerprint.hpp"

namespace belyicert
{

using Clock = std::chrono::steady_clock;

TripleDatum close_triple(Permutation const &x, Permutation const &y)
{
  if (x.degree() != y.degree())
    throw DegreeMismatch("close_triple: degrees differ");
  return {x, y, inverse(compose(x, y))};
}

std::size_t genus(std::array<CycleType, 3> const &types)
{
  std::size_t n = types[0].degree();
  std::size_t sum = 0;
  for (auto const &t : types) {
    if (t.degree() != n)
      throw DegreeMismatch("genus: degrees differ");
    sum += n - t.cycle_count();
  }
  if (sum % 2)
    throw std::domain_error("odd ramification index sum " + std::to_string(sum));
  if (sum + 2 < 2 * n)
    throw std::domain_error("index sum below 2n - 2, the triple cannot be transitive");
  return 1 + sum / 2 - n;
}

std::size_t genus(TripleDatum const &t)
{ return genus({cycle_type(t.x), cycle_type(t.y), cycle_type(t.z)}); }

bool generates(PermGroup const &g, TripleDatum const &t)
{
  if (!g.contains(t.x) || !g.contains(t.y) || !g.contains(t.z))
    throw std::invalid_argument("generates: triple member outside the group");
  return build_group({t.x, t.y}).order() == g.order();
}

PrimitivityVerdict divisibility_primitivity(std::vector<std::size_t> const &subdegrees,
                                            std::size_t n)
{
  std::size_t total = 0;
  for (auto d : subdegrees)
    total += d;
  auto one = std::find(subdegrees.begin(), subdegrees.end(), std::size_t{1});
  if (one == subdegrees.end() || total != n)
    throw std::invalid_argument("subdegrees must contain 1 and sum to the degree");

  // reachable[s]: some sub-multiset of the other subdegrees sums to s
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (auto it = subdegrees.begin(); it != subdegrees.end(); ++it) {
    if (it == one || *it == 0)
      continue;
    for (std::size_t s = n; s >= *it; --s)
      if (reachable[s - *it])
        reachable[s] = 1;
  }
  for (std::size_t d = 2; d < n; ++d)
    if (n % d == 0 && reachable[d - 1])
      return PrimitivityVerdict::inconclusive;
  return PrimitivityVerdict::certified_primitive;
}

TripleCensus &operator+=(TripleCensus &a, TripleCensus const &b)
{
  a.pair_count += b.pair_count;
  a.generating_pairs += b.generating_pairs;
  a.all_generate = a.all_generate && b.all_generate;
  a.generating_orbit_count += b.generating_orbit_count;
  if (a.orbit_count && b.orbit_count)
    a.orbit_count = *a.orbit_count + *b.orbit_count;
  else
    a.orbit_count.reset();
  return a;
}

namespace
{

std::uint64_t exact_center(PermGroup const &g)
{
  auto z = center_order(g);
  if (!z)
    throw std::domain_error("center order not computable for this group");
  return *z;
}

void sorted_cycle_lengths(std::span<Point const> a, std::vector<char> &seen,
                          std::vector<std::size_t> &out)
{
  out.clear();
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
}

bool orbit_is_everything(std::span<Point const> a, std::span<Point const> b,
                         std::vector<char> &seen, std::vector<Point> &stack)
{
  std::fill(seen.begin(), seen.end(), 0);
  stack.assign(1, 0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point p = stack.back();
    stack.pop_back();
    for (Point q : {a[p], b[p]})
      if (!seen[q]) {
        seen[q] = 1;
        ++count;
        stack.push_back(q);
      }
  }
  return count == a.size();
}

class PairGenerationTest
{
public:
  PairGenerationTest(PermGroup const &g, std::uint64_t seed)
  : _g(g), _seed(seed), _transitive(g.is_transitive()),
    _seen(g.degree()), _stack()
  {}

  bool operator()(Permutation const &x, std::span<Point const> y)
  {
    if (_transitive && !orbit_is_everything(x.images(), y, _seen, _stack))
      return false;
    std::vector<Permutation> gens{x, Permutation::from_images({y.begin(), y.end()})};
    // seeded per pair so the outcome does not depend on visiting order
    Fingerprint fp = fingerprint(y);
    std::mt19937_64 rng(_seed ^ fp.lo);
    auto lower = StabilizerChain::build_random(gens, _g.degree(), rng, _g.order());
    if (lower.order() == _g.order())
      return true;
    return StabilizerChain::build(gens, _g.degree()).order() == _g.order();
  }

private:
  PermGroup const &_g;
  std::uint64_t _seed;
  bool _transitive;
  std::vector<char> _seen;
  std::vector<Point> _stack;
};

TripleCensus census_impl(PermGroup const &g, ConjugacyClass const &c1,
                         ConjugacyClass const &c2, ConjugacyClass const &c3,
                         Budget const &budget, std::uint64_t center)
{
  auto const deadline = Clock::now() +
    std::chrono::duration_cast<Clock::duration>(budget.seconds);
  std::size_t const n = g.degree();
  for (auto const *c : {&c1, &c2, &c3})
    if (c->representative.degree() != n)
      throw DegreeMismatch("census: class degree differs from the group");

  // N(C1,C2,C3) is symmetric in the three classes
  std::array<ConjugacyClass const *, 3> order{&c1, &c2, &c3};
  std::stable_sort(order.begin(), order.end(),
                   [](auto const *a, auto const *b) { return a->size < b->size; });
  ConjugacyClass const &a = *order[0];
  ConjugacyClass const &b = *order[1];
  ConjugacyClass const &c = *order[2];
  if (!c.members)
    throw std::invalid_argument("census: the largest class needs a member set");

  Permutation const &x0 = a.representative;
  PairGenerationTest generating(g, budget.seed);
  std::vector<Point> prod(n), inv(n);
  std::vector<char> seen(n);
  std::vector<std::size_t> lengths;
  std::uint64_t hits = 0, generating_hits = 0, visited = 0;

  auto visit = [&](std::span<Point const> y) {
    if ((++visited & 1023) == 0 && Clock::now() > deadline)
      throw ResourceError("census ran out of time after " + std::to_string(visited) +
                          " of " + std::to_string(b.size) + " elements, " +
                          std::to_string(hits) + " pairs so far");
    detail::compose_into(x0.images(), y, prod);
    sorted_cycle_lengths(prod, seen, lengths);
    if (lengths != c.ctype.parts())
      return;
    detail::invert_into(prod, inv);
    if (!c.members->contains(fingerprint(inv)))
      return;
    ++hits;
    if (generating(x0, y))
      ++generating_hits;
  };
  Budget orbit_budget = budget;
  orbit_budget.seconds = deadline - Clock::now();
  class_orbit(g, b.representative, orbit_budget, visit);

  mpz_class triples = mpz_class(static_cast<unsigned long>(a.size)) * hits;
  mpz_class gen_triples = mpz_class(static_cast<unsigned long>(a.size)) * generating_hits;
  mpz_class c1_size = static_cast<unsigned long>(c1.size);
  if (triples % c1_size != 0 || gen_triples % c1_size != 0)
    throw IntegrityError("census: triple count not divisible by |C1|");

  TripleCensus out;
  out.pair_count = mpz_class(triples / c1_size).get_ui();
  out.generating_pairs = mpz_class(gen_triples / c1_size).get_ui();
  out.all_generate = hits == generating_hits;
  out.center_order = center;
  out.generating_orbit_count = mpq_class(gen_triples * center, g.order());
  out.generating_orbit_count.canonicalize();
  if (out.all_generate) {
    out.orbit_count = out.generating_orbit_count;
    if (out.orbit_count->get_den() != 1)
      throw IntegrityError("census: orbit count is not an integer");
  }
  return out;
}

} // namespace

TripleCensus count_class_triples(PermGroup const &g, ConjugacyClass const &c1,
                                 ConjugacyClass const &c2, ConjugacyClass const &c3,
                                 Budget const &budget)
{ return census_impl(g, c1, c2, c3, budget, exact_center(g)); }

TripleCensus count_triples_by_types(PermGroup const &g, ClassTable const &table,
                                    CycleType const &t1, CycleType const &t2,
                                    CycleType const &t3, Budget const &budget)
{
  if (!table.complete)
    throw std::invalid_argument("count_triples_by_types needs a complete class table");
  std::uint64_t center = exact_center(g);
  TripleCensus total;
  total.center_order = center;
  total.orbit_count = mpq_class(0);

  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.seconds);
  for (auto const &c1 : table.classes) {
    if (c1.ctype != t1)
      continue;
    for (auto const &c2 : table.classes) {
      if (c2.ctype != t2)
        continue;
      for (auto const &c3 : table.classes) {
        if (c3.ctype != t3)
          continue;
        Budget b = budget;
        b.seconds = deadline - Clock::now();
        total += census_impl(g, c1, c2, c3, b, center);
      }
    }
  }
  return total;
}

std::size_t ScanResult::ordered_count() const
{
  std::size_t total = 0;
  for (auto const &t : triples)
    total += t.orderings;
  return total;
}

ScanResult scan_nice_triples(PermGroup const &g, ClassTable const &table,
                             GroupMetadata const &meta, Budget const &budget)
{
  if (!table.complete)
    throw std::invalid_argument("scan_nice_triples needs a complete class table");
  ScanResult result;
  if (!meta.is_almost_simple) {
    result.reason = "group not declared almost simple";
    return result;
  }
  if (meta.is_sym_or_alt) {
    result.reason = "alternating and symmetric groups are excluded";
    return result;
  }
  if (!g.is_transitive() || !is_primitive(g)) {
    result.reason = "group is not primitive";
    return result;
  }
  result.applicable = true;

  // the identity is left out: a generating triple containing it would make
  // G cyclic
  std::vector<std::size_t> rational;
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    if (table.classes[i].element_order > 1 && is_rational_class(table.classes[i]))
      rational.push_back(i);

  std::size_t const n = g.degree();
  std::uint64_t center = exact_center(g);
  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.seconds);

  for (std::size_t ii = 0; ii < rational.size(); ++ii)
    for (std::size_t jj = ii; jj < rational.size(); ++jj)
      for (std::size_t kk = jj; kk < rational.size(); ++kk) {
        std::array<std::size_t, 3> idx{rational[ii], rational[jj], rational[kk]};
        std::array<CycleType, 3> types;
        std::size_t index_sum = 0;
        for (int m = 0; m < 3; ++m) {
          types[m] = table.classes[idx[m]].ctype;
          index_sum += n - types[m].cycle_count();
        }
        if (index_sum != 2 * n - 2)
          continue;
        Budget b = budget;
        b.seconds = deadline - Clock::now();
        TripleCensus census = census_impl(g, table.classes[idx[0]], table.classes[idx[1]],
                                          table.classes[idx[2]], b, center);
        if (census.generating_pairs == 0 || census.generating_orbit_count != 1)
          continue;
        std::size_t orderings = 6;
        if (idx[0] == idx[2])
          orderings = 1;
        else if (idx[0] == idx[1] || idx[1] == idx[2])
          orderings = 3;
        result.triples.push_back({idx, types, census, orderings});
      }
  return result;
}

} // namespace belyicert
