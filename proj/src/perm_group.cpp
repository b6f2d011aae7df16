#include "belyicert/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "belyicert/errors.hpp"

namespace belyicert
{

namespace
{

std::optional<Point> smallest_moved_point(Permutation const &g)
{
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[i] != i)
      return static_cast<Point>(i);
  return std::nullopt;
}

std::vector<std::vector<Point>> orbits_of(std::span<Permutation const> gens,
                                          std::size_t n)
{
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> result;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<Point> orb{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (auto const &s : gens) {
        Point q = s[orb[k]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    result.push_back(std::move(orb));
  }
  return result;
}

// Product replacement generator for random elements of <gens>.
class ProductReplacement
{
public:
  ProductReplacement(std::span<Permutation const> gens, std::size_t degree,
                     std::mt19937_64 &rng)
  : _rng(rng),
    _accumulator(Permutation::identity(degree))
  {
    std::size_t slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i)
      _state.push_back(gens.empty() ? _accumulator : gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i)
      next();
  }

  Permutation const &next()
  {
    std::uniform_int_distribution<std::size_t> pick(0, _state.size() - 1);
    std::size_t s = pick(_rng);
    std::size_t t = pick(_rng);
    while (t == s)
      t = pick(_rng);
    if (_rng() & 1)
      _state[s] = compose(_state[s], _state[t]);
    else
      _state[s] = compose(_state[s], inverse(_state[t]));
    _accumulator = compose(_accumulator, _state[s]);
    return _accumulator;
  }

private:
  std::mt19937_64 &_rng;
  std::vector<Permutation> _state;
  Permutation _accumulator;
};

} // namespace

// StabilizerChain -----------------------------------------------------------

void StabilizerChain::append_level(Point base)
{
  ChainLevel level;
  level.base = base;
  _levels.push_back(std::move(level));
  rebuild_orbit(_levels.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t l)
{
  ChainLevel &level = _levels[l];
  level.slot.assign(_degree, -1);
  level.orbit.assign(1, level.base);
  level.transversal.assign(1, Permutation::identity(_degree));
  level.transversal_inverse.assign(1, Permutation::identity(_degree));
  level.slot[level.base] = 0;

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point p = level.orbit[k];
    for (auto const &s : level.generators) {
      Point q = s[p];
      if (level.slot[q] >= 0)
        continue;
      level.slot[q] = static_cast<std::int32_t>(level.transversal.size());
      level.orbit.push_back(q);
      level.transversal.push_back(
        compose(level.transversal[static_cast<std::size_t>(level.slot[p])], s));
      level.transversal_inverse.push_back(inverse(level.transversal.back()));
    }
  }
}

void StabilizerChain::add_strong_generator(Permutation const &h,
                                           std::size_t up_to_level)
{
  // h fixes the base points above up_to_level; it joins every level whose
  // strong generating set it belongs to, so S_{l+1} stays a subset of S_l.
  for (std::size_t l = 0; l <= up_to_level; ++l) {
    _levels[l].generators.push_back(h);
    rebuild_orbit(l);
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g,
                                                  std::size_t from_level) const
{
  std::vector<Point> tmp(_degree);
  std::vector<Point> cur(g.images().begin(), g.images().end());
  for (std::size_t l = from_level; l < _levels.size(); ++l) {
    ChainLevel const &level = _levels[l];
    Point beta = cur[level.base];
    if (level.slot[beta] < 0)
      return {Permutation::from_images(std::move(cur)), l};
    auto const &uinv =
      level.transversal_inverse[static_cast<std::size_t>(level.slot[beta])];
    detail::compose_into(cur, uinv.images(), tmp);
    cur.swap(tmp);
  }
  return {Permutation::from_images(std::move(cur)), _levels.size()};
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    throw DegreeMismatch("membership test degree mismatch");
  return sift(g).residue.is_identity();
}

void StabilizerChain::complete()
{
  // Schreier-Sims in the form of Holt, Handbook of CGT, 4.4.2: test all
  // Schreier generators at level i; a nontrivial residue at level j becomes
  // a strong generator of levels i+1..j and the scan restarts at j.
  std::vector<Point> buf(_degree), buf2(_degree);

  std::size_t i = _levels.size();
  while (i-- > 0) {
    bool restart = false;
    ChainLevel const *level = &_levels[i];
    for (std::size_t k = 0; k < level->orbit.size() && !restart; ++k) {
      Point beta = level->orbit[k];
      auto const &u = level->transversal[static_cast<std::size_t>(level->slot[beta])];
      for (std::size_t si = 0; si < level->generators.size(); ++si) {
        auto const &s = level->generators[si];
        Point target = s[beta];
        auto const &vinv =
          level->transversal_inverse[static_cast<std::size_t>(level->slot[target])];

        detail::compose_into(u.images(), s.images(), buf);
        detail::compose_into(buf, vinv.images(), buf2);
        bool trivial = true;
        for (std::size_t p = 0; p < _degree; ++p)
          if (buf2[p] != p) {
            trivial = false;
            break;
          }
        if (trivial)
          continue;

        auto [h, j] = sift(Permutation::from_images(buf2), i + 1);
        if (j == _levels.size() && h.is_identity())
          continue;

        if (j == _levels.size())
          append_level(*smallest_moved_point(h));
        for (std::size_t l = i + 1; l <= j; ++l) {
          _levels[l].generators.push_back(h);
          rebuild_orbit(l);
        }
        i = j + 1; // loop decrement lands on j
        restart = true;
        break;
      }
    }
  }
}

StabilizerChain StabilizerChain::build(std::span<Permutation const> generators,
                                       std::size_t degree,
                                       std::span<Point const> base_prefix)
{
  StabilizerChain chain;
  chain._degree = degree;
  for (Point p : base_prefix)
    chain.append_level(p);

  std::vector<Permutation> gens;
  for (auto const &g : generators)
    if (!g.is_identity())
      gens.push_back(g);

  if (chain._levels.empty() && !gens.empty()) {
    Point smallest = static_cast<Point>(degree);
    for (auto const &g : gens)
      smallest = std::min(smallest, *smallest_moved_point(g));
    chain.append_level(smallest);
  }

  for (auto const &g : gens) {
    auto moves = [&](std::size_t l) { return g[chain._levels[l].base] != chain._levels[l].base; };
    std::size_t j = 0;
    while (j < chain._levels.size() && !moves(j))
      ++j;
    if (j == chain._levels.size())
      chain.append_level(*smallest_moved_point(g));
    for (std::size_t l = 0; l <= j; ++l)
      chain._levels[l].generators.push_back(g);
  }
  for (std::size_t l = 0; l < chain._levels.size(); ++l)
    chain.rebuild_orbit(l);

  chain.complete();
  return chain;
}

StabilizerChain StabilizerChain::build_random(std::span<Permutation const> generators,
                                              std::size_t degree,
                                              std::mt19937_64 &rng,
                                              std::optional<mpz_class> const &target,
                                              std::size_t patience,
                                              std::span<Point const> base_prefix)
{
  StabilizerChain chain;
  chain._degree = degree;
  for (Point p : base_prefix)
    chain.append_level(p);

  bool trivial = std::all_of(generators.begin(), generators.end(),
                             [](auto const &g) { return g.is_identity(); });
  if (trivial)
    return chain;

  ProductReplacement source(generators, degree, rng);

  auto absorb = [&](Permutation const &g) {
    auto [h, j] = chain.sift(g);
    if (j == chain._levels.size() && h.is_identity())
      return false;
    if (j == chain._levels.size())
      chain.append_level(*smallest_moved_point(h));
    chain.add_strong_generator(h, j);
    return true;
  };

  for (auto const &g : generators)
    if (!g.is_identity())
      absorb(g);

  std::size_t quiet = 0;
  while (quiet < patience) {
    if (target && chain.order() >= *target)
      break;
    if (absorb(source.next()))
      quiet = 0;
    else
      ++quiet;
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> result;
  for (auto const &level : _levels)
    result.push_back(level.base);
  return result;
}

mpz_class StabilizerChain::order() const
{
  mpz_class result = 1;
  for (auto const &level : _levels)
    result *= static_cast<unsigned long>(level.orbit.size());
  return result;
}

Permutation StabilizerChain::random_element(std::mt19937_64 &rng) const
{
  std::vector<Point> acc(_degree), tmp(_degree);
  std::iota(acc.begin(), acc.end(), Point{0});
  for (std::size_t l = _levels.size(); l-- > 0;) {
    auto const &level = _levels[l];
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    detail::compose_into(acc, level.transversal[pick(rng)].images(), tmp);
    acc.swap(tmp);
  }
  return Permutation::from_images(std::move(acc));
}

void StabilizerChain::for_each_element(
  std::function<void(Permutation const &)> const &fn) const
{
  std::vector<Permutation> partial(_levels.size() + 1,
                                   Permutation::identity(_degree));
  // partial[l] = product of the chosen transversal elements of levels >= l
  std::function<void(std::size_t)> walk = [&](std::size_t l) {
    if (l == 0) {
      fn(partial[0]);
      return;
    }
    for (auto const &t : _levels[l - 1].transversal) {
      partial[l - 1] = compose(partial[l], t);
      walk(l - 1);
    }
  };
  walk(_levels.size());
}

// PermGroup -----------------------------------------------------------------

PermGroup::PermGroup(std::vector<Permutation> generators)
: _degree(0),
  _generators(std::move(generators))
{
  if (_generators.empty())
    throw std::invalid_argument("a group needs at least one generator");
  _degree = _generators.front().degree();
  if (_degree == 0)
    throw std::invalid_argument("degree must be positive");
  for (auto const &g : _generators)
    if (g.degree() != _degree)
      throw DegreeMismatch("generators have different degrees");
  _chain = StabilizerChain::build(_generators, _degree);
  _order = _chain.order();
}

bool PermGroup::contains(Permutation const &a) const
{ return _chain.contains(a); }

std::vector<Point> PermGroup::orbit(Point p) const
{
  std::vector<bool> seen(_degree, false);
  std::vector<Point> orb{p};
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &s : _generators) {
      Point q = s[orb[k]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const
{ return orbit(0).size() == _degree; }

std::vector<std::vector<Point>> PermGroup::suborbits() const
{
  if (!is_transitive())
    throw std::domain_error("subdegrees need a transitive group");
  auto const &levels = _chain.levels();
  std::vector<Permutation> stabilizer_gens;
  if (levels.size() >= 2)
    stabilizer_gens = levels[1].generators;
  // transitive and nontrivial, so the first base point is 0
  return orbits_of(stabilizer_gens, _degree);
}

std::vector<std::size_t> PermGroup::subdegrees() const
{
  std::vector<std::size_t> result;
  for (auto const &orb : suborbits())
    result.push_back(orb.size());
  std::sort(result.begin(), result.end());
  return result;
}

PermGroup build_group(std::vector<Permutation> generators)
{ return PermGroup(std::move(generators)); }

// Blocks --------------------------------------------------------------------

std::vector<std::vector<Point>> minimal_block(PermGroup const &g,
                                              Point alpha, Point omega)
{
  if (alpha == omega)
    throw std::invalid_argument("minimal_block needs two distinct points");
  std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point p) {
    while (parent[p] != p) {
      parent[p] = parent[parent[p]];
      p = parent[p];
    }
    return p;
  };

  std::deque<std::pair<Point, Point>> queue;
  parent[std::max(alpha, omega)] = std::min(alpha, omega);
  queue.emplace_back(alpha, omega);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (auto const &s : g.generators()) {
      Point c = find(s[a]);
      Point d = find(s[b]);
      if (c == d)
        continue;
      if (c > d)
        std::swap(c, d);
      parent[d] = c;
      queue.emplace_back(c, d);
    }
  }

  std::vector<std::vector<Point>> blocks;
  std::vector<std::int32_t> index(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    Point root = find(static_cast<Point>(p));
    if (index[root] < 0) {
      index[root] = static_cast<std::int32_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(index[root])].push_back(static_cast<Point>(p));
  }
  return blocks;
}

bool is_primitive(PermGroup const &g)
{
  if (!g.is_transitive())
    throw std::domain_error("primitivity needs a transitive group");
  if (g.degree() < 2)
    return true;
  for (auto const &orb : g.suborbits()) {
    if (orb.front() == 0)
      continue;
    if (minimal_block(g, 0, orb.front()).size() != 1)
      return false;
  }
  return true;
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::size_t n = g.degree();
  std::vector<Permutation> gens;
  auto const &src = g.generators();
  for (auto const &a : src)
    for (auto const &b : src) {
      auto c = compose(compose(inverse(a), inverse(b)), compose(a, b));
      if (!c.is_identity())
        gens.push_back(std::move(c));
    }
  if (gens.empty())
    return PermGroup({Permutation::identity(n)});

  auto chain = StabilizerChain::build(gens, n);
  std::deque<Permutation> pending(gens.begin(), gens.end());
  while (!pending.empty()) {
    Permutation h = std::move(pending.front());
    pending.pop_front();
    for (auto const &s : src) {
      auto c = conjugate(h, s);
      if (chain.contains(c))
        continue;
      gens.push_back(c);
      pending.push_back(c);
      chain = StabilizerChain::build(gens, n);
    }
  }
  return PermGroup(std::move(gens));
}

std::optional<std::uint64_t> center_order(PermGroup const &g,
                                          std::uint64_t enumeration_limit)
{
  std::size_t n = g.degree();
  auto const &gens = g.generators();

  if (g.is_transitive()) {
    // A centralizing c is fixed by c(0); propagate c(s(p)) = s(c(p)).
    std::uint64_t count = 0;
    std::vector<std::int32_t> image(n);
    for (std::size_t omega = 0; omega < n; ++omega) {
      std::fill(image.begin(), image.end(), -1);
      image[0] = static_cast<std::int32_t>(omega);
      std::vector<Point> queue{0};
      bool ok = true;
      for (std::size_t k = 0; k < queue.size() && ok; ++k) {
        Point p = queue[k];
        for (auto const &s : gens) {
          Point q = s[p];
          auto want = static_cast<std::int32_t>(s[static_cast<Point>(image[p])]);
          if (image[q] < 0) {
            image[q] = want;
            queue.push_back(q);
          } else if (image[q] != want) {
            ok = false;
            break;
          }
        }
      }
      if (!ok)
        continue;
      std::vector<Point> table(n);
      for (std::size_t p = 0; p < n; ++p)
        table[p] = static_cast<Point>(image[p]);
      std::vector<bool> hit(n, false);
      bool bijective = true;
      for (Point q : table) {
        if (hit[q])
          bijective = false;
        hit[q] = true;
      }
      if (bijective && g.contains(Permutation::from_images(std::move(table))))
        ++count;
    }
    return count;
  }

  if (g.order() > enumeration_limit)
    return std::nullopt;
  std::uint64_t count = 0;
  g.chain().for_each_element([&](Permutation const &z) {
    for (auto const &s : gens)
      if (compose(z, s) != compose(s, z))
        return;
    ++count;
  });
  return count;
}

} // namespace belyicert
