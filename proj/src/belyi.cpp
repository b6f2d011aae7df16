#include "belyicert/belyi.hpp"

#include <algorithm>

#include "belyicert/errors.hpp"

namespace belyicert
{

char const *to_string(BelyiPart part)
{
  switch (part) {
  case BelyiPart::p: return "p";
  case BelyiPart::q: return "q";
  default: return "r";
  }
}

BelyiMapDatum load_belyi(std::optional<FactoredPolynomial> const &p,
                         std::optional<FactoredPolynomial> const &q,
                         std::optional<FactoredPolynomial> const &r,
                         std::size_t n)
{
  int supplied = int(p.has_value()) + int(q.has_value()) + int(r.has_value());
  if (supplied < 2)
    throw std::invalid_argument("two of p, q, r are needed");

  BelyiMapDatum m;
  m.degree = n;
  if (!p) {
    m.q = expand(*q);
    m.r = expand(*r);
    m.p = m.q + m.r;
    m.derived = BelyiPart::p;
  } else if (!q) {
    m.p = expand(*p);
    m.r = expand(*r);
    m.q = m.p - m.r;
    m.derived = BelyiPart::q;
  } else if (!r) {
    m.p = expand(*p);
    m.q = expand(*q);
    m.r = m.p - m.q;
    m.derived = BelyiPart::r;
  } else {
    m.p = expand(*p);
    m.q = expand(*q);
    m.r = expand(*r);
    IntegerPolynomial diff = m.p - m.q - m.r;
    if (!diff.is_zero())
      throw BelyiIdentityError(diff);
  }

  if (m.p.is_zero() || m.q.is_zero() || m.r.is_zero())
    throw BelyiDataError("p, q and r must be nonzero");
  long top = std::max(m.p.degree(), m.q.degree());
  if (top != static_cast<long>(n))
    throw BelyiDataError("max(deg p, deg q) = " + std::to_string(top) +
                         ", expected " + std::to_string(n));
  if (poly_gcd(m.p, m.q).degree() != 0)
    throw BelyiDataError("p and q are not coprime");
  return m;
}

namespace
{

Fiber make_fiber(IntegerPolynomial const &a, std::size_t n, char const *name)
{
  Fiber f;
  f.finite = multiplicity_multiset(a);
  if (a.degree() > static_cast<long>(n))
    throw BelyiDataError(std::string("deg ") + name + " exceeds the degree");
  f.at_infinity = n - static_cast<std::size_t>(a.degree());
  std::vector<std::size_t> parts = f.finite.as_partition().parts();
  if (f.at_infinity > 0)
    parts.push_back(f.at_infinity);
  f.partition = CycleType(std::move(parts));
  return f;
}

} // namespace

RamificationProfile ramification_profile(BelyiMapDatum const &m)
{
  RamificationProfile out;
  out.degree = m.degree;
  out.over0 = make_fiber(m.p, m.degree, "p");
  out.over1 = make_fiber(m.r, m.degree, "r");
  out.over_inf = make_fiber(m.q, m.degree, "q");
  return out;
}

bool certify_three_branch_points(RamificationProfile const &profile, std::size_t n)
{
  std::size_t sum = 0;
  for (auto const *f : profile.fibers()) {
    if (f->partition.degree() != n)
      return false;
    sum += n - f->partition.cycle_count();
  }
  return sum + 2 == 2 * n;
}

ProfileMatch match_profile_to_triple(RamificationProfile const &profile,
                                     std::array<CycleType, 3> const &types)
{
  ProfileMatch out;
  std::array<int, 3> perm{0, 1, 2};
  auto fibers = profile.fibers();
  do {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      ok = fibers[i]->partition == types[perm[i]];
    if (ok)
      out.assignments.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ProfileMatch match_profile_to_triple(RamificationProfile const &profile,
                                     TripleDatum const &t)
{
  return match_profile_to_triple(profile,
                                 {cycle_type(t.x), cycle_type(t.y), cycle_type(t.z)});
}

} // namespace belyicert
