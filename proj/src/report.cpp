#include "belyicert/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "belyicert/belyi.hpp"
#include "belyicert/errors.hpp"
#include "belyicert/polynomial.hpp"

namespace belyicert
{

char const *to_string(StepStatus s)
{
  switch (s) {
  case StepStatus::pass: return "pass";
  case StepStatus::fail: return "fail";
  default: return "skipped";
  }
}

char const *to_string(Verdict v)
{
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  default: return "inconclusive";
  }
}

StepOutcome const *VerificationReport::step(std::string const &name) const
{
  for (auto const &s : steps)
    if (s.name == name)
      return &s;
  return nullptr;
}

Verdict VerificationReport::verdict() const
{
  static char const *const critical[] = {"closure", "genus", "belyi_identity",
                                         "certificate", "profile_match"};
  bool inconclusive = false;
  for (auto const &s : steps) {
    if (s.status == StepStatus::fail)
      return Verdict::fail;
    if (s.status == StepStatus::skipped &&
        std::find(std::begin(critical), std::end(critical), s.name) != std::end(critical))
      inconclusive = true;
  }
  for (auto const *name : critical)
    if (!step(name))
      inconclusive = true;
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

namespace
{

std::string join(std::vector<std::size_t> const &v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

std::string str(mpq_class const &q)
{ return q.get_str(); }

StepOutcome outcome(std::string name, bool ok, std::string detail = {})
{
  StepOutcome s;
  s.name = std::move(name);
  s.status = ok ? StepStatus::pass : StepStatus::fail;
  s.detail = std::move(detail);
  return s;
}

StepOutcome skipped(std::string name, std::string reason)
{
  StepOutcome s;
  s.name = std::move(name);
  s.status = StepStatus::skipped;
  s.detail = std::move(reason);
  return s;
}

} // namespace

VerificationReport run_verify(FixtureFile const &fixture, Budget const &budget)
{
  VerificationReport report;
  report.fixture = fixture.name;
  report.group_label = fixture.group_label;
  report.degree = fixture.degree;
  report.budget = budget;
  auto &steps = report.steps;
  std::size_t const n = fixture.degree;

  // parse
  Permutation x = parse_permutation(fixture.x_text, n);
  Permutation y = parse_permutation(fixture.y_text, n);
  auto parse_poly = [](std::optional<std::string> const &text)
    -> std::optional<FactoredPolynomial> {
    if (!text)
      return std::nullopt;
    return parse_factored(*text);
  };
  auto p = parse_poly(fixture.p_text);
  auto q = parse_poly(fixture.q_text);
  auto r = parse_poly(fixture.r_text);
  {
    auto s = outcome("parse", true);
    s.evidence = {{"degree", std::to_string(n)},
                  {"polynomials", std::string(p ? "p" : "") + (q ? "q" : "") + (r ? "r" : "")}};
    steps.push_back(s);
  }

  // closure
  TripleDatum t = close_triple(x, y);
  {
    bool ok = compose(compose(t.x, t.y), t.z).is_identity();
    auto s = outcome("closure", ok);
    s.evidence = {{"z", to_cycle_string(t.z)}};
    steps.push_back(s);
  }

  std::array<CycleType, 3> types{cycle_type(t.x), cycle_type(t.y), cycle_type(t.z)};
  {
    std::array<std::optional<CycleType>, 3> claimed{fixture.type_x, fixture.type_y,
                                                    fixture.type_z};
    char const *names[] = {"x", "y", "z"};
    bool any = false, ok = true;
    StepOutcome s;
    for (int i = 0; i < 3; ++i) {
      s.evidence.push_back({std::string("type_") + names[i], types[i].to_string()});
      if (claimed[i]) {
        any = true;
        s.evidence.push_back({std::string("claimed_") + names[i], claimed[i]->to_string()});
        ok = ok && *claimed[i] == types[i];
      }
    }
    if (any) {
      s.name = "types";
      s.status = ok ? StepStatus::pass : StepStatus::fail;
    } else {
      auto e = s.evidence;
      s = skipped("types", "fixture states no cycle types");
      s.evidence = e;
    }
    steps.push_back(s);
  }

  {
    StepOutcome s;
    try {
      std::size_t gen = genus(t);
      s = outcome("genus", gen == 0);
      s.evidence = {{"genus", std::to_string(gen)}};
    } catch (std::exception const &e) {
      s = outcome("genus", false, e.what());
    }
    std::size_t sum = 0;
    for (auto const &ty : types)
      sum += n - ty.cycle_count();
    s.evidence.push_back({"index_sum", std::to_string(sum)});
    steps.push_back(s);
  }

  PermGroup g({t.x, t.y});
  bool order_ok = true;
  {
    StepOutcome s;
    if (fixture.claimed_order) {
      order_ok = g.order() == *fixture.claimed_order;
      s = outcome("order", order_ok);
      s.evidence = {{"order", g.order().get_str()},
                    {"claimed", fixture.claimed_order->get_str()}};
    } else {
      s = outcome("order", true, "no claimed order");
      s.evidence = {{"order", g.order().get_str()}};
    }
    s.evidence.push_back({"base_length", std::to_string(g.chain().depth())});
    steps.push_back(s);
  }

  bool transitive = g.is_transitive();
  steps.push_back(outcome("transitivity", transitive));

  std::optional<std::vector<std::size_t>> subdegrees;
  bool subdegrees_ok = true;
  if (transitive) {
    subdegrees = g.subdegrees();
    StepOutcome s;
    if (fixture.subdegrees) {
      auto claimed = *fixture.subdegrees;
      std::sort(claimed.begin(), claimed.end());
      subdegrees_ok = claimed == *subdegrees;
      s = outcome("subdegrees", subdegrees_ok);
      s.evidence = {{"subdegrees", join(*subdegrees)}, {"claimed", join(claimed)}};
    } else {
      s = outcome("subdegrees", true, "no claimed subdegrees");
      s.evidence = {{"subdegrees", join(*subdegrees)}};
    }
    steps.push_back(s);

    auto v = divisibility_primitivity(*subdegrees, n);
    auto d = outcome("divisibility_criterion", true,
                     "informational; inconclusive is not a failure");
    d.evidence = {{"verdict", v == PrimitivityVerdict::certified_primitive
                                ? "certified_primitive" : "inconclusive"}};
    steps.push_back(d);
  } else {
    steps.push_back(outcome("subdegrees", false, "group is not transitive"));
    steps.push_back(skipped("divisibility_criterion", "group is not transitive"));
  }

  bool primitive = transitive && is_primitive(g);
  steps.push_back(outcome("primitivity", primitive,
                          transitive ? "" : "group is not transitive"));

  // classes of x, y, z
  std::array<std::optional<ConjugacyClass>, 3> classes;
  {
    StepOutcome s;
    s.name = "rationality";
    bool all_known = true, all_rational = true;
    std::string budget_note;
    char const *names[] = {"x", "y", "z"};
    auto members = t.members();
    for (int i = 0; i < 3; ++i) {
      try {
        classes[i] = class_orbit(g, *members[i], budget);
        bool rational = is_rational_class(*classes[i]);
        all_rational = all_rational && rational;
        s.evidence.push_back({std::string("class_size_") + names[i],
                              std::to_string(classes[i]->size)});
        s.evidence.push_back({std::string("rational_") + names[i], rational ? "yes" : "no"});
      } catch (ResourceError const &e) {
        all_known = false;
        budget_note = e.what();
        s.evidence.push_back({std::string("rational_") + names[i], "unknown"});
      }
    }
    if (!all_rational)
      s.status = StepStatus::fail;
    else if (!all_known) {
      s.status = StepStatus::skipped;
      s.detail = "budget: " + budget_note;
    }
    steps.push_back(s);
  }

  auto census_evidence = [](TripleCensus const &c) {
    return std::vector<std::pair<std::string, std::string>>{
      {"pair_count", std::to_string(c.pair_count)},
      {"generating_pairs", std::to_string(c.generating_pairs)},
      {"all_generate", c.all_generate ? "true" : "false"},
      {"center_order", std::to_string(c.center_order)},
      {"generating_orbit_count", str(c.generating_orbit_count)},
      {"orbit_count", c.orbit_count ? str(*c.orbit_count) : "not applicable"}};
  };

  bool rigid = false;
  if (classes[0] && classes[1] && classes[2]) {
    try {
      auto c = count_class_triples(g, *classes[0], *classes[1], *classes[2], budget);
      rigid = c.generating_orbit_count == 1;
      auto s = outcome("rigidity", rigid,
                       "generating triples in the classes of x, y, z up to conjugation");
      s.evidence = census_evidence(c);
      steps.push_back(s);
    } catch (ResourceError const &e) {
      steps.push_back(skipped("rigidity", std::string("budget: ") + e.what()));
    } catch (std::domain_error const &e) {
      steps.push_back(outcome("rigidity", false, e.what()));
    }
  } else {
    steps.push_back(skipped("rigidity", "budget: class enumeration did not finish"));
  }
  classes = {};

  {
    ClassTable table = all_classes(g, budget);
    if (!table.complete) {
      steps.push_back(skipped("uniqueness", "budget: class table incomplete (" +
                                              std::to_string(table.classes.size()) +
                                              " classes found)"));
    } else {
      try {
        auto c = count_triples_by_types(g, table, types[0], types[1], types[2], budget);
        auto s = outcome("uniqueness", c.generating_orbit_count == 1,
                         "generating triples with the cycle types of x, y, z");
        s.evidence = census_evidence(c);
        s.evidence.push_back({"class_count", std::to_string(table.classes.size())});
        steps.push_back(s);
      } catch (ResourceError const &e) {
        steps.push_back(skipped("uniqueness", std::string("budget: ") + e.what()));
      } catch (std::domain_error const &e) {
        steps.push_back(outcome("uniqueness", false, e.what()));
      }
    }
  }

  // Belyi side
  std::optional<BelyiMapDatum> datum;
  {
    StepOutcome s;
    try {
      datum = load_belyi(p, q, r, n);
      s = outcome("belyi_identity", true, "p = q + r, max(deg p, deg q) = n, gcd(p, q) = 1");
      s.evidence = {{"derived", datum->derived ? to_string(*datum->derived) : "none"},
                    {"deg_p", std::to_string(datum->p.degree())},
                    {"deg_q", std::to_string(datum->q.degree())},
                    {"deg_r", std::to_string(datum->r.degree())}};
    } catch (BelyiIdentityError const &e) {
      s = outcome("belyi_identity", false, "p - q - r is not zero");
      s.evidence = {{"difference", e.difference().to_string()}};
    } catch (std::exception const &e) {
      s = outcome("belyi_identity", false, e.what());
    }
    steps.push_back(s);
  }

  std::optional<RamificationProfile> profile;
  if (datum) {
    try {
      profile = ramification_profile(*datum);
      bool ok = true;
      for (auto const *f : profile->fibers())
        ok = ok && f->partition.degree() == n;
      auto s = outcome("profile", ok);
      s.evidence = {{"over_0", profile->over0.partition.to_string()},
                    {"over_1", profile->over1.partition.to_string()},
                    {"over_inf", profile->over_inf.partition.to_string()},
                    {"infinity_parts", std::to_string(profile->over0.at_infinity) + "," +
                                         std::to_string(profile->over1.at_infinity) + "," +
                                         std::to_string(profile->over_inf.at_infinity)}};
      steps.push_back(s);
    } catch (std::exception const &e) {
      steps.push_back(outcome("profile", false, e.what()));
    }
  } else {
    steps.push_back(skipped("profile", "no valid Belyi datum"));
  }

  if (profile) {
    std::size_t sum = 0;
    for (auto const *f : profile->fibers())
      sum += n - f->partition.cycle_count();
    auto s = outcome("certificate", certify_three_branch_points(*profile, n));
    s.evidence = {{"index_sum", std::to_string(sum)}, {"expected", std::to_string(2 * n - 2)}};
    steps.push_back(s);

    auto m = match_profile_to_triple(*profile, types);
    auto sm = outcome("profile_match", m.matched(),
                      m.ambiguous() ? "several assignments fit" : "");
    char const *member[] = {"x", "y", "z"};
    char const *fiber[] = {"0", "1", "inf"};
    for (std::size_t k = 0; k < m.assignments.size(); ++k) {
      std::string a;
      for (int i = 0; i < 3; ++i)
        a += std::string(i ? "," : "") + fiber[i] + ":" + member[m.assignments[k][i]];
      sm.evidence.push_back({"assignment_" + std::to_string(k + 1), a});
    }
    steps.push_back(sm);
  } else {
    steps.push_back(skipped("certificate", "no ramification profile"));
    steps.push_back(skipped("profile_match", "no ramification profile"));
  }

  {
    // order, subdegrees and primitivity are the evidence available for a
    // name; A = G is the consequence of rational rigidity, not recomputed
    bool ok = order_ok && subdegrees_ok && primitive;
    auto s = outcome("identification", ok,
                     ok ? "consistent with claim" : "evidence contradicts the claimed group");
    s.evidence = {{"claimed_group", fixture.group_label},
                  {"arithmetic_equals_geometric",
                   rigid ? "implied by rational rigidity" : "not established"}};
    steps.push_back(s);
  }
  return report;
}

ScanReport run_scan(FixtureFile const &fixture, Budget const &budget)
{
  if (!fixture.is_almost_simple || !fixture.is_sym_or_alt)
    throw std::invalid_argument("scan needs the almost_simple and sym_or_alt flags");
  ScanReport out;
  out.fixture = fixture.name;
  out.group_label = fixture.group_label;
  out.budget = budget;

  Permutation x = parse_permutation(fixture.x_text, fixture.degree);
  Permutation y = parse_permutation(fixture.y_text, fixture.degree);
  PermGroup g({x, y});
  ClassTable table = all_classes(g, budget);
  out.table_complete = table.complete;
  out.class_count = table.classes.size();
  if (!table.complete) {
    out.result.reason = "class table incomplete within budget";
    return out;
  }
  GroupMetadata meta{*fixture.is_almost_simple, *fixture.is_sym_or_alt};
  out.result = scan_nice_triples(g, table, meta, budget);
  return out;
}

namespace
{

nlohmann::ordered_json budget_json(Budget const &b)
{
  return {{"class_size", std::to_string(b.max_class_size)},
          {"seconds", std::to_string(b.seconds.count())},
          {"seed", std::to_string(b.seed)}};
}

} // namespace

std::string to_json(VerificationReport const &r, int indent)
{
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["kind"] = "verify";
  j["fixture"] = r.fixture;
  j["group"] = r.group_label;
  j["degree"] = std::to_string(r.degree);
  j["budget"] = budget_json(r.budget);
  j["steps"] = nlohmann::ordered_json::array();
  for (auto const &s : r.steps) {
    nlohmann::ordered_json e;
    for (auto const &[k, v] : s.evidence)
      e[k] = v;
    j["steps"].push_back({{"name", s.name},
                          {"status", to_string(s.status)},
                          {"detail", s.detail},
                          {"evidence", e.is_null() ? nlohmann::ordered_json::object() : e}});
  }
  j["verdict"] = to_string(r.verdict());
  return j.dump(indent);
}

std::string to_json(ScanReport const &r, int indent)
{
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["kind"] = "scan";
  j["fixture"] = r.fixture;
  j["group"] = r.group_label;
  j["budget"] = budget_json(r.budget);
  j["table_complete"] = r.table_complete;
  j["class_count"] = std::to_string(r.class_count);
  j["applicable"] = r.result.applicable;
  j["reason"] = r.result.reason;
  j["unordered_count"] = std::to_string(r.result.unordered_count());
  j["ordered_count"] = std::to_string(r.result.ordered_count());
  j["triples"] = nlohmann::ordered_json::array();
  for (auto const &t : r.result.triples) {
    nlohmann::ordered_json e;
    e["classes"] = {std::to_string(t.classes[0]), std::to_string(t.classes[1]),
                    std::to_string(t.classes[2])};
    e["types"] = {t.types[0].to_string(), t.types[1].to_string(), t.types[2].to_string()};
    e["orderings"] = std::to_string(t.orderings);
    e["pair_count"] = std::to_string(t.census.pair_count);
    e["generating_orbit_count"] = t.census.generating_orbit_count.get_str();
    e["all_generate"] = t.census.all_generate;
    j["triples"].push_back(e);
  }
  return j.dump(indent);
}

} // namespace belyicert
