#ifndef BELYICERT_REPORT_HPP
#define BELYICERT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "belyicert/classes.hpp"
#include "belyicert/fixture.hpp"
#include "belyicert/triples.hpp"

namespace belyicert
{

inline constexpr int report_schema_version = 1;

enum class StepStatus
{
  pass,
  fail,
  skipped
};

char const *to_string(StepStatus s);

struct StepOutcome
{
  std::string name;
  StepStatus status = StepStatus::pass;
  /// human-readable; for skipped steps, the reason
  std::string detail;
  /// evidence values, all as strings (big integers in decimal)
  std::vector<std::pair<std::string, std::string>> evidence;
};

enum class Verdict
{
  pass,
  fail,
  inconclusive
};

char const *to_string(Verdict v);

struct VerificationReport
{
  std::string fixture;
  std::string group_label;
  std::size_t degree = 0;
  Budget budget;
  std::vector<StepOutcome> steps;

  StepOutcome const *step(std::string const &name) const;

  /// fail if any step failed; inconclusive if one of closure, genus,
  /// belyi_identity, certificate, profile_match was skipped; pass otherwise
  Verdict verdict() const;
};

/// Runs the full pipeline. Only permutation parse errors propagate
/// (ParseError); everything else becomes a step outcome.
VerificationReport run_verify(FixtureFile const &fixture, Budget const &budget);

struct ScanReport
{
  std::string fixture;
  std::string group_label;
  Budget budget;
  bool table_complete = false;
  std::size_t class_count = 0;
  ScanResult result;
};

/// Throws std::invalid_argument when the fixture lacks the almost_simple or
/// sym_or_alt flags. An incomplete class table is reported, not thrown.
ScanReport run_scan(FixtureFile const &fixture, Budget const &budget);

/// JSON documents with a schema_version field.
std::string to_json(VerificationReport const &r, int indent = 2);
std::string to_json(ScanReport const &r, int indent = 2);

} // namespace belyicert

#endif // BELYICERT_REPORT_HPP
