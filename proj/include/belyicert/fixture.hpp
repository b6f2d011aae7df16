#ifndef BELYICERT_FIXTURE_HPP
#define BELYICERT_FIXTURE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "belyicert/permutation.hpp"

namespace belyicert
{

/// One transcribed dataset: a generating pair, claimed invariants and two
/// of the three Belyi polynomials.
///
/// On disk this is an INI-like UTF-8 file. `[section]` headers, `key = value`
/// lines, `#` comments, and indented continuation lines that are appended to
/// the previous value. Sections and keys:
///
///   [fixture] name, group, degree, order?, almost_simple?, sym_or_alt?
///   [triple]  x, y, type_x?, type_y?, type_z?, subdegrees?
///   [belyi]   p?, q?, r?            (two or three of them)
///   [budget]  class_size?, seconds? (override the command line defaults)
struct FixtureFile
{
  std::string name;
  std::string group_label;
  std::size_t degree = 0;
  std::optional<mpz_class> claimed_order;
  std::optional<bool> is_almost_simple;
  std::optional<bool> is_sym_or_alt;

  std::string x_text;
  std::string y_text;
  std::optional<CycleType> type_x;
  std::optional<CycleType> type_y;
  std::optional<CycleType> type_z;
  std::optional<std::vector<std::size_t>> subdegrees;

  std::optional<std::string> p_text;
  std::optional<std::string> q_text;
  std::optional<std::string> r_text;

  std::optional<std::uint64_t> budget_class_size;
  std::optional<double> budget_seconds;
};

/// Throws ParseError (position is the byte offset of the offending line).
FixtureFile parse_fixture(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error on I/O failure.
FixtureFile load_fixture(std::filesystem::path const &path);

} // namespace belyicert

#endif // BELYICERT_FIXTURE_HPP
