#include "belyicert/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "belyicert/errors.hpp"

namespace belyicert
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

struct Entry
{
  std::string value;
  std::size_t offset;
};

using Sections = std::map<std::string, std::map<std::string, Entry>>;

Sections split_sections(std::string_view text)
{
  Sections sections;
  std::string section;
  Entry *last = nullptr;

  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    std::size_t line_offset = offset;
    offset = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty())
      continue;

    bool indented = std::isspace(static_cast<unsigned char>(line.front()));
    std::string_view body = trim(line);

    if (indented) {
      if (!last)
        throw ParseError("continuation line without a preceding key", line_offset);
      last->value += ' ';
      last->value += body;
      continue;
    }

    if (body.front() == '[') {
      if (body.back() != ']')
        throw ParseError("unterminated section header", line_offset);
      section = std::string(trim(body.substr(1, body.size() - 2)));
      sections[section];
      last = nullptr;
      continue;
    }

    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'key = value'", line_offset);
    if (section.empty())
      throw ParseError("key outside of any section", line_offset);
    std::string key(trim(body.substr(0, eq)));
    auto &slot = sections[section];
    if (slot.count(key))
      throw ParseError("duplicate key '" + key + "'", line_offset);
    slot[key] = Entry{std::string(trim(body.substr(eq + 1))), line_offset};
    last = &slot[key];
  }
  return sections;
}

bool parse_bool(Entry const &e)
{
  if (e.value == "true" || e.value == "yes")
    return true;
  if (e.value == "false" || e.value == "no")
    return false;
  throw ParseError("expected true or false", e.offset);
}

std::uint64_t parse_uint(Entry const &e)
{
  // accepts plain integers and the "3e7" shorthand
  std::string v = e.value;
  if (auto pos = v.find_first_of("eE"); pos != std::string::npos) {
    std::size_t mantissa = 0, exponent = 0;
    auto [p1, ec1] = std::from_chars(v.data(), v.data() + pos, mantissa);
    auto [p2, ec2] = std::from_chars(v.data() + pos + 1, v.data() + v.size(), exponent);
    if (ec1 != std::errc() || ec2 != std::errc() || p2 != v.data() + v.size() ||
        exponent > 18)
      throw ParseError("expected an integer", e.offset);
    std::uint64_t result = mantissa;
    for (std::size_t i = 0; i < exponent; ++i)
      result *= 10;
    return result;
  }
  std::uint64_t result = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), result);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("expected an integer", e.offset);
  return result;
}

std::vector<std::size_t> parse_list(Entry const &e)
{
  std::vector<std::size_t> result;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw ParseError("expected a comma-separated integer list", e.offset);
    result.push_back(v);
  }
  return result;
}

CycleType parse_type(Entry const &e)
{
  try {
    return CycleType::parse(e.value);
  } catch (ParseError const &err) {
    throw ParseError(std::string("bad cycle type: ") + err.what(), e.offset);
  }
}

} // namespace

FixtureFile parse_fixture(std::string_view text)
{
  Sections sections = split_sections(text);
  FixtureFile f;

  static std::map<std::string, std::vector<std::string>> const known = {
    {"fixture", {"name", "group", "degree", "order", "almost_simple", "sym_or_alt"}},
    {"triple", {"x", "y", "type_x", "type_y", "type_z", "subdegrees"}},
    {"belyi", {"p", "q", "r"}},
    {"budget", {"class_size", "seconds"}},
  };
  for (auto const &[name, entries] : sections) {
    auto it = known.find(name);
    if (it == known.end())
      throw ParseError("unknown section [" + name + "]", 0);
    for (auto const &[key, entry] : entries)
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw ParseError("unknown key '" + key + "' in [" + name + "]", entry.offset);
  }

  auto find = [&](std::string const &sec, std::string const &key) -> Entry const * {
    auto s = sections.find(sec);
    if (s == sections.end())
      return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };
  auto require = [&](std::string const &sec, std::string const &key) -> Entry const & {
    if (auto e = find(sec, key))
      return *e;
    throw ParseError("missing [" + sec + "] " + key, 0);
  };

  f.name = require("fixture", "name").value;
  if (auto e = find("fixture", "group"))
    f.group_label = e->value;
  f.degree = parse_uint(require("fixture", "degree"));
  if (f.degree == 0 || f.degree > max_degree)
    throw ParseError("degree out of range", require("fixture", "degree").offset);
  if (auto e = find("fixture", "order")) {
    try {
      f.claimed_order = mpz_class(e->value);
    } catch (std::invalid_argument const &) {
      throw ParseError("order must be an integer", e->offset);
    }
  }
  if (auto e = find("fixture", "almost_simple"))
    f.is_almost_simple = parse_bool(*e);
  if (auto e = find("fixture", "sym_or_alt"))
    f.is_sym_or_alt = parse_bool(*e);

  f.x_text = require("triple", "x").value;
  f.y_text = require("triple", "y").value;
  if (auto e = find("triple", "type_x"))
    f.type_x = parse_type(*e);
  if (auto e = find("triple", "type_y"))
    f.type_y = parse_type(*e);
  if (auto e = find("triple", "type_z"))
    f.type_z = parse_type(*e);
  if (auto e = find("triple", "subdegrees"))
    f.subdegrees = parse_list(*e);

  if (auto e = find("belyi", "p"))
    f.p_text = e->value;
  if (auto e = find("belyi", "q"))
    f.q_text = e->value;
  if (auto e = find("belyi", "r"))
    f.r_text = e->value;

  if (auto e = find("budget", "class_size"))
    f.budget_class_size = parse_uint(*e);
  if (auto e = find("budget", "seconds"))
    f.budget_seconds = static_cast<double>(parse_uint(*e));
  return f;
}

FixtureFile load_fixture(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

} // namespace belyicert
