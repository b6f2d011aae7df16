#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "belyicert/errors.hpp"
#include "belyicert/fixture.hpp"
#include "belyicert/report.hpp"

using namespace belyicert;

namespace
{

// exit codes
constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct BudgetFlags
{
  std::string class_size; // accepts 3e7
  double seconds = -1;
  std::uint64_t seed = 1;
};

std::uint64_t parse_count(std::string const &s)
{
  double v = std::stod(s);
  if (v < 0 || v != std::floor(v))
    throw std::invalid_argument("class size must be a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

// command line flags win over the fixture's [budget] section, which wins
// over the defaults
Budget effective_budget(BudgetFlags const &flags, FixtureFile const &f)
{
  Budget b;
  b.seed = flags.seed;
  if (!flags.class_size.empty())
    b.max_class_size = parse_count(flags.class_size);
  else if (f.budget_class_size)
    b.max_class_size = *f.budget_class_size;
  if (flags.seconds >= 0)
    b.seconds = std::chrono::duration<double>(flags.seconds);
  else if (f.budget_seconds)
    b.seconds = std::chrono::duration<double>(*f.budget_seconds);
  return b;
}

void write_json(std::string const &path, std::string const &doc)
{
  if (path.empty())
    return;
  if (path == "-") {
    std::cout << doc << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << doc << "\n";
}

std::string json_list(std::vector<std::string> const &docs)
{
  if (docs.size() == 1)
    return docs[0];
  std::string doc = "[\n";
  for (std::size_t i = 0; i < docs.size(); ++i)
    doc += docs[i] + (i + 1 < docs.size() ? ",\n" : "\n");
  return doc + "]";
}

void print_summary(VerificationReport const &r)
{
  std::cout << r.fixture << " (" << r.group_label << ", degree " << r.degree
            << "): " << to_string(r.verdict()) << "\n";
  for (auto const &s : r.steps) {
    std::cout << "  " << to_string(s.status) << "  " << s.name;
    for (auto const &[k, v] : s.evidence)
      if (v.size() <= 60)
        std::cout << "  " << k << "=" << v;
      else
        std::cout << "  " << k << "=<" << v.size() << " chars, see --json>";
    if (!s.detail.empty() && s.status != StepStatus::pass)
      std::cout << "  [" << s.detail << "]";
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact certification of Belyi maps and their monodromy groups"};
  app.require_subcommand(1);

  BudgetFlags flags;
  auto add_budget = [&](CLI::App *sub) {
    sub->add_option("--budget-class-size", flags.class_size,
                    "largest conjugacy class to enumerate (default 3e7)");
    sub->add_option("--budget-seconds", flags.seconds,
                    "wall-clock limit per class enumeration or census (default 600)");
    sub->add_option("--seed", flags.seed, "seed for random group elements")
      ->capture_default_str();
  };

  std::vector<std::string> verify_files;
  std::string verify_json;
  bool quiet = false;
  auto *verify = app.add_subcommand("verify", "run the certification pipeline on fixtures");
  verify->add_option("files", verify_files, "fixture files")->required()->check(CLI::ExistingFile);
  verify->add_option("--json", verify_json, "write the JSON report here ('-' for stdout)");
  verify->add_flag("-q,--quiet", quiet, "no per-step summary");
  add_budget(verify);

  std::vector<std::string> scan_files;
  std::string scan_json;
  auto *scan = app.add_subcommand("scan", "list nice class triples of fixture groups");
  scan->add_option("files", scan_files, "fixture files")->required()->check(CLI::ExistingFile);
  scan->add_option("--json", scan_json, "write the JSON report here ('-' for stdout)");
  add_budget(scan);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*verify) {
      std::vector<std::string> docs;
      bool failed = false, inconclusive = false;
      for (auto const &file : verify_files) {
        FixtureFile f = load_fixture(file);
        VerificationReport r = run_verify(f, effective_budget(flags, f));
        if (!quiet)
          print_summary(r);
        failed = failed || r.verdict() == Verdict::fail;
        inconclusive = inconclusive || r.verdict() == Verdict::inconclusive;
        docs.push_back(to_json(r));
      }
      write_json(verify_json, json_list(docs));
      return failed ? exit_fail : inconclusive ? exit_budget : exit_pass;
    }

    // totals per (group, degree); distinct actions of one group add up
    std::map<std::pair<std::string, std::size_t>, std::size_t> totals;
    std::vector<std::string> docs;
    bool incomplete = false;
    for (auto const &file : scan_files) {
      FixtureFile f = load_fixture(file);
      ScanReport r = run_scan(f, effective_budget(flags, f));
      docs.push_back(to_json(r));
      std::cout << r.fixture << " (" << r.group_label << ", degree " << f.degree << "): ";
      if (!r.table_complete) {
        std::cout << "class table incomplete within budget\n";
        incomplete = true;
        continue;
      }
      if (!r.result.applicable)
        std::cout << "not applicable (" << r.result.reason << ")\n";
      else
        std::cout << r.result.unordered_count() << " nice class triples up to ordering, "
                  << r.result.ordered_count() << " ordered\n";
      for (auto const &t : r.result.triples)
        std::cout << "  " << t.types[0] << " / " << t.types[1] << " / " << t.types[2]
                  << "  classes " << t.classes[0] << "," << t.classes[1] << ","
                  << t.classes[2] << "\n";
      totals[{r.group_label, f.degree}] += r.result.unordered_count();
    }
    if (scan_files.size() > 1)
      for (auto const &[key, count] : totals)
        std::cout << "total " << key.first << " degree " << key.second << ": " << count
                  << "\n";
    write_json(scan_json, json_list(docs));
    return incomplete ? exit_budget : exit_pass;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
}
