#ifndef BELYICERT_TESTS_FIXTURES_HPP
#define BELYICERT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "belyicert/fixture.hpp"
#include "belyicert/perm_group.hpp"
#include "belyicert/triples.hpp"

namespace testing
{

inline std::string const fixture_dir = BELYICERT_FIXTURE_DIR;

inline std::vector<std::string> const fixture_names = {
  "aut_psl33_52", "pgl211_55a",  "pgl211_55b",  "nl34_56",     "aut_psu33_63",
  "aut_m22_77",   "psp44_2_85",  "aut_hs_100a", "aut_hs_100b", "o8p2_135"};

inline belyicert::FixtureFile load(std::string const &name)
{ return belyicert::load_fixture(fixture_dir + "/" + name + ".fixture"); }

inline belyicert::TripleDatum triple_of(belyicert::FixtureFile const &f)
{
  return belyicert::close_triple(belyicert::parse_permutation(f.x_text, f.degree),
                                 belyicert::parse_permutation(f.y_text, f.degree));
}

inline belyicert::PermGroup group_of(belyicert::TripleDatum const &t)
{ return belyicert::PermGroup({t.x, t.y}); }

} // namespace testing

#endif // BELYICERT_TESTS_FIXTURES_HPP
