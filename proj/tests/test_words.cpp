#include "doctest.h"
#include "toricap/words.hpp"

#include <algorithm>

using namespace toricap;

namespace {
ToricDomain dom(const std::string& s) {
  return ToricDomain::validate(parse_domain_spec(s));
}
}  // namespace

TEST_CASE("orbit labels and indices") {
  CHECK(cz_index(elliptic(1, 0)) == 3);
  CHECK(cz_index(elliptic(0, 1)) == 3);
  CHECK(cz_index(elliptic(1, 1)) == 5);
  CHECK(cz_index(hyperbolic(1, 1)) == 4);
  CHECK(cz_index(hyperbolic(2, 3)) == 10);
  CHECK_THROWS_AS(elliptic(0, 0), BadParameter);
  CHECK_THROWS_AS(elliptic(-1, 2), BadParameter);
  CHECK_THROWS_AS(hyperbolic(0, 1), BadParameter);
}

TEST_CASE("word basics") {
  Word w = Word::parse("e(1,1)*e(0,1)*e(0,1)");
  CHECK(w.size() == 3);
  CHECK(w.elliptic_only());
  CHECK(w.str() == "e(0,1)*e(0,1)*e(1,1)");  // storage is sorted
  CHECK(Word::parse(w.str()) == w);
  CHECK(word_index(w) == 12);
  CHECK(word_index(Word::parse("e(1,0)")) == 2);
  CHECK(word_index(Word::parse("h(1,1)*h(1,1)")) == 8);
  CHECK(Word::parse("h(1,1)").hyperbolic_count() == 1);
  CHECK_THROWS_AS(Word::parse(""), BadParameter);
  CHECK_THROWS_AS(Word::parse("e(1,1"), ParseError);
  CHECK_THROWS_AS(Word::parse("x(1,1)"), ParseError);
  CHECK_THROWS_AS(Word::parse("e(0,0)"), BadParameter);

  Word c = Word::parse("e(1,0)").concat(Word::parse("e(0,1)"));
  CHECK(c == Word::parse("e(0,1)*e(1,0)"));
}

TEST_CASE("action sums clamped supports") {
  auto e21 = dom("ellipsoid:2,1");
  CHECK(action(Word::parse("e(1,1)"), e21).rat() == 2);
  CHECK(action(Word::parse("e(0,1)*e(0,1)"), e21).rat() == 2);
  auto q = dom("quad:1,1/2,3/2");
  // support of (1,2): max over (c,0), (a,b), (0,1)
  CHECK(action(Word::parse("e(1,2)"), q).rat() == 2);
}

TEST_CASE("permissibility") {
  CHECK(is_strongly_permissible(Word::parse("e(1,0)")));
  CHECK(is_strongly_permissible(Word::parse("e(0,1)")));
  CHECK_FALSE(is_strongly_permissible(Word::parse("e(2,0)")));
  CHECK(is_weakly_permissible(Word::parse("e(2,0)")));
  CHECK(is_weakly_permissible(Word::parse("e(0,5)")));
  CHECK(is_strongly_permissible(Word::parse("e(1,0)*e(0,1)")));
  CHECK_FALSE(is_strongly_permissible(Word::parse("e(1,0)*e(2,0)")));
  CHECK_FALSE(is_weakly_permissible(Word::parse("e(1,0)*e(2,0)")));
  CHECK(is_strongly_permissible(Word::parse("h(1,1)*e(3,0)")));
}

TEST_CASE("staircase region and ech index") {
  auto r1 = staircase_region(Word::parse("e(1,1)"));
  CHECK(r1.total_count() == 3);
  CHECK(r1.area2() == 1);
  CHECK(ech_index(Word::parse("e(1,1)")) == 4);

  auto r2 = staircase_region(Word::parse("e(0,1)"));
  CHECK(r2.total_count() == 2);
  CHECK(r2.area2() == 0);
  CHECK(ech_index(Word::parse("e(0,1)")) == 2);

  auto r3 = staircase_region(Word::parse("e(1,1)*e(1,1)"));
  CHECK(r3.total_count() == 6);
  CHECK(ech_index(Word::parse("e(1,1)*e(1,1)")) == 10);

  CHECK(ech_index(Word::parse("h(1,1)")) == 3);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(Word::parse("e(0,1)*e(1,1)")) == CanonicalForm::Form1);
  CHECK(canonical_form(Word::parse("e(0,1)*e(0,1)*e(1,3)")) ==
        CanonicalForm::Form2);
  CHECK(canonical_form(Word::parse("e(0,1)*e(1,0)")) == CanonicalForm::Form3);
  CHECK(canonical_form(Word::parse("e(0,4)")) == CanonicalForm::Form4);
  CHECK(canonical_form(Word::parse("e(2,2)")) == CanonicalForm::None);
  CHECK(canonical_form(Word::parse("e(4,0)")) == CanonicalForm::None);
  CHECK(is_canonical_either_orientation(Word::parse("e(4,0)")));
  CHECK(is_canonical_either_orientation(Word::parse("e(1,0)*e(1,1)")));
  CHECK_FALSE(is_canonical_either_orientation(Word::parse("e(2,2)")));
}

TEST_CASE("canonical candidates have the right index") {
  for (long k = 1; k <= 12; ++k) {
    auto cands = canonical_candidates(k);
    CHECK(!cands.empty());
    for (const auto& w : cands) {
      CHECK(word_index(w) == 2 * k);
      CHECK(is_weakly_permissible(w));
      CHECK(is_canonical_either_orientation(w));
    }
    CHECK(std::is_sorted(cands.begin(), cands.end()));
    CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
  }
  auto c4 = canonical_candidates(4);
  CHECK(std::count(c4.begin(), c4.end(), Word::parse("e(0,1)*e(1,1)")) == 1);
  CHECK(std::count(c4.begin(), c4.end(), Word::parse("e(1,3)")) == 1);
  CHECK(std::count(c4.begin(), c4.end(), Word::parse("e(0,4)")) == 1);
  CHECK(std::count(c4.begin(), c4.end(), Word::parse("e(4,0)")) == 1);
}

TEST_CASE("reduce") {
  auto e21 = dom("ellipsoid:2,1");
  CHECK(reduce(Word::parse("e(2,2)"), e21) == Word::parse("e(0,1)*e(1,1)"));
  CHECK(reduce(Word::parse("h(1,1)*h(1,1)"), e21) ==
        Word::parse("e(0,1)*e(1,1)"));
  // canonical inputs are fixed points
  CHECK(reduce(Word::parse("e(0,1)*e(1,1)"), e21) ==
        Word::parse("e(0,1)*e(1,1)"));
  CHECK(reduce(Word::parse("e(0,1)"), e21) == Word::parse("e(0,1)"));

  // index preserved, action never increased, result canonical
  auto e17 = dom("ellipsoid:1,7");
  for (const char* s : {"e(2,2)", "e(3,1)*e(1,3)", "h(2,2)*h(1,1)*e(0,1)",
                        "e(2,0)*e(0,2)", "e(5,5)"}) {
    Word w = Word::parse(s);
    for (const auto& d : {e21, e17}) {
      Word r = reduce(w, d);
      CHECK(word_index(r) == word_index(w));
      CHECK(action(r, d).le(action(w, d)));
      CHECK(is_canonical_either_orientation(r));
      CHECK(r.elliptic_only());
    }
  }

  // odd hyperbolic count has odd index: rejected
  CHECK_THROWS_AS(reduce(Word::parse("h(1,1)"), e21), NotPermissible);
  // not even weakly permissible
  CHECK_THROWS_AS(reduce(Word::parse("e(2,0)*e(3,0)"), e21), NotPermissible);
}
