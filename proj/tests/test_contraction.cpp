#include <doctest.h>

#include <random>

#include "madic/contraction.hpp"
#include "madic/spinal.hpp"

using namespace madic;

TEST_CASE("syllable forms") {
  const auto P = SpinalGroup::create(pervova());
  const Element a = P->parse_word("a");
  const auto fa = to_syllable_form(a);
  CHECK(fa.length() == 0);
  CHECK(fa.tail == standard_cycle(3));

  const auto f = to_syllable_form(P->parse_word("a*b*a^-1*c"));
  REQUIRE(f.length() == 2);
  CHECK(f.syllables[0].datum == 0);
  CHECK(f.syllables[0].conjugator == standard_cycle(3));
  CHECK(f.syllables[1].datum == 1);
  CHECK(f.syllables[1].conjugator.is_identity());
  CHECK(f.tail.is_identity());

  const auto bb = to_syllable_form(P->parse_word("b*b"));
  REQUIRE(bb.length() == 1);
  CHECK(bb.syllables[0].conjugator.is_identity());
  CHECK(P->format_directed(0, bb.syllables[0].element, bb.syllables[0].shift) == "b^2");

  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Element g = random_word(*P, rng, 10);
    CHECK(equal_to_depth(to_element(to_syllable_form(g)), g, 4));
  }
}

TEST_CASE("depth-two sections shorten syllable forms") {
  const auto P = SpinalGroup::create(pervova());
  const auto bc = to_syllable_form(P->parse_word("b*c"));
  REQUIRE(bc.length() == 2);
  for (std::size_t r = 0; r < 9; ++r) {
    CHECK(syllable_sections(bc, vertex_from_rank(r, 2, 3)).length() <= 1);
  }
  const auto one = to_syllable_form(P->parse_word("a*c*a"));
  for (std::size_t r = 0; r < 9; ++r) {
    CHECK(syllable_sections(one, vertex_from_rank(r, 2, 3)).length() <= 1);
  }

  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto f = to_syllable_form(random_syllable_word(*P, rng, 5));
    REQUIRE(f.length() == 5);
    for (std::size_t r = 0; r < 9; ++r) {
      CHECK(syllable_sections(f, vertex_from_rank(r, 2, 3)).length() <= 4);
    }
  }
}

TEST_CASE("syllable sections agree with element sections") {
  std::mt19937_64 rng(29);
  for (const auto& data : {pervova(), grigorchuk(), gupta_sidki()}) {
    const auto group = SpinalGroup::create(data);
    for (int i = 0; i < 40; ++i) {
      const Element g = random_word(*group, rng, 9);
      const auto f = to_syllable_form(g);
      for (Letter y = 0; y < data.m; ++y) {
        CHECK(equal_to_depth(to_element(syllable_section(f, y)), section(g, y), 4));
      }
    }
  }
}

TEST_CASE("word problem") {
  CHECK(is_identity(Element::identity(3)) == Truth::True);
  const auto S = SpinalGroup::create(gupta_sidki());
  CHECK(is_identity(S->parse_word("b^3")) == Truth::True);
  CHECK(is_identity(S->parse_word("b")) == Truth::False);
  CHECK(equal_to_depth(S->parse_word("b*b*b"), Element::identity(3), 6));
  CHECK(is_identity(S->parse_word("b*b*b")) == Truth::True);

  const auto P = SpinalGroup::create(pervova());
  const auto comm = P->parse_word("b^-1*c^-1*b*c");
  CHECK(is_identity(comm) == Truth::False);
  CHECK_FALSE(equal_to_depth(comm, Element::identity(3), 4));

  const auto G = SpinalGroup::create(grigorchuk());
  for (const char* w : {"b^2", "c^2", "d^2", "b*c*d", "(a*d)^4", "(a*c)^8", "(a*b)^16"}) {
    CHECK(is_identity(G->parse_word(w)) == Truth::True);
  }
  CHECK(is_identity(G->parse_word("a*b*a*b")) == Truth::False);
  CHECK(is_identity(G->parse_word("(a*b)^8")) == Truth::False);

  const auto traced = solve_word_problem(G->parse_word("(a*d)^4"), 1000, true);
  CHECK(traced.truth == Truth::True);
  CHECK_FALSE(traced.trace.empty());
  CHECK(solve_word_problem(G->parse_word("(a*b)^16"), 1).truth == Truth::Inconclusive);
}

TEST_CASE("word problem agrees with portraits") {
  std::mt19937_64 rng(31);
  for (const auto& data : {pervova(), grigorchuk(), gupta_sidki()}) {
    const auto group = SpinalGroup::create(data);
    for (int i = 0; i < 100; ++i) {
      const Element g = random_word(*group, rng, 1 + rng() % 12);
      const Truth t = is_identity(g);
      REQUIRE(t != Truth::Inconclusive);
      if (t == Truth::True) CHECK(equal_to_depth(g, Element::identity(data.m), 7));
      CHECK(is_identity(g * g.inverse()) == Truth::True);
    }
  }
}

TEST_CASE("nuclei") {
  const auto rooted_only = nucleus(PolyspinalData{2, {Perm({1, 0})}, {}}, 50);
  CHECK_FALSE(rooted_only.exceeded);
  CHECK(rooted_only.elements.size() == 2);

  const auto G = SpinalGroup::create(grigorchuk());
  const auto n = nucleus(grigorchuk(), 50);
  CHECK_FALSE(n.exceeded);
  REQUIRE(n.elements.size() == 5);
  for (const char* w : {"1", "a", "b", "c", "d"}) {
    const Element g = G->parse_word(w);
    bool found = false;
    for (const auto& e : n.elements) found = found || equal_to_depth(e, g, 8);
    CHECK(found);
  }

  const auto s = nucleus(gupta_sidki(), 50);
  CHECK_FALSE(s.exceeded);
  CHECK(s.elements.size() < 50);
}

TEST_CASE("reducing selftest") {
  for (const auto& data : {pervova(), grigorchuk(), gupta_sidki()}) {
    const auto report = reducing_selftest(data, 200, 12, 1);
    CHECK(report.passed == 200);
    CHECK(report.failures.empty());
  }
  const auto single = reducing_selftest(pervova(), 1, 12, 0);
  CHECK(single.passed == 1);
}
