#include <doctest.h>

#include <random>

#include "madic/spinal.hpp"
#include "madic/tree_core.hpp"
#include "oracles.hpp"

using namespace madic;

namespace {

Vertex V(std::string_view s, std::size_t m) { return parse_vertex(s, m); }

oracle::Images images_of(const Perm& p) {
  return oracle::Images(p.images().begin(), p.images().end());
}

oracle::Automaton::Word random_oracle_word(const oracle::Automaton& A, std::mt19937_64& rng,
                                           std::size_t length) {
  std::vector<std::size_t> states;
  for (const auto& [name, id] : A.names) states.push_back(id);
  oracle::Automaton::Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({states[rng() % states.size()], rng() % 2 == 0});
  }
  return w;
}

}  // namespace

TEST_CASE("vertices") {
  CHECK(V("-", 3).empty());
  CHECK(V("021", 3) == Vertex{0, 2, 1});
  CHECK(V("10,0,11", 12) == Vertex{10, 0, 11});
  CHECK(to_string(Vertex{0, 2, 1}, 3) == "021");
  for (std::size_t r = 0; r < 27; ++r) CHECK(vertex_rank(vertex_from_rank(r, 3, 3), 3) == r);
}

TEST_CASE("action of fixture generators") {
  const auto P = SpinalGroup::create(pervova());
  const Element a = P->parse_word("a");
  const Element b = P->parse_word("b");
  CHECK(madic::apply(a, V("0", 3)) == V("1", 3));
  CHECK(madic::apply(b, V("10", 3)) == V("11", 3));
  CHECK(madic::apply(Element::identity(3), V("2102", 3)) == V("2102", 3));

  const auto G = SpinalGroup::create(grigorchuk());
  CHECK(label(G->parse_word("b"), V("0", 2)) == Perm({1, 0}));
  CHECK(label(G->parse_word("d"), V("0", 2)).is_identity());
  CHECK(label(Element::rooted(Perm({1, 2, 0})), Vertex{}) == Perm({1, 2, 0}));
}

TEST_CASE("sections") {
  const auto P = SpinalGroup::create(pervova());
  const Element c = P->parse_word("c");
  CHECK(equal_to_depth(section(c, V("1", 3)), c, 5));
  CHECK(section(Element::rooted(Perm({1, 2, 0})), V("2", 3)).empty());

  const auto S = SpinalGroup::create(gupta_sidki());
  const Element bb = S->parse_word("b*b");
  CHECK(equal_to_depth(section(bb, V("0", 3)), bb, 5));
  CHECK(section(bb, V("0", 3)) == bb);

  // section(g, uv) = section(section(g, u), v)
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Element g = random_word(*P, rng, 8);
    const Vertex u = vertex_from_rank(rng() % 9, 2, 3);
    const Vertex v = vertex_from_rank(rng() % 3, 1, 3);
    Vertex uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(equal_to_depth(section(g, uv), section(section(g, u), v), 3));
  }
}

TEST_CASE("portraits") {
  const Element k = kappa(Perm({1, 2, 0}));
  const auto pk = portrait(k, 2);
  CHECK(pk.labels().size() == 4);
  for (const auto& l : pk.labels()) CHECK(l == Perm({1, 2, 0}));

  const auto G = SpinalGroup::create(grigorchuk());
  const auto pb = portrait(G->parse_word("b"), 3);
  const Perm swap{1, 0};
  CHECK(pb.at({}).is_identity());
  CHECK(pb.at(V("0", 2)) == swap);
  CHECK(pb.at(V("1", 2)).is_identity());
  CHECK(pb.at(V("10", 2)) == swap);
  CHECK(pb.at(V("11", 2)).is_identity());
  CHECK(pb.at(V("00", 2)).is_identity());
  CHECK(pb.at(V("01", 2)).is_identity());

  const auto pe = portrait(Element::identity(3), 3);
  for (const auto& l : pe.labels()) CHECK(l.is_identity());
  CHECK(to_dot(pb).find("digraph") != std::string::npos);
  CHECK_THROWS(portrait(k, 12, 1000));
}

TEST_CASE("equality to a depth") {
  const auto S = SpinalGroup::create(gupta_sidki());
  const Element b = S->parse_word("b");
  for (std::size_t n = 0; n < 5; ++n) CHECK(equal_to_depth(b, b, n));
  CHECK(equal_to_depth(b * b * b, Element::identity(3), 4));
  CHECK_FALSE(equal_to_depth(Element::rooted(Perm({1, 0})), Element::identity(2), 1));
  CHECK(equal_to_depth(Element::rooted(Perm({1, 0})), Element::identity(2), 0));
}

TEST_CASE("constant portraits") {
  CHECK(equal_to_depth(kappa(Perm::identity(3)), Element::identity(3), 6));
  const Perm t{0, 2, 1};
  const Element k = kappa(t);
  const auto p = portrait(k, 4);
  for (const auto& l : p.labels()) CHECK(l == t);
  CHECK(section(k, V("021", 3)) == k);
  CHECK(equal_to_depth(k * k, Element::identity(3), 5));
}

TEST_CASE("portraits agree with independent automata") {
  std::mt19937_64 rng(99);
  const std::vector<std::pair<oracle::Automaton, PolyspinalData>> cases{
      {oracle::grigorchuk_automaton(), grigorchuk()},
      {oracle::gupta_sidki_automaton(), gupta_sidki()},
      {oracle::pervova_automaton(), pervova()},
  };
  for (const auto& [A, data] : cases) {
    const auto group = SpinalGroup::create(data);
    for (int trial = 0; trial < 60; ++trial) {
      const auto w = random_oracle_word(A, rng, 1 + rng() % 10);
      const Element g = group->parse_word(A.to_word(w));
      const std::size_t depth = data.m == 2 ? 6 : 4;
      const auto p = portrait(g, depth);
      std::size_t index = 0;
      for (std::size_t n = 0; n < depth; ++n) {
        std::size_t width = 1;
        for (std::size_t i = 0; i < n; ++i) width *= data.m;
        for (std::size_t r = 0; r < width; ++r, ++index) {
          const Vertex u = vertex_from_rank(r, n, data.m);
          const std::vector<std::uint32_t> raw(u.begin(), u.end());
          CHECK(images_of(p.labels()[index]) == A.word_label(w, raw));
          const auto image = madic::apply(g, u);
          CHECK(std::vector<std::uint32_t>(image.begin(), image.end()) == A.apply(w, raw));
        }
      }
    }
  }
}
