#include <doctest.h>

#include "madic/error.hpp"
#include "madic/quotient.hpp"
#include "madic/spinal.hpp"
#include "oracles.hpp"

using namespace madic;

namespace {

std::size_t bfs_order(const PolyspinalData& data, std::size_t n) {
  std::vector<oracle::Images> gens;
  std::size_t points = 0;
  for (const auto& g : level_generators(data, n)) {
    gens.push_back(g.images);
    points = g.points();
  }
  if (gens.empty()) return 1;
  return oracle::closure_size(gens, points);
}

PolyspinalData rooted_only(std::size_t m, Perm p) { return PolyspinalData{m, {std::move(p)}, {}}; }

}  // namespace

TEST_CASE("level permutations") {
  CHECK(level_permutation(Element::identity(3), 2).is_identity());
  const auto P = SpinalGroup::create(pervova());
  CHECK(level_permutation(P->parse_word("a"), 1).images == std::vector<std::uint32_t>{1, 2, 0});

  const auto G = SpinalGroup::create(grigorchuk());
  const auto b2 = level_permutation(G->parse_word("b"), 2);
  CHECK(b2.restrict_to(1).is_identity());
  CHECK(b2.images == std::vector<std::uint32_t>{1, 0, 2, 3});

  const Element w = G->parse_word("a*b*a*c*d*b");
  const auto p3 = level_permutation(w, 3);
  for (std::size_t r = 0; r < 8; ++r) {
    CHECK(p3.images[r] == vertex_rank(madic::apply(w, vertex_from_rank(r, 3, 2)), 2));
  }
  CHECK_THROWS_AS(level_permutation(w, 13, 4096), CapExceeded);
}

TEST_CASE("level quotient orders") {
  CHECK(group_order_level(grigorchuk(), 1) == 2);
  CHECK(group_order_level(gupta_sidki(), 1) == 3);
  CHECK(group_order_level(grigorchuk(), 2) == 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(group_order_level(grigorchuk(), n) == bfs_order(grigorchuk(), n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(group_order_level(gupta_sidki(), n) == bfs_order(gupta_sidki(), n));
    CHECK(group_order_level(pervova(), n) == bfs_order(pervova(), n));
  }
  // The full iterated wreath product of C_2 at level 3 has 2^7 elements.
  CHECK(group_order_level(grigorchuk(), 3) == 128);
}

TEST_CASE("spherical transitivity") {
  CHECK(spherically_transitive(gupta_sidki(), 3));
  CHECK(spherically_transitive(pervova(), 3));
  CHECK(spherically_transitive(grigorchuk(), 3));
  CHECK_FALSE(spherically_transitive(rooted_only(3, Perm({0, 2, 1})), 1));
}

TEST_CASE("orbits") {
  CHECK(orbits_level(pervova(), 2) == std::vector<std::size_t>{9});
  CHECK(orbits_level(rooted_only(3, Perm({1, 0, 2})), 1) == std::vector<std::size_t>{2, 1});
  // The rooted swap moves whole subtrees: 00↔10, 01↔11, 02↔12; 2x is fixed.
  const auto sizes = orbits_level(rooted_only(3, Perm({1, 0, 2})), 2);
  CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 1, 1, 1});
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  CHECK(total == 9);
}
