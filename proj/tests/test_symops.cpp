#include <doctest.h>

#include <set>

#include "madic/error.hpp"
#include "madic/symops.hpp"
#include "oracles.hpp"

using namespace madic;

namespace {

oracle::Images images_of(const Perm& p) {
  return oracle::Images(p.images().begin(), p.images().end());
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const Perm c = parse_perm("(0 1 2)", 3);
  CHECK(compose(Perm::identity(3), c) == c);
  CHECK(compose(c, c) == Perm({2, 0, 1}));
  CHECK(to_cycles(compose(c, c)) == "(0 2 1)");
  const Perm t = parse_perm("(0 1)", 2);
  CHECK(compose(t, t).is_identity());
  const Perm p = parse_perm("(0 1)", 3), q = parse_perm("(1 2)", 3);
  CHECK(compose(p, q)(1) == p(q(1)));
  CHECK(images_of(compose(p, q)) == oracle::compose(images_of(p), images_of(q)));
}

TEST_CASE("group laws on all of Sym(4)") {
  const auto all = oracle::symmetric_group(4);
  for (const auto& a : all) {
    const Perm p{std::vector<Letter>(a.begin(), a.end())};
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(p.pow(static_cast<long long>(p.order())).is_identity());
    CHECK(p.pow(-1) == p.inverse());
    for (std::size_t k = 0; k < all.size(); k += 5) {
      const Perm q{std::vector<Letter>(all[k].begin(), all[k].end())};
      const Perm r = parse_perm("(0 3)(1 2)", 4);
      CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
      CHECK(conjugate(p, q) == compose(q.inverse(), compose(p, q)));
    }
  }
}

TEST_CASE("parsing and printing round trip") {
  const Perm p = parse_perm("(0 2)(1 3 4)", 5);
  CHECK(to_cycles(p) == "(0 2)(1 3 4)");
  CHECK(parse_perm(to_one_line(p), 5) == p);
  CHECK(parse_perm("()", 3).is_identity());
  CHECK(to_cycles(Perm::identity(3)) == "()");
  CHECK_THROWS_AS(parse_perm("(0 0)", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("transitivity") {
  const std::vector<Perm> cycle{parse_perm("(0 1 2)", 3)};
  CHECK(is_transitive(cycle, 3));
  const std::vector<Perm> swap12{parse_perm("(1 2)", 3)};
  CHECK_FALSE(is_transitive(swap12, 3));
  const std::vector<Perm> plus2{Perm({2, 3, 0, 1})};
  CHECK_FALSE(is_transitive(plus2, 4));
  CHECK(orbit(plus2, 4, 0) == std::vector<Letter>{0, 2});
  CHECK_FALSE(is_transitive(std::vector<Perm>{}, 3));
  CHECK(is_transitive(std::vector<Perm>{}, 1));
}

TEST_CASE("standard cycle exponents") {
  const Perm a = standard_cycle(5);
  for (std::size_t k = 0; k < 5; ++k) CHECK(cycle_exponent(a.pow(static_cast<long long>(k))) == k);
  CHECK_FALSE(cycle_exponent(parse_perm("(0 1)", 5)).has_value());
}

TEST_CASE("normalizer of the standard cycle fixing a point") {
  // Brute force: σ fixes x and σ⁻¹·A_m·σ = A_m.
  for (std::size_t m = 2; m <= 6; ++m) {
    const Perm a = standard_cycle(m);
    std::set<Perm> cyclic;
    for (std::size_t k = 0; k < m; ++k) cyclic.insert(a.pow(static_cast<long long>(k)));
    for (Letter x = 0; x < m; ++x) {
      std::set<Perm> expected;
      for (const auto& imgs : oracle::symmetric_group(m)) {
        const Perm s{std::vector<Letter>(imgs.begin(), imgs.end())};
        if (s(x) != x) continue;
        if (cyclic.count(conjugate(a, s))) expected.insert(s);
      }
      const auto got = normalizer_Am_fixing(m, x);
      CHECK(std::set<Perm>(got.begin(), got.end()) == expected);
      CHECK(got.size() == euler_phi(m));
    }
  }
  const auto n3 = normalizer_Am_fixing(3, 0);
  CHECK(std::set<Perm>(n3.begin(), n3.end()) ==
        std::set<Perm>{Perm::identity(3), parse_perm("(1 2)", 3)});
  CHECK(normalizer_Am_fixing(2, 0) == std::vector<Perm>{Perm::identity(2)});
  const auto n4 = normalizer_Am_fixing(4, 0);
  CHECK(std::set<Perm>(n4.begin(), n4.end()) ==
        std::set<Perm>{Perm::identity(4), parse_perm("(1 3)", 4)});
}

TEST_CASE("unit permutations") {
  CHECK(unit_perm(UnitResidue(1, 3)).is_identity());
  CHECK(unit_perm(UnitResidue(2, 3)) == parse_perm("(1 2)", 3));
  CHECK(unit_perm(UnitResidue(2, 5)) == parse_perm("(1 2 4 3)", 5));
  CHECK_THROWS_AS(UnitResidue(2, 4), Error);
  CHECK(UnitResidue(3, 7).inverse().value() == 5);
  CHECK(units(12).size() == 4);
}

TEST_CASE("generated groups") {
  const std::vector<Perm> gens{parse_perm("(0 1)", 4), parse_perm("(0 1 2 3)", 4)};
  const auto g = generate_group(gens, 4);
  CHECK(g.size() == 24);
  CHECK(g.front().is_identity());
  std::vector<oracle::Images> raw;
  for (const auto& p : gens) raw.push_back(images_of(p));
  CHECK(oracle::closure_size(raw, 4) == 24);
  CHECK(point_stabilizer(4, 2).size() == 6);
}
