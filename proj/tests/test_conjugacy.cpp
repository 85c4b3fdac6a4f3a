#include <doctest.h>

#include "madic/conjugacy.hpp"
#include "madic/error.hpp"
#include "madic/quotient.hpp"

using namespace madic;

namespace {

MultiGGSData mg(std::size_t m, std::vector<std::vector<Residue>> rows) {
  return MultiGGSData{ZmodMatrix(m, rows)};
}

}  // namespace

TEST_CASE("deciding multi-GGS conjugacy") {
  const auto v = decide_multi_ggs(mg(3, {{1}, {2}}), mg(3, {{2}, {1}}), 6);
  REQUIRE(std::holds_alternative<Conjugate>(v));
  const auto& w = std::get<Conjugate>(v).witness;
  CHECK(w.u.value() == 2);
  CHECK(w.iota == ZmodMatrix(3, {{1}}));
  CHECK(w.verified_depth == 6);
  CHECK(exit_code(v) == 0);

  const auto no = decide_multi_ggs(mg(3, {{1}, {1}}), mg(3, {{1}, {2}}), 6);
  REQUIRE(std::holds_alternative<NotConjugate>(no));
  CHECK(std::get<NotConjugate>(no).units.size() == 2);
  CHECK(exit_code(no) == 1);
  CHECK(outcome_name(no) == "NotConjugate");

  const auto self = decide_multi_ggs(mg(5, {{1, 0}, {0, 1}, {2, 3}, {4, 4}}),
                                     mg(5, {{1, 0}, {0, 1}, {2, 3}, {4, 4}}), 4);
  REQUIRE(std::holds_alternative<Conjugate>(self));
  const auto& sw = std::get<Conjugate>(self).witness;
  CHECK(sw.u.value() == 1);
  CHECK(sw.iota == ZmodMatrix::identity(5, 2));
  CHECK(equal_to_depth(sw.kappa, Element::identity(5), 4));

  CHECK_THROWS_AS(decide_multi_ggs(mg(3, {{1}, {2}}), mg(5, {{1}, {2}, {3}, {4}}), 2),
                  DegreeMismatch);
  CHECK_THROWS_AS(decide_multi_ggs(mg(3, {{0}, {0}}), mg(3, {{1}, {2}}), 2), Error);
}

TEST_CASE("constant portrait witnesses") {
  CHECK(equal_to_depth(build_kappa_witness(UnitResidue(1, 3)), Element::identity(3), 5));
  CHECK(equal_to_depth(build_kappa_witness(UnitResidue(2, 3)), kappa(Perm({0, 2, 1})), 5));
  const auto k5 = build_kappa_witness(UnitResidue(2, 5));
  const auto p5 = portrait(k5, 3);
  for (const auto& l : p5.labels()) CHECK(l == unit_perm(UnitResidue(2, 5)));
}

TEST_CASE("witness verification") {
  const auto A = SpinalGroup::create(ggs({1, 2}));
  const auto B = SpinalGroup::create(ggs({2, 1}));
  CHECK(verify_witness(*A, *A, Element::identity(3), A->generators(), 6));

  const UnitResidue u(2, 3);
  const Element f = build_kappa_witness(u.inverse());
  const auto good = multi_ggs_correspondence(*B, u, ZmodMatrix(3, {{1}}));
  CHECK(verify_witness(*A, *B, f, good, 6));

  const auto wrong = multi_ggs_correspondence(*B, u, ZmodMatrix(3, {{2}}));
  CHECK_FALSE(verify_witness(*A, *B, f, wrong, 2));
}

TEST_CASE("spinal refuter") {
  const auto same = refute_spinal_necessary(gupta_sidki(), gupta_sidki(), 1, 4);
  CHECK(std::holds_alternative<Consistent>(same));
  const auto r = refute_spinal_necessary(ggs({1, 1}), ggs({1, 2}), 1, 4);
  CHECK(std::holds_alternative<Refuted>(r));
  CHECK(exit_code(r) == 1);
  CHECK(std::holds_alternative<Consistent>(refute_spinal_necessary(ggs({1, 2}), ggs({2, 1}), 1, 4)));
  CHECK(std::holds_alternative<Consistent>(
      refute_spinal_necessary(grigorchuk(), grigorchuk(), 1, 4)));
  // Outside the supported range the refuter declines.
  CHECK(std::holds_alternative<Inconclusive>(
      refute_spinal_necessary(pervova(), gupta_sidki(), 1, 4)));
}

TEST_CASE("multi-EGS refuter") {
  CHECK(std::holds_alternative<Consistent>(refute_multi_egs_necessary(pervova(), pervova())));
  const auto r = refute_multi_egs_necessary(pervova(), multi_ggs(ZmodMatrix(3, {{1, 0}, {0, 1}})));
  REQUIRE(std::holds_alternative<Refuted>(r));
  CHECK(std::get<Refuted>(r).detail.find("rank") != std::string::npos);
  CHECK(std::holds_alternative<Consistent>(refute_multi_egs_necessary(gupta_sidki(), ggs({2, 1}))));
  CHECK(std::holds_alternative<Refuted>(refute_multi_egs_necessary(ggs({1, 1}), ggs({1, 2}))));
  CHECK(std::holds_alternative<Inconclusive>(refute_multi_egs_necessary(grigorchuk(), grigorchuk())));
}

TEST_CASE("coset congruence") {
  const Perm c{1, 2, 0};
  const auto gs = gupta_sidki();
  for (std::size_t n = 0; n < 3; ++n) CHECK(coset_congruence_check(portrait(kappa(c), n + 1), gs, n));

  const auto id = Perm::identity(3);
  const Portrait f(3, 2, {id, id, c, id});
  CHECK(coset_congruence_check(f, gs, 1));
  const Portrait h(3, 2, {id, id, Perm({1, 0, 2}), id});
  CHECK_FALSE(coset_congruence_check(h, gs, 1));
  CHECK_THROWS(coset_congruence_check(f, gs, 2));
}

TEST_CASE("conjugate groups share level invariants") {
  const auto a = ggs({1, 2}), b = ggs({2, 1});
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(group_order_level(a, n) == group_order_level(b, n));
    CHECK(orbits_level(a, n) == orbits_level(b, n));
  }
}
