#include <doctest.h>

#include <algorithm>

#include "nearsemi/congruence.hpp"
#include "nearsemi/corpus.hpp"
#include "nearsemi/ideal.hpp"
#include "oracles.hpp"

using namespace nearsemi;

TEST_CASE("is_ideal with witnesses") {
  auto const l3 = corpus::l3();
  auto const c  = is_ideal(l3, ElementSet::of(3, {0, 1}));
  CHECK_FALSE(c.ideal);
  CHECK(c.violated == "I1");
  CHECK(c.witness == "a=1, b=h");
  CHECK(is_ideal(l3, ElementSet::of(3, {0})).ideal);
  CHECK(is_ideal(l3, ElementSet::full(3)).ideal);
  auto const no_zero = is_ideal(l3, ElementSet::of(3, {1}));
  CHECK(no_zero.violated == "contains-0");
}

TEST_CASE("ideal generation") {
  auto const l3 = corpus::l3();
  CHECK(generate_ideal(l3, ElementSet::of(3, {1})).is_full());
  CHECK(generate_ideal(l3, ElementSet(3)) == ElementSet::of(3, {0}));
  auto const p = product(corpus::b2(), l3);
  CHECK(generate_ideal(p, ElementSet::of(6, {3})) == ElementSet::of(6, {0, 3}));
}

TEST_CASE("theta of an ideal") {
  auto const b2b2 = product(corpus::b2(), corpus::b2());
  auto const t    = theta_of_ideal(b2b2, ElementSet::of(4, {0, 2}));
  REQUIRE(t.partition);
  CHECK(*t.partition == principal_congruence(b2b2, 2, 0));
  auto const l3 = corpus::l3();
  CHECK(theta_of_ideal(l3, ElementSet::of(3, {0})).partition->is_discrete());
  CHECK(theta_of_ideal(l3, ElementSet::full(3)).partition->is_full());
  auto const bad = theta_of_ideal(l3, ElementSet::of(3, {0, 1}));
  CHECK_FALSE(bad.partition);
  CHECK(bad.diagnostic == "not transitive: a=0, b=h, c=1");
}

TEST_CASE("ideals match the subset oracle and the congruence kernels") {
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    INFO(e.name);
    auto const& alg = e.algebra;
    auto const  lat = all_ideals(alg, kDefaultSubsetScanThreshold, 2);
    std::vector<std::uint64_t> got;
    for (auto const& i : lat.ideals) {
      got.push_back(i.bits());
    }
    auto want = oracle::ideals(alg);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(lat.ideals.size() == all_congruences(alg).size());
    CHECK(all_pass(lat.checks));
    CHECK_FALSE(lat.oracle_partial);
  }
}

TEST_CASE("known ideal lattices") {
  auto const l3 = all_ideals(corpus::l3());
  REQUIRE(l3.ideals.size() == 2);
  CHECK(l3.ideals[0] == ElementSet::of(3, {0}));
  CHECK(l3.ideals[1].is_full());
  auto const p   = product(corpus::b2(), corpus::l3());
  auto const lat = all_ideals(p);
  CHECK(lat.ideals.size() == 4);
  CHECK(lat.index_of(ElementSet::of(6, {0, 3})) != SIZE_MAX);
  CHECK(lat.index_of(ElementSet::of(6, {0, 1, 2})) != SIZE_MAX);
}

TEST_CASE("threshold skips the subset scan") {
  auto const lat = all_ideals(corpus::l4(), 3);
  CHECK(lat.oracle_partial);
  CHECK(lat.ideals.size() == 2);
}

TEST_CASE("joins, pseudocomplements, skeleton") {
  auto const p = product(corpus::b2(), corpus::l3());
  auto const i = ElementSet::of(6, {0, 3});
  auto const j = ElementSet::of(6, {0, 1, 2});
  auto const join = ideal_join_via_coset(p, i, j);
  CHECK(join.agree);
  CHECK(join.via_coset.is_full());
  CHECK(ideal_join_via_coset(p, ElementSet::of(6, {0}), j).via_coset == j);
  CHECK(ideal_join_via_coset(p, j, j).via_coset == j);
  auto const pc = pseudocomplement(p, i);
  CHECK(pc.verified);
  CHECK(pc.value == j);
  CHECK(pseudocomplement(p, ElementSet::of(6, {0})).value.is_full());
  CHECK(pseudocomplement(p, ElementSet::full(6)).value == ElementSet::of(6, {0}));
  CHECK(skeleton(corpus::l3()).members.size() == 2);
  auto const sk = skeleton(product(corpus::b2(), corpus::b2()));
  CHECK(sk.members.size() == 4);
  CHECK(all_pass(sk.checks));
}

TEST_CASE("principal ideals") {
  auto const l3 = corpus::l3();
  auto const h  = principal_ideal(l3, 1);
  CHECK(h.agree);
  CHECK(h.via_congruence.is_full());
  CHECK(principal_ideal(l3, 0).via_congruence == ElementSet::of(3, {0}));
  CHECK(principal_ideal(l3, 2).via_congruence.is_full());
}

TEST_CASE("semiring claims on L3") {
  auto const l3 = corpus::l3();
  auto const s  = semiring_claims_report(l3, ElementSet::of(3, {0, 1}));
  CHECK(s.verdict == Verdict::disagree);
  CHECK(s.id == "semiring-ideal-prop {0,h}");
  CHECK(s.witness == "(I1) a=1, b=h");
  auto const a = semiring_claims_report(l3, Element{1});
  CHECK(a.verdict == Verdict::disagree);
  CHECK(a.detail == "computed {a.c} = {0,h} vs oracle I(a) = A = {0,h,1}");
  CHECK(semiring_claims_report(l3, ElementSet::of(3, {0})).verdict == Verdict::agree);
}

TEST_CASE("semiring claims agree everywhere on B2") {
  auto const b2 = corpus::b2();
  for (std::uint64_t bits = 0; bits < 4; ++bits) {
    CHECK(semiring_claims_report(b2, ElementSet(2, bits)).verdict == Verdict::agree);
  }
  for (Element a = 0; a < 2; ++a) {
    CHECK(semiring_claims_report(b2, a).verdict == Verdict::agree);
  }
}

TEST_CASE("ideal lattice report on the corpus") {
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    INFO(e.name);
    CHECK(all_pass(ideal_lattice_report(e.algebra)));
  }
}
