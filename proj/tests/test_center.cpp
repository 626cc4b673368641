#include <doctest.h>

#include "nearsemi/center.hpp"
#include "nearsemi/corpus.hpp"

using namespace nearsemi;

TEST_CASE("church term") {
  auto const l3 = corpus::l3();
  for (Element a = 0; a < 3; ++a) {
    for (Element b = 0; b < 3; ++b) {
      CHECK(q(l3, 2, a, b) == a);
      CHECK(q(l3, 0, a, b) == b);
    }
    CHECK(q(l3, a, 2, 0) == a);
  }
}

TEST_CASE("centrality") {
  auto const l3 = corpus::l3();
  auto const h  = is_central(l3, 1);
  CHECK_FALSE(h.central);
  CHECK(h.witness == "(a) a=h: q(e,a,a)=0");
  CHECK_FALSE(h.disagreement);
  CHECK(is_central(l3, 0).central);
  CHECK(is_central(l3, 2).central);
  auto const p = product(corpus::b2(), l3);
  CHECK(is_central(p, 3, CentralityMethod::syntactic).central);
  CHECK(is_central(p, 3, CentralityMethod::semantic).central);
}

TEST_CASE("syntactic and semantic centrality agree on every element") {
  std::vector<FiniteAlgebra> algs{corpus::g3()};
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    algs.push_back(e.algebra);
  }
  for (auto const& alg : algs) {
    for (Element e = 0; e < alg.size(); ++e) {
      CHECK(is_central_syntactic(alg, e).central == is_central_semantic(alg, e).central);
    }
  }
}

TEST_CASE("centers") {
  CHECK(center(corpus::l3()).elements == std::vector<Element>{0, 2});
  CHECK(center(corpus::b2()).elements.size() == 2);
  auto const b2b2 = product(corpus::b2(), corpus::b2());
  auto const ce   = center(b2b2);
  CHECK(ce.elements.size() == 4);
  CHECK(all_pass(ce.checks));
}

TEST_CASE("central laws") {
  auto const p = product(corpus::b2(), corpus::l3());
  CHECK(p.times(3, 4) == 3);
  CHECK(p.times(4, 3) == 3);
  CHECK(all_pass(central_laws_report(p)));
}

TEST_CASE("interval algebras") {
  auto const p  = product(corpus::b2(), corpus::l3());
  auto const iv = interval_algebra(p, 2);
  CHECK(iv.embedding == std::vector<Element>{0, 1, 2});
  CHECK(find_isomorphism(iv.algebra, corpus::l3()).has_value());
  CHECK(interval_algebra(p, 5).algebra.same_tables(p));
  CHECK(interval_algebra(p, 0).algebra.size() == 1);
  CHECK_THROWS_AS(interval_algebra(corpus::l3(), 1), PreconditionError);
}

TEST_CASE("decompositions") {
  auto const p = product(corpus::b2(), corpus::l3());
  auto const d = decompose(p, 3);
  CHECK(d.factor.algebra.size() == 2);
  CHECK(d.cofactor.algebra.size() == 3);
  CHECK(d.pair_map.bijective());
  auto const whole = decompose(p, 5);
  CHECK(whole.cofactor.algebra.size() == 1);
  auto const b2b2 = product(corpus::b2(), corpus::b2());
  CHECK(find_isomorphism(decompose(b2b2, 2).pair_map.target(), b2b2).has_value());
  CHECK_THROWS_AS(decompose(corpus::l3(), 1), PreconditionError);
}

TEST_CASE("central ideals") {
  auto const p = product(corpus::b2(), corpus::l3());
  for (Element e : {0U, 2U, 3U, 5U}) {
    CHECK(all_pass(central_ideal_check(p, e)));
  }
}

TEST_CASE("center decomposition report on the corpus and G3") {
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    INFO(e.name);
    CHECK(all_pass(center_decomposition_report(e.algebra)));
  }
  CHECK(all_pass(center_decomposition_report(corpus::g3())));
}
