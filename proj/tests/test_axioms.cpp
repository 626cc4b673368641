#include <doctest.h>

#include "nearsemi/axioms.hpp"
#include "nearsemi/corpus.hpp"

using namespace nearsemi;

TEST_CASE("corpus passes its class") {
  CHECK(satisfies(corpus::b2(), AlgebraClass::luk_rs));
  CHECK(satisfies(corpus::l3(), AlgebraClass::luk_nrs));
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    INFO(e.name);
    auto const report = check_axioms(e.algebra, AlgebraClass::luk_rs);
    CHECK(report.admitted());
    CHECK(all_pass(report.findings()));
  }
}

TEST_CASE("G3 fails exactly the Lukasiewicz axiom") {
  auto const g3     = corpus::g3();
  auto const report = check_axioms(g3, AlgebraClass::luk_nrs);
  CHECK_FALSE(report.admitted());
  CHECK(report.failed_required() == std::vector<std::string>{"vii"});
  auto const* vii = report.find("vii");
  REQUIRE(vii);
  CHECK(vii->witness.starts_with("x=1, y=h"));
  CHECK(satisfies(g3, AlgebraClass::inrs));
}

TEST_CASE("class names") {
  CHECK(parse_algebra_class("luk-rs") == AlgebraClass::luk_rs);
  CHECK(parse_algebra_class("inrs") == AlgebraClass::inrs);
  CHECK_FALSE(parse_algebra_class("mv").has_value());
  CHECK(std::string(to_string(AlgebraClass::luk_nrs)) == "luk-nrs");
}

TEST_CASE("non-lattice plus is rejected with a witness") {
  // 3 elements, + not associative-free: middle element with h+h = 1.
  FiniteAlgebra const bad(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, {0, 0, 0, 0, 0, 1, 0, 1, 2}, {2, 1, 0}, 0, 2);
  auto const report = check_axioms(bad, AlgebraClass::inrs);
  CHECK_FALSE(report.admitted());
  for (auto const& v : report.verdicts) {
    if (!v.holds) {
      CHECK_FALSE(v.witness.empty());
    }
  }
}

TEST_CASE("axiom (vi) and involution hold on every admitted algebra") {
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    auto const& alg = e.algebra;
    for (Element x = 0; x < alg.size(); ++x) {
      CHECK(alg.alpha(alg.alpha(x)) == x);
      for (Element y = 0; y < alg.size(); ++y) {
        if (leq(alg, x, y)) {
          CHECK(leq(alg, alg.alpha(y), alg.alpha(x)));
        }
      }
    }
  }
}
