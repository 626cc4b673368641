#include <doctest.h>

#include "nearsemi/algebra.hpp"
#include "nearsemi/corpus.hpp"
#include "nearsemi/term.hpp"

using namespace nearsemi;

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(FiniteAlgebra(2, {0, 1, 1}, {0, 0, 0, 1}, {1, 0}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteAlgebra(2, {0, 1, 1, 2}, {0, 0, 0, 1}, {1, 0}, 0, 1), StructureError);
  CHECK_THROWS_AS(FiniteAlgebra(2, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}, 0, 2), StructureError);
  CHECK_NOTHROW(FiniteAlgebra(2, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0}, 0, 1));
}

TEST_CASE("names and element lookup") {
  auto const l3 = corpus::l3();
  CHECK(l3.name(1) == "h");
  CHECK(l3.find_element("h") == Element{1});
  CHECK(l3.find_element("2") == Element{2});
  CHECK_FALSE(l3.find_element("x").has_value());
  CHECK_FALSE(l3.find_element("3").has_value());
}

TEST_CASE("leq") {
  auto const l3 = corpus::l3();
  CHECK(leq(l3, 0, 1));
  CHECK_FALSE(leq(l3, 2, 1));
  auto const p = product(corpus::b2(), l3);
  CHECK(leq(p, *p.find_element("(1,0)"), *p.find_element("(1,h)")));
}

TEST_CASE("term evaluation") {
  auto const l3 = corpus::l3();
  using namespace terms;
  CHECK(eval_term(l3, x() * alpha(x()), {{"x", 1}}) == 0);
  CHECK(eval_term(l3, x(), {{"x", 1}}) == 1);
  auto const t = alpha(alpha(x() * alpha(y())) * alpha(y()));
  CHECK(eval_term(l3, t, {{"x", 1}, {"y", 2}}) == 2);
  CHECK_THROWS_AS(eval_term(l3, x() + y(), {{"x", 0}}), UnboundVariable);
  try {
    eval_term(l3, z(), {});
  } catch (UnboundVariable const& e) {
    CHECK(e.variable == "z");
  }
}

TEST_CASE("compiled terms match structural evaluation") {
  auto const alg = product(corpus::b2(), corpus::l3());
  using namespace terms;
  auto const t = malcev(x(), y(), z());
  CompiledTerm const c(t, {"x", "y", "z"});
  for (Element a = 0; a < alg.size(); ++a) {
    for (Element b = 0; b < alg.size(); ++b) {
      for (Element d = 0; d < alg.size(); ++d) {
        std::vector<Element> v{a, b, d};
        CHECK(c.eval(alg, v) == eval_term(alg, t, {{"x", a}, {"y", b}, {"z", d}}));
      }
    }
  }
}

TEST_CASE("products and projections") {
  auto const b2 = corpus::b2();
  auto const l3 = corpus::l3();
  auto const p  = product(b2, l3);
  CHECK(p.size() == 6);
  CHECK(p.name(4) == "(1,h)");
  CHECK(projection_left(b2, l3).map() == std::vector<Element>{0, 0, 0, 1, 1, 1});
  CHECK(projection_right(b2, l3).map() == std::vector<Element>{0, 1, 2, 0, 1, 2});
  CHECK(find_isomorphism(product(l3, trivial_algebra()), l3).has_value());
  CHECK_THROWS_AS(product(l3, l3, 8), ResourceError);
}

TEST_CASE("homomorphisms are verified") {
  auto const l3 = corpus::l3();
  CHECK_THROWS_AS(Homomorphism(l3, l3, {0, 2, 2}), StructureError);
  Homomorphism const id(l3, l3, {0, 1, 2});
  CHECK(id.bijective());
  CHECK(id.inverse().map() == id.map());
  auto const         collapse = projection_left(corpus::b2(), l3);
  CHECK_FALSE(collapse.bijective());
  CHECK_THROWS(collapse.inverse());
}

TEST_CASE("isomorphism search") {
  auto const l3 = corpus::l3();
  auto const id = find_isomorphism(l3, l3);
  REQUIRE(id);
  CHECK(id->map() == std::vector<Element>{0, 1, 2});
  CHECK_FALSE(find_isomorphism(corpus::l4(), product(corpus::b2(), corpus::b2())));
  auto const swap = find_isomorphism(product(corpus::b2(), l3), product(l3, corpus::b2()));
  REQUIRE(swap);
  CHECK(swap->map() == std::vector<Element>{0, 2, 4, 1, 3, 5});
  CHECK_FALSE(find_isomorphism(corpus::l3(), corpus::g3()));
  CHECK_FALSE(find_isomorphism(corpus::l3(), corpus::l4()));
}

TEST_CASE("isomorphism is reflexive and symmetric on the corpus") {
  auto const entries = corpus::lukasiewicz_semirings();
  for (auto const& a : entries) {
    CHECK(find_isomorphism(a.algebra, a.algebra).has_value());
    for (auto const& b : entries) {
      CHECK(find_isomorphism(a.algebra, b.algebra).has_value()
            == find_isomorphism(b.algebra, a.algebra).has_value());
    }
  }
}

TEST_CASE("element sets") {
  auto s = ElementSet::of(5, {0, 3});
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  s.insert(4);
  CHECK(s.members() == std::vector<Element>{0, 3, 4});
  CHECK(ElementSet::full(5).is_full());
  CHECK(s.subset_of(ElementSet::full(5)));
  CHECK(format_set(corpus::l3(), ElementSet::of(3, {0, 1})) == "{0,h}");
}
