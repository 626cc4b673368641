#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nearsemi/corpus.hpp"
#include "nearsemi/enumerate.hpp"
#include "oracles.hpp"

using namespace nearsemi;

TEST_CASE("small counts") {
  CHECK(count(1, AlgebraClass::inrs) == 1);
  CHECK(count(2, AlgebraClass::luk_nrs) == 1);
  CHECK(count(3, AlgebraClass::luk_nrs) == 1);
  CHECK(count(3, AlgebraClass::inrs) == 2);
}

TEST_CASE("enumeration matches the brute-force table scan up to size 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto cls : {AlgebraClass::inrs, AlgebraClass::luk_nrs, AlgebraClass::luk_rs}) {
      INFO("n=" << n << " class " << to_string(cls));
      auto const found = enumerate({n, cls});
      auto const brute = oracle::brute_force_models(n, cls);
      CHECK(found.size() == brute.size());
      for (auto const& b : brute) {
        auto const form = canonical_form(b);
        CHECK(std::any_of(found.begin(), found.end(),
                          [&](FiniteAlgebra const& f) { return canonical_form(f) == form; }));
      }
    }
  }
}

TEST_CASE("outputs pass their class and are pairwise non-isomorphic") {
  for (auto cls : {AlgebraClass::inrs, AlgebraClass::luk_nrs, AlgebraClass::luk_rs}) {
    auto const algs = enumerate({4, cls});
    std::set<CanonicalForm> forms;
    for (auto const& a : algs) {
      CHECK(satisfies(a, cls));
      forms.insert(canonical_form(a));
    }
    CHECK(forms.size() == algs.size());
    for (std::size_t i = 0; i < algs.size(); ++i) {
      for (std::size_t j = i + 1; j < algs.size() && j < i + 4; ++j) {
        CHECK_FALSE(find_isomorphism(algs[i], algs[j]));
      }
    }
  }
}

TEST_CASE("enumeration is permutation complete") {
  std::mt19937 rng(7);
  auto const   algs = enumerate({5, AlgebraClass::inrs});
  std::set<CanonicalForm> forms;
  for (auto const& a : algs) {
    forms.insert(canonical_form(a));
  }
  for (std::size_t k = 0; k < algs.size(); k += 37) {
    auto const&          a = algs[k];
    std::size_t const    n = a.size();
    std::vector<Element> perm(n);
    for (Element i = 0; i < n; ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin() + 1, perm.end() - 1, rng);
    std::vector<Element> plus(n * n), times(n * n), alpha(n);
    for (Element x = 0; x < n; ++x) {
      alpha[perm[x]] = perm[a.alpha(x)];
      for (Element y = 0; y < n; ++y) {
        plus[perm[x] * n + perm[y]]  = perm[a.plus(x, y)];
        times[perm[x] * n + perm[y]] = perm[a.times(x, y)];
      }
    }
    FiniteAlgebra const relabelled(n, plus, times, alpha, perm[a.zero()], perm[a.one()]);
    CHECK(forms.contains(canonical_form(relabelled)));
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(corpus::b2()) == canonical_form(corpus::b2()));
  CHECK(canonical_form(product(corpus::b2(), corpus::l3()))
        == canonical_form(product(corpus::l3(), corpus::b2())));
  CHECK_FALSE(canonical_form(corpus::l4())
              == canonical_form(product(corpus::b2(), corpus::b2())));
  CHECK(canonical_form(corpus::l3()).hash().size() == 16);
  auto const c = canonical_algebra(product(corpus::l3(), corpus::b2()));
  CHECK(c.zero() == 0);
  CHECK(c.one() == 5);
}

TEST_CASE("canonical forms agree with isomorphism search") {
  std::vector<FiniteAlgebra> algs;
  for (auto const& e : corpus::lukasiewicz_semirings()) {
    algs.push_back(e.algebra);
  }
  algs.push_back(corpus::g3());
  for (auto const& a : algs) {
    for (auto const& b : algs) {
      if (a.size() == b.size()) {
        CHECK((canonical_form(a) == canonical_form(b)) == find_isomorphism(a, b).has_value());
      }
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  EnumerationTask one{5, AlgebraClass::inrs};
  EnumerationTask many = one;
  many.threads         = 3;
  auto const a = enumerate(one);
  auto const b = enumerate(many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].same_tables(b[i]));
  }
}

TEST_CASE("frozen regression counts") {
  auto const rows = oracle::frozen_counts(NEARSEMI_DATA_DIR "/regression_counts.txt");
  REQUIRE(rows.size() >= 12);
  for (auto const& row : rows) {
    if (row.size > 5 && row.cls == "inrs") {
      continue;
    }
    INFO("n=" << row.size << " " << row.cls);
    CHECK(count(row.size, *parse_algebra_class(row.cls)) == row.count);
  }
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(enumerate({9, AlgebraClass::luk_nrs}), ResourceError);
  EnumerationTask task{5, AlgebraClass::inrs};
  task.max_results = 100;
  try {
    enumerate(task);
    FAIL("expected a partial result");
  } catch (EnumerationIncomplete const& e) {
    CHECK(e.resume_token() < e.task_count());
    auto rest        = task;
    rest.max_results = kDefaultMaxResults;
    rest.resume_from = e.resume_token();
    auto const tail  = enumerate(rest);
    CHECK(e.partial().size() + tail.size() == 980);
  }
}
