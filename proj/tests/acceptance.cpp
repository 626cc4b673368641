// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// against the budget. Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "nearsemi/axioms.hpp"
#include "nearsemi/cantor_bernstein.hpp"
#include "nearsemi/center.hpp"
#include "nearsemi/congruence.hpp"
#include "nearsemi/corpus.hpp"
#include "nearsemi/enumerate.hpp"
#include "nearsemi/format.hpp"
#include "nearsemi/ideal.hpp"
#include "nearsemi/mv.hpp"
#include "oracles.hpp"

using namespace nearsemi;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string note;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok   = false;
        note = what;
      }
    }
  };

  std::string const kData = NEARSEMI_DATA_DIR;

  FiniteAlgebra file(std::string const& name) {
    return std::move(*load_document(kData + "/" + name).algebra);
  }

  std::vector<corpus::Entry> corpus_up_to(std::size_t n) {
    std::vector<corpus::Entry> out;
    for (auto& e : corpus::lukasiewicz_semirings()) {
      if (e.algebra.size() <= n) {
        out.push_back(std::move(e));
      }
    }
    return out;
  }

  std::string first_failure(std::vector<Finding> const& findings) {
    for (auto const& f : findings) {
      if (is_adverse(f.verdict)) {
        return f.id + " " + f.witness;
      }
    }
    return {};
  }

  Outcome axiom_suite() {
    Outcome out;
    std::vector<std::pair<std::string, AlgebraClass>> const cases{
        {"b2.alg", AlgebraClass::luk_rs},    {"l3.alg", AlgebraClass::luk_rs},
        {"l4.alg", AlgebraClass::luk_rs},    {"b2xl3.alg", AlgebraClass::luk_rs},
        {"b2xb2.alg", AlgebraClass::luk_rs}};
    for (auto const& [name, cls] : cases) {
      auto const r = check_axioms(file(name), cls);
      out.require(r.admitted() && all_pass(r.findings()), name + " fails its class");
    }
    auto const g3 = check_axioms(file("g3.alg"), AlgebraClass::luk_nrs);
    out.require(g3.failed_required() == std::vector<std::string>{"vii"},
                "G3 must fail exactly (vii)");
    auto const* vii = g3.find("vii");
    out.require(vii != nullptr && vii->witness.starts_with("x=1, y=h"),
                "G3 (vii) witness is not (1,h)");
    return out;
  }

  // Ideals by the independent subset oracle versus 0-cosets of Con(A), and
  // both composites of I -> theta(I), theta -> [0]_theta.
  void kernel_bijection(FiniteAlgebra const& alg, std::string const& label, Outcome& out) {
    auto const              con = all_congruences(alg);
    std::set<std::uint64_t> kernels;
    for (auto const& theta : con) {
      auto const k = theta.block_containing(alg.zero());
      kernels.insert(k.bits());
      auto const back = theta_of_ideal(alg, k);
      out.require(back.partition && *back.partition == theta, label + ": theta([0]_theta) != theta");
    }
    auto const              ideal_list = oracle::ideals(alg);
    std::set<std::uint64_t> ideals(ideal_list.begin(), ideal_list.end());
    out.require(ideals == kernels, label + ": ideals differ from kernels");
    for (auto bits : ideals) {
      ElementSet const i(alg.size(), bits);
      out.require(is_ideal(alg, i).ideal, label + ": is_ideal disagrees with the oracle");
      auto const t = theta_of_ideal(alg, i);
      out.require(t.partition && t.partition->block_containing(alg.zero()) == i,
                  label + ": [0]_theta(I) != I");
    }
    auto const lat = all_ideals(alg);
    out.require(lat.ideals.size() == ideals.size() && all_pass(lat.checks),
                label + ": all_ideals disagrees");
  }

  Outcome kernel_ideal() {
    Outcome out;
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t k = 0;
      for (auto const& alg : enumerate({n, AlgebraClass::luk_nrs})) {
        kernel_bijection(alg, "luk-nrs n=" + std::to_string(n) + " #" + std::to_string(k++), out);
      }
    }
    for (auto const& e : corpus_up_to(6)) {
      kernel_bijection(e.algebra, e.name, out);
    }
    return out;
  }

  Outcome malcev() {
    Outcome out;
    std::set<std::string> const required{"malcev-p(x,y,y)=x", "malcev-p(x,x,y)=y", "permutability",
                                         "0-regularity"};
    for (auto const& e : corpus::lukasiewicz_semirings()) {
      auto const findings = malcev_and_regularity_report(e.algebra);
      out.require(all_pass(findings), e.name + ": " + first_failure(findings));
      std::set<std::string> seen;
      for (auto const& f : findings) {
        seen.insert(f.id);
      }
      out.require(std::includes(seen.begin(), seen.end(), required.begin(), required.end()),
                  e.name + ": a Mal'cev or regularity check did not run");
    }
    return out;
  }

  Outcome lattice_structure() {
    Outcome out;
    for (auto const& e : corpus_up_to(6)) {
      auto const findings = ideal_lattice_report(e.algebra);
      out.require(all_pass(findings), e.name + ": " + first_failure(findings));
      std::set<std::string> seen;
      for (auto const& f : findings) {
        if (f.verdict == Verdict::pass) {
          seen.insert(f.id);
        }
      }
      for (char const* id : {"id-con-isomorphism", "id-distributive", "join-distributive",
                             "pseudocomplement-laws", "join-via-coset"}) {
        out.require(seen.contains(id), e.name + ": " + id + " did not pass exhaustively");
      }
    }
    return out;
  }

  Outcome centrality() {
    Outcome out;
    std::vector<corpus::Entry> all = corpus::lukasiewicz_semirings();
    all.push_back({"G3", corpus::g3()});
    for (auto const& e : all) {
      auto const& alg = e.algebra;
      for (Element x = 0; x < alg.size(); ++x) {
        out.require(is_central_syntactic(alg, x).central == is_central_semantic(alg, x).central,
                    e.name + ": centrality methods disagree at " + alg.name(x));
      }
      auto const findings = center_decomposition_report(alg);
      out.require(all_pass(findings), e.name + ": " + first_failure(findings));
      for (Element c : center(alg).elements) {
        auto const d = decompose(alg, c);
        out.require(d.pair_map.bijective(), e.name + ": decompose not bijective");
      }
    }
    return out;
  }

  Outcome mv_bridge() {
    Outcome out;
    for (char const* name : {"b2.alg", "l3.alg", "l4.alg", "b2xl3.alg"}) {
      auto const alg = file(name);
      out.require(roundtrip_check(alg).verdict == Verdict::pass, std::string(name) + ": R(M(A)) != A");
      out.require(roundtrip_check(to_mv(alg)).verdict == Verdict::pass,
                  std::string(name) + ": M(R(B)) != B");
    }
    for (auto const& mv : {mv_chain(2), mv_chain(3), mv_chain(4), mv_product(mv_chain(2), mv_chain(3))}) {
      out.require(is_mv_algebra(mv), "MV counterpart fails the MV axioms");
      out.require(roundtrip_check(mv).verdict == Verdict::pass, "MV round trip differs");
    }
    out.require(to_mv(file("l3.alg")).same_tables(mv_chain(3)), "M(L3) is not the MV chain");
    return out;
  }

  Outcome cantor_bernstein() {
    Outcome out;
    struct Case {
      char const* a;
      char const* b;
      char const* gamma;
      char const* beta;
    };
    for (auto const& c : {Case{"b2.alg", "b2.alg", "b2_identity.map", "b2_identity.map"},
                          Case{"b2xb2.alg", "b2xb2.alg", "b2xb2_swap.map", "b2xb2_identity.map"},
                          Case{"b2xl3.alg", "l3xb2.alg", "b2xl3_to_l3xb2.map", "l3xb2_to_b2xl3.map"}}) {
      auto const a    = file(c.a);
      auto const b    = file(c.b);
      auto const inst = make_cb_instance(a, b, a.one(), b.one(),
                                         load_map(kData + "/maps/" + c.gamma, b),
                                         load_map(kData + "/maps/" + c.beta, a));
      auto const r    = cb_report(inst);
      out.require(all_pass(r.findings), std::string(c.a) + " -> " + c.b + ": " + first_failure(r.findings));
      std::set<std::string> seen;
      for (auto const& f : r.findings) {
        seen.insert(f.id);
      }
      for (char const* id : {"cb-central", "cb-descent", "cb-disjoint", "cb-join-to-1", "cb-gamma-limit",
                             "cb-gamma-differences", "cb-beta-differences", "cb-isomorphism"}) {
        out.require(seen.contains(id), std::string(id) + " missing");
      }
      out.require(r.iso && r.iso->bijective(), "assembled map is not an isomorphism");
    }
    auto const p   = file("b2xl3.alg");
    auto const iso = partition_decomposition(p, {*p.find_element("(1,0)"), *p.find_element("(0,1)")});
    out.require(iso.bijective(), "partition_decomposition on B2xL3 is not bijective");
    return out;
  }

  Outcome adjudication() {
    Outcome            out;
    std::ostringstream text;
    std::ostringstream err;
    int const          status = cli::run({"claims", kData + "/l3.alg"}, text, err);
    out.require(status == 1, "claims l3.alg exit status " + std::to_string(status));
    auto const s = text.str();
    out.require(s.find("DISAGREE semiring-ideal-prop {0,h}: conditions (i)-(iii) hold, is_ideal false "
                       "witness: (I1) a=1, b=h\n")
                    != std::string::npos,
                "subset {0,h} line not reproduced");
    out.require(s.find("DISAGREE principal-ideal-corollary h: computed {a.c} = {0,h} vs oracle I(a) = A "
                       "= {0,h,1} witness: 1 in I(a) but not of the form a.c\n")
                    != std::string::npos,
                "element h line not reproduced");
    return out;
  }

  Outcome enumeration() {
    Outcome out;
    out.require(count(2, AlgebraClass::luk_nrs) == 1, "count(2, luk-nrs) != 1");
    out.require(count(3, AlgebraClass::luk_nrs) == 1, "count(3, luk-nrs) != 1");
    out.require(count(3, AlgebraClass::inrs) == 2, "count(3, inrs) != 2");
    auto const rows = oracle::frozen_counts(kData + "/regression_counts.txt");
    out.require(!rows.empty(), "frozen counts table missing");
    for (auto const& row : rows) {
      if (row.size != 4) {
        continue;
      }
      auto const cls = *parse_algebra_class(row.cls);
      for (std::size_t threads : {1, 2, 4}) {
        for (int run = 0; run < 2; ++run) {
          auto const n = enumerate({4, cls, kDefaultMaxEnumerationSize, kDefaultMaxNodes,
                                    kDefaultMaxResults, threads})
                             .size();
          out.require(n == row.count, "count(4, " + row.cls + ") = " + std::to_string(n)
                                          + " with " + std::to_string(threads) + " threads, frozen "
                                          + std::to_string(row.count));
        }
      }
      out.require(oracle::brute_force_models(4, cls).size() == row.count,
                  "brute force disagrees on count(4, " + row.cls + ")");
    }
    return out;
  }

  struct Criterion {
    int                      number;
    char const*              title;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "axiom suite", 1, axiom_suite},
      {2, "kernel and ideal bijection", 60, kernel_ideal},
      {3, "Mal'cev term, permutability, 0-regularity", 10, malcev},
      {4, "Id(A) and Con(A) lattice structure", 60, lattice_structure},
      {5, "centrality and decomposition", 30, centrality},
      {6, "MV round trips", 1, mv_bridge},
      {7, "Cantor-Bernstein construction", 5, cantor_bernstein},
      {8, "adjudication regressions", 1, adjudication},
      {9, "enumeration counts", 300, enumeration},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok   = false;
      o.note = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const   in_time = secs <= c.budget_seconds;
    bool const   ok      = o.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("criterion %d %s: %s (%.3f s, budget %.0f s)%s%s\n", c.number, ok ? "PASS" : "FAIL",
                c.title, secs, c.budget_seconds, o.note.empty() ? "" : " ", o.note.c_str());
    if (o.ok && !in_time) {
      std::printf("  over budget\n");
    }
    std::fflush(stdout);
  }
  return failures;
}
