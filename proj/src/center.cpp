#include "nearsemi/center.hpp"

#include <algorithm>
#include <set>

#include "nearsemi/axioms.hpp"
#include "nearsemi/congruence.hpp"
#include "nearsemi/ideal.hpp"

namespace nearsemi {

  namespace {
    std::string el(FiniteAlgebra const& alg, Element x) {
      return alg.name(x);
    }

    // Least failing tuple of a syntactic condition, as "(c) f=+, a1=.., ..".
    std::optional<std::string> syntactic_failure(FiniteAlgebra const& alg, Element e) {
      std::size_t const n = alg.size();
      for (Element a = 0; a < n; ++a) {
        if (Element v = q(alg, e, a, a); v != a) {
          return "(a) a=" + el(alg, a) + ": q(e,a,a)=" + el(alg, v);
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            Element const left  = q(alg, e, q(alg, e, a, b), c);
            Element const mid   = q(alg, e, a, c);
            Element const right = q(alg, e, a, q(alg, e, b, c));
            if (left != mid || mid != right) {
              return "(b) a=" + el(alg, a) + ", b=" + el(alg, b) + ", c=" + el(alg, c)
                     + ": " + el(alg, left) + ", " + el(alg, mid) + ", " + el(alg, right);
            }
          }
        }
      }
      for (Element c : {alg.zero(), alg.one()}) {
        if (q(alg, e, c, c) != c) {
          return "(c) f=" + std::string(c == alg.zero() ? "0" : "1");
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (q(alg, e, alg.alpha(a), alg.alpha(b)) != alg.alpha(q(alg, e, a, b))) {
            return "(c) f=alpha, a=" + el(alg, a) + ", b=" + el(alg, b);
          }
        }
      }
      for (Element a1 = 0; a1 < n; ++a1) {
        for (Element a2 = 0; a2 < n; ++a2) {
          for (Element b1 = 0; b1 < n; ++b1) {
            for (Element b2 = 0; b2 < n; ++b2) {
              auto const tuple = "a1=" + el(alg, a1) + ", a2=" + el(alg, a2) + ", b1="
                                 + el(alg, b1) + ", b2=" + el(alg, b2);
              if (q(alg, e, alg.plus(a1, a2), alg.plus(b1, b2))
                  != alg.plus(q(alg, e, a1, b1), q(alg, e, a2, b2))) {
                return "(c) f=+, " + tuple;
              }
              if (q(alg, e, alg.times(a1, a2), alg.times(b1, b2))
                  != alg.times(q(alg, e, a1, b1), q(alg, e, a2, b2))) {
                return "(c) f=., " + tuple;
              }
            }
          }
        }
      }
      if (Element v = q(alg, e, alg.one(), alg.zero()); v != e) {
        return "(d) q(e,1,0)=" + el(alg, v);
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<std::string> factor_pair_failure(FiniteAlgebra const& alg,
                                                 Partition const&     theta,
                                                 Partition const&     phi) {
    if (!theta.meet(phi).is_discrete()) {
      return "meet is not Delta";
    }
    if (!theta.join(phi).is_full()) {
      return "join is not Nabla";
    }
    auto const t = as_pairs(theta);
    auto const p = as_pairs(phi);
    if (compose(t, p) != compose(p, t)) {
      return "congruences do not permute";
    }
    auto const tb = theta.blocks();
    auto const pb = phi.blocks();
    for (auto const& x : tb) {
      for (auto const& y : pb) {
        bool meets = false;
        for (auto a : x) {
          meets = meets || phi.related(a, y.front());
        }
        if (!meets) {
          return "blocks containing " + alg.name(x.front()) + " and " + alg.name(y.front())
                 + " are disjoint";
        }
      }
    }
    return std::nullopt;
  }

  CentralityCheck is_central_syntactic(FiniteAlgebra const& alg, Element e) {
    auto failure = syntactic_failure(alg, e);
    return CentralityCheck{!failure, failure.value_or(""), std::nullopt};
  }

  CentralityCheck is_central_semantic(FiniteAlgebra const& alg, Element e) {
    auto const theta = principal_congruence(alg, e, alg.zero());
    auto const phi   = principal_congruence(alg, e, alg.one());
    auto       failure = factor_pair_failure(alg, theta, phi);
    if (failure) {
      return CentralityCheck{false, "theta(e,0), theta(e,1): " + *failure, std::nullopt};
    }
    return CentralityCheck{true, {}, std::nullopt};
  }

  CentralityCheck is_central(FiniteAlgebra const& alg, Element e, CentralityMethod method) {
    switch (method) {
      case CentralityMethod::syntactic:
        return is_central_syntactic(alg, e);
      case CentralityMethod::semantic:
        return is_central_semantic(alg, e);
      case CentralityMethod::both:
        break;
    }
    auto syn = is_central_syntactic(alg, e);
    auto sem = is_central_semantic(alg, e);
    if (syn.central != sem.central) {
      syn.disagreement = Finding{
          "centrality-methods-agree",
          Verdict::disagree,
          "e=" + alg.name(e) + ": syntactic " + (syn.central ? "central" : "not central")
              + ", semantic " + (sem.central ? "central" : "not central"),
          syn.central ? sem.witness : syn.witness};
    }
    return syn;
  }

  CenterReport center(FiniteAlgebra const& alg) {
    CenterReport      out;
    std::size_t const n = alg.size();

    std::string disagreement;
    for (Element e = 0; e < n; ++e) {
      auto c = is_central(alg, e);
      if (c.disagreement && disagreement.empty()) {
        disagreement = c.disagreement->detail + "; " + c.disagreement->witness;
      }
      if (c.central) {
        out.elements.push_back(e);
      }
    }
    out.checks.push_back(disagreement.empty()
                             ? pass("centrality-methods-agree",
                                    "syntactic (a)-(d) and factor-congruence tests agree on all "
                                        + std::to_string(n) + " elements")
                             : Finding{"centrality-methods-agree",
                                       Verdict::disagree,
                                       "syntactic versus semantic centrality",
                                       disagreement});

    std::size_t const m   = out.elements.size();
    auto              pos = [&](Element x) -> std::optional<std::size_t> {
      auto it = std::find(out.elements.begin(), out.elements.end(), x);
      if (it == out.elements.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - out.elements.begin());
    };

    std::string witness;
    if (!pos(alg.zero()) || !pos(alg.one())) {
      witness = "0 or 1 not central";
    }
    out.meet.assign(m, std::vector<std::size_t>(m, 0));
    out.join.assign(m, std::vector<std::size_t>(m, 0));
    out.complement.assign(m, 0);
    for (std::size_t i = 0; i < m && witness.empty(); ++i) {
      Element const e = out.elements[i];
      auto          c = pos(alg.alpha(e));
      if (!c) {
        witness = "e=" + el(alg, e) + ": e^a not central";
        break;
      }
      out.complement[i] = *c;
      for (std::size_t j = 0; j < m; ++j) {
        Element const f  = out.elements[j];
        auto          mt = pos(alg.times(e, f));
        auto          jn = pos(alg.plus(e, f));
        if (!mt || !jn) {
          witness = "e=" + el(alg, e) + ", f=" + el(alg, f) + ": "
                    + (mt ? "e+f" : "e.f") + " not central";
          break;
        }
        out.meet[i][j] = *mt;
        out.join[i][j] = *jn;
      }
    }
    out.checks.push_back(witness.empty()
                             ? pass("center-closure",
                                    "Ce(A) has " + std::to_string(m)
                                        + " elements, contains 0, 1 and is closed under ., +, alpha")
                             : fail("center-closure", "Ce(A) closed under ., +, alpha", witness));
    if (!witness.empty()) {
      return out;
    }

    auto const& mt  = out.meet;
    auto const& jn  = out.join;
    auto const& cp  = out.complement;
    std::size_t bot = *pos(alg.zero()), top = *pos(alg.one());
    auto        name3 = [&](std::size_t a, std::size_t b, std::size_t c) {
      return "e=" + el(alg, out.elements[a]) + ", f=" + el(alg, out.elements[b])
             + ", g=" + el(alg, out.elements[c]);
    };
    for (std::size_t a = 0; a < m && witness.empty(); ++a) {
      if (mt[a][cp[a]] != bot || jn[a][cp[a]] != top || cp[cp[a]] != a) {
        witness = "complement law at e=" + el(alg, out.elements[a]);
        break;
      }
      if (mt[a][top] != a || jn[a][bot] != a) {
        witness = "bounds at e=" + el(alg, out.elements[a]);
        break;
      }
      for (std::size_t b = 0; b < m && witness.empty(); ++b) {
        if (mt[a][b] != mt[b][a] || jn[a][b] != jn[b][a]) {
          witness = "commutativity, " + name3(a, b, b);
          break;
        }
        if (mt[a][jn[a][b]] != a || jn[a][mt[a][b]] != a) {
          witness = "absorption, " + name3(a, b, b);
          break;
        }
        for (std::size_t c = 0; c < m; ++c) {
          if (mt[a][mt[b][c]] != mt[mt[a][b]][c] || jn[a][jn[b][c]] != jn[jn[a][b]][c]) {
            witness = "associativity, " + name3(a, b, c);
            break;
          }
          if (mt[a][jn[b][c]] != jn[mt[a][b]][mt[a][c]]) {
            witness = "distributivity, " + name3(a, b, c);
            break;
          }
        }
      }
    }
    out.checks.push_back(witness.empty()
                             ? pass("center-boolean", "Boolean algebra laws with meet ., join +, complement alpha")
                             : fail("center-boolean", "Boolean algebra laws", witness));

    for (std::size_t a = 0; a < m && witness.empty(); ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (leq(alg, out.elements[a], out.elements[b]) != (mt[a][b] == a)) {
          witness = name3(a, b, b) + ": order disagrees with e.f = e";
          break;
        }
      }
    }
    out.checks.push_back(witness.empty()
                             ? pass("center-order", "e.f = e iff e <= f on Ce(A)")
                             : fail("center-order", "e.f = e iff e <= f on Ce(A)", witness));

    // e -> theta(e,0) onto first components of complementary factor pairs.
    auto const          con = all_congruences(alg);
    std::set<Partition> factors;
    for (auto const& t : con) {
      for (auto const& p : con) {
        if (!factor_pair_failure(alg, t, p)) {
          factors.insert(t);
          break;
        }
      }
    }
    std::set<Partition> image;
    witness.clear();
    for (auto e : out.elements) {
      auto const t = principal_congruence(alg, e, alg.zero());
      if (!image.insert(t).second) {
        witness = "theta(e,0) repeats at e=" + el(alg, e);
        break;
      }
    }
    if (witness.empty() && image != factors) {
      for (auto const& t : factors) {
        if (!image.contains(t)) {
          witness = "factor congruence " + t.to_string(alg) + " is no theta(e,0)";
          break;
        }
      }
      if (witness.empty()) {
        witness = "theta(e,0) outside the factor congruences";
      }
    }
    out.checks.push_back(witness.empty()
                             ? pass("factor-congruence-bijection",
                                    "e -> theta(e,0) is a bijection onto "
                                        + std::to_string(factors.size()) + " factor congruences")
                             : fail("factor-congruence-bijection",
                                    "e -> theta(e,0) onto factor congruences",
                                    witness));
    return out;
  }

  std::vector<Finding> central_laws_report(FiniteAlgebra const& alg) {
    std::size_t const    n = alg.size();
    std::vector<Element> central;
    for (Element e = 0; e < n; ++e) {
      if (is_central_syntactic(alg, e).central) {
        central.push_back(e);
      }
    }

    std::string idem, comm, assoc, below, glb, dist;
    for (auto e : central) {
      auto const ename = "e=" + el(alg, e);
      if (idem.empty() && alg.times(e, e) != e) {
        idem = ename;
      }
      for (Element a = 0; a < n; ++a) {
        auto const ea = ename + ", a=" + el(alg, a);
        if (comm.empty() && alg.times(e, a) != alg.times(a, e)) {
          comm = ea;
        }
        if (below.empty() && leq(alg, a, e) && alg.times(a, e) != a) {
          below = ea;
        }
        for (Element b = 0; b < n; ++b) {
          Element const eab = alg.times(alg.times(e, a), b);
          if (assoc.empty()
              && (eab != alg.times(a, alg.times(e, b)) || eab != alg.times(e, alg.times(a, b)))) {
            assoc = ea + ", b=" + el(alg, b);
          }
          if (!glb.empty()) {
            continue;
          }
          Element const m = alg.times(e, b);
          if (!leq(alg, m, e) || !leq(alg, m, b)) {
            glb = ename + ", b=" + el(alg, b) + ": e.b is no lower bound";
            continue;
          }
          for (Element c = 0; c < n; ++c) {
            if (leq(alg, c, e) && leq(alg, c, b) && !leq(alg, c, m)) {
              glb = ename + ", b=" + el(alg, b) + ", c=" + el(alg, c) + " exceeds e.b";
              break;
            }
          }
        }
      }
      if (!dist.empty()) {
        continue;
      }
      auto check_family = [&](std::vector<Element> const& family) {
        Element joined = alg.zero(), meets = alg.zero();
        for (auto x : family) {
          joined = alg.plus(joined, x);
          meets  = alg.plus(meets, central_meet(alg, e, x));
        }
        if (central_meet(alg, e, joined) != meets) {
          std::string f;
          for (auto x : family) {
            f += (f.empty() ? "" : ",") + el(alg, x);
          }
          dist = ename + ", family {" + f + "}";
        }
      };
      if (n <= 16) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && dist.empty(); ++mask) {
          std::vector<Element> family;
          for (Element x = 0; x < n; ++x) {
            if ((mask >> x) & 1U) {
              family.push_back(x);
            }
          }
          check_family(family);
        }
      } else {
        for (Element x = 0; x < n && dist.empty(); ++x) {
          for (Element y = 0; y < n && dist.empty(); ++y) {
            check_family({x, y});
          }
        }
      }
    }

    auto finding = [](std::string id, std::string detail, std::string const& witness) {
      return witness.empty() ? pass(std::move(id), std::move(detail))
                             : fail(std::move(id), std::move(detail), witness);
    };
    std::string const scope = std::to_string(central.size()) + " central elements";
    return {
        finding("central-idempotent", "e.e = e for " + scope, idem),
        finding("central-commutes", "e.a = a.e for " + scope, comm),
        finding("central-associative", "(e.a).b = a.(e.b) = e.(a.b) for " + scope, assoc),
        finding("below-central-absorbs", "a <= e implies a.e = a", below),
        finding("central-meet-is-glb", "e.b is the greatest lower bound of e and b", glb),
        finding("central-join-distributive",
                n <= 16 ? "e ^ (join of S) = join of (e ^ s) over all nonempty subsets S"
                        : "e ^ (x + y) = (e ^ x) + (e ^ y) over all pairs",
                dist),
    };
  }

  std::optional<Element> IntervalAlgebra::index_of(Element parent) const {
    auto it = std::find(embedding.begin(), embedding.end(), parent);
    if (it == embedding.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - embedding.begin());
  }

  IntervalAlgebra interval_algebra(FiniteAlgebra const& alg, Element e) {
    if (!is_central_syntactic(alg, e).central) {
      throw PreconditionError("element " + alg.name(e) + " is not central");
    }
    std::size_t const n = alg.size();
    std::set<Element> members;
    for (Element b = 0; b < n; ++b) {
      members.insert(central_meet(alg, e, b));
    }
    std::vector<Element> embedding(members.begin(), members.end());
    std::size_t const    m = embedding.size();
    std::vector<Element> index(n, 0);
    for (Element i = 0; i < m; ++i) {
      index[embedding[i]] = i;
    }
    auto inside = [&](Element parent) {
      Element const r = central_meet(alg, e, parent);
      if (!members.contains(r)) {
        throw StructureError("interval [0," + alg.name(e) + "] not closed");
      }
      return index[r];
    };
    std::vector<Element>     plus(m * m), times(m * m), alpha(m);
    std::vector<std::string> names(m);
    for (Element i = 0; i < m; ++i) {
      names[i] = alg.name(embedding[i]);
      alpha[i] = inside(alg.alpha(embedding[i]));
      for (Element j = 0; j < m; ++j) {
        plus[i * m + j]  = inside(alg.plus(embedding[i], embedding[j]));
        times[i * m + j] = inside(alg.times(embedding[i], embedding[j]));
      }
    }
    FiniteAlgebra algebra(m, std::move(plus), std::move(times), std::move(alpha),
                          inside(alg.zero()), index[e], std::move(names));
    return IntervalAlgebra{std::move(algebra), std::move(embedding), e};
  }

  Decomposition decompose(FiniteAlgebra const& alg, Element e) {
    auto              factor   = interval_algebra(alg, e);
    auto              cofactor = interval_algebra(alg, alg.alpha(e));
    std::size_t const width    = cofactor.algebra.size();
    std::vector<Element> map(alg.size());
    for (Element a = 0; a < alg.size(); ++a) {
      Element const left  = *factor.index_of(central_meet(alg, e, a));
      Element const right = *cofactor.index_of(central_meet(alg, alg.alpha(e), a));
      map[a]              = static_cast<Element>(left * width + right);
    }
    auto target = product(factor.algebra, cofactor.algebra);
    Homomorphism pair_map(alg, std::move(target), std::move(map));
    return Decomposition{e, std::move(factor), std::move(cofactor), std::move(pair_map)};
  }

  std::vector<Finding> central_ideal_check(FiniteAlgebra const& alg, Element e) {
    std::vector<Finding> out;
    auto const           name = "e=" + alg.name(e);
    auto const           ie   = principal_ideal(alg, e).via_congruence;
    auto const           iea  = principal_ideal(alg, alg.alpha(e)).via_congruence;
    ElementSet           down(alg.size());
    for (Element x = 0; x < alg.size(); ++x) {
      if (leq(alg, x, e)) {
        down.insert(x);
      }
    }
    out.push_back(ie == down ? pass("central-ideal-interval", name + ": I(e) = [0,e] = " + format_set(alg, ie))
                             : fail("central-ideal-interval",
                                    name + ": I(e) = [0,e]",
                                    "I(e)=" + format_set(alg, ie) + ", [0,e]=" + format_set(alg, down)));

    ElementSet const zero_ideal = ElementSet::of(alg.size(), {alg.zero()});
    bool const       disjoint   = (ie & iea) == zero_ideal;
    bool const       covering   = generate_ideal(alg, ie | iea).is_full();
    out.push_back(disjoint && covering
                      ? pass("central-factor-ideals", name + ": I(e) meet I(e^a) = {0}, join = A")
                      : fail("central-factor-ideals",
                             name + ": (I(e), I(e^a)) factor ideals",
                             disjoint ? "join of I(e) and I(e^a) is not A"
                                      : "I(e) meet I(e^a) = " + format_set(alg, ie & iea)));

    auto const star = pseudocomplement(alg, ie);
    out.push_back(star.value == iea && star.verified
                      ? pass("central-ideal-pseudocomplement", name + ": I(e^a) = I(e)*")
                      : fail("central-ideal-pseudocomplement",
                             name + ": I(e^a) = I(e)*",
                             "I(e)*=" + format_set(alg, star.value) + ", I(e^a)="
                                 + format_set(alg, iea)));
    return out;
  }

  std::vector<Finding> center_decomposition_report(FiniteAlgebra const& alg) {
    auto const           ce  = center(alg);
    std::vector<Finding> out = ce.checks;
    auto const           laws = central_laws_report(alg);
    out.insert(out.end(), laws.begin(), laws.end());

    bool const luk = satisfies(alg, AlgebraClass::luk_nrs);
    std::optional<AlgebraClass> parent_class;
    for (auto cls : {AlgebraClass::luk_rs, AlgebraClass::luk_nrs, AlgebraClass::inrs}) {
      if (satisfies(alg, cls)) {
        parent_class = cls;
        break;
      }
    }

    std::string decompose_witness, roundtrip_witness, class_witness;
    std::vector<Finding> ideal_findings;
    for (auto e : ce.elements) {
      auto const name = "e=" + alg.name(e);
      try {
        auto const d = decompose(alg, e);
        if (!d.pair_map.bijective()) {
          decompose_witness = name + ": pair map not bijective";
        } else {
          auto const inv = d.pair_map.inverse();
          for (Element a = 0; a < alg.size(); ++a) {
            if (inv(d.pair_map(a)) != a) {
              roundtrip_witness = name + ", a=" + alg.name(a);
              break;
            }
          }
        }
        if (parent_class) {
          for (auto const* part : {&d.factor, &d.cofactor}) {
            if (!satisfies(part->algebra, *parent_class) && class_witness.empty()) {
              class_witness = "[0," + alg.name(part->top) + "] fails "
                              + to_string(*parent_class);
            }
          }
        }
      } catch (StructureError const& err) {
        if (decompose_witness.empty()) {
          decompose_witness = name + ": " + err.what();
        }
      }
      if (luk) {
        auto f = central_ideal_check(alg, e);
        ideal_findings.insert(ideal_findings.end(), f.begin(), f.end());
      }
    }
    auto const scope = std::to_string(ce.elements.size()) + " central elements";
    out.push_back(decompose_witness.empty()
                      ? pass("decompose", "A ~ A_e x A_{e^a} verified for " + scope)
                      : fail("decompose", "A ~ A_e x A_{e^a}", decompose_witness));
    out.push_back(roundtrip_witness.empty()
                      ? pass("decompose-roundtrip", "inverse of the pair map recovers every a")
                      : fail("decompose-roundtrip", "inverse of the pair map recovers every a",
                             roundtrip_witness));
    if (parent_class) {
      out.push_back(class_witness.empty()
                        ? pass("interval-class",
                               "every A_e satisfies " + std::string(to_string(*parent_class)))
                        : fail("interval-class", "A_e in the class of A", class_witness));
    }

    if (luk) {
      // Collapse per-element ideal checks to one finding per id.
      for (std::string id :
           {"central-ideal-interval", "central-factor-ideals", "central-ideal-pseudocomplement"}) {
        std::optional<Finding> bad;
        for (auto const& f : ideal_findings) {
          if (f.id == id && f.verdict != Verdict::pass && !bad) {
            bad = f;
          }
        }
        if (bad) {
          out.push_back(*bad);
        } else {
          std::string detail = id == "central-ideal-interval" ? "I(e) = [0,e]"
                               : id == "central-factor-ideals"
                                   ? "(I(e), I(e^a)) are factor ideals"
                                   : "I(e^a) = I(e)*";
          out.push_back(pass(id, detail + " for " + scope));
        }
      }
      auto const sk = skeleton(alg);
      out.insert(out.end(), sk.checks.begin(), sk.checks.end());
    }
    return out;
  }

}  // namespace nearsemi
