#include "nearsemi/ideal.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "nearsemi/center.hpp"
#include "nearsemi/parallel.hpp"

namespace nearsemi {

  namespace {
    constexpr std::size_t kMissing = std::numeric_limits<std::size_t>::max();

    std::string pair_witness(FiniteAlgebra const& alg, Element a, Element b) {
      return "a=" + alg.name(a) + ", b=" + alg.name(b);
    }

    // a^a.b and b^a.a both in s
    bool kernel_related(FiniteAlgebra const& alg, ElementSet const& s, Element a, Element b) {
      return s.contains(alg.times(alg.alpha(a), b)) && s.contains(alg.times(alg.alpha(b), a));
    }
  }  // namespace

  IdealCheck is_ideal(FiniteAlgebra const& alg, ElementSet const& s) {
    std::size_t const n = alg.size();
    IdealCheck        out{true, {}, {}, true, {}};

    for (Element a = 0; a < n && out.i3_holds; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (kernel_related(alg, s, a, b) && !s.contains(alg.times(a, alg.alpha(b)))) {
          out.i3_holds   = false;
          out.i3_witness = pair_witness(alg, a, b);
          break;
        }
      }
    }

    if (!s.contains(alg.zero())) {
      out.ideal    = false;
      out.violated = "contains-0";
      out.witness  = alg.name(alg.zero()) + " not in S";
      return out;
    }
    for (Element a = 0; a < n; ++a) {
      if (s.contains(a)) {
        continue;
      }
      for (Element b = 0; b < n; ++b) {
        if (s.contains(b) && s.contains(alg.times(a, alg.alpha(b)))) {
          out.ideal    = false;
          out.violated = "I1";
          out.witness  = pair_witness(alg, a, b);
          return out;
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!kernel_related(alg, s, a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          Element const right = alg.times(alg.alpha(alg.times(a, c)), alg.times(b, c));
          Element const left  = alg.times(alg.alpha(alg.times(c, a)), alg.times(c, b));
          if (!s.contains(right) || !s.contains(left)) {
            out.ideal    = false;
            out.violated = "I2";
            out.witness  = pair_witness(alg, a, b) + ", c=" + alg.name(c);
            return out;
          }
        }
      }
    }
    return out;
  }

  ElementSet generate_ideal(FiniteAlgebra const& alg, ElementSet const& seed) {
    std::size_t const n = alg.size();
    ElementSet        s = seed;
    s.insert(alg.zero());
    for (bool changed = true; changed;) {
      changed    = false;
      auto const before = s;
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          // (I1)
          if (!s.contains(a) && s.contains(b) && s.contains(alg.times(a, alg.alpha(b)))) {
            s.insert(a);
          }
          // (I2)
          if (kernel_related(alg, s, a, b)) {
            for (Element c = 0; c < n; ++c) {
              s.insert(alg.times(alg.alpha(alg.times(a, c)), alg.times(b, c)));
              s.insert(alg.times(alg.alpha(alg.times(c, a)), alg.times(c, b)));
            }
          }
        }
      }
      changed = s != before;
    }
    return s;
  }

  ThetaOfIdeal theta_of_ideal(FiniteAlgebra const& alg, ElementSet const& i) {
    std::size_t const n = alg.size();
    ThetaOfIdeal      out{PairSet(n), std::nullopt, {}};
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (kernel_related(alg, i, a, b)) {
          out.relation.insert(a, b);
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (!out.relation.contains(a, a)) {
        out.diagnostic = "not reflexive: a=" + alg.name(a);
        return out;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!out.relation.contains(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (out.relation.contains(b, c) && !out.relation.contains(a, c)) {
            out.diagnostic = "not transitive: a=" + alg.name(a) + ", b=" + alg.name(b)
                             + ", c=" + alg.name(c);
            return out;
          }
        }
      }
    }
    auto p = equivalence_closure(out.relation);
    if (auto failure = congruence_failure(alg, p)) {
      out.diagnostic = "not a congruence: " + *failure;
      return out;
    }
    auto const kernel = p.block_containing(alg.zero());
    if (kernel != i) {
      out.diagnostic = "0-coset " + format_set(alg, kernel) + " differs from "
                       + format_set(alg, i);
    }
    out.partition = std::move(p);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal lattice
  ////////////////////////////////////////////////////////////////////////

  std::size_t IdealLattice::index_of(ElementSet const& s) const {
    auto it = std::find(ideals.begin(), ideals.end(), s);
    return it == ideals.end() ? kMissing : static_cast<std::size_t>(it - ideals.begin());
  }

  std::size_t IdealLattice::bottom() const {
    return 0;
  }

  std::size_t IdealLattice::top() const {
    return ideals.size() - 1;
  }

  namespace {
    std::vector<ElementSet> scan_subsets(FiniteAlgebra const& alg, std::size_t threads) {
      std::size_t const    n = alg.size();
      std::vector<Element> others;
      for (Element x = 0; x < n; ++x) {
        if (x != alg.zero()) {
          others.push_back(x);
        }
      }
      std::uint64_t const total  = std::uint64_t{1} << others.size();
      std::size_t const   chunks = std::min<std::uint64_t>(total, 64);
      std::vector<std::vector<ElementSet>> found(chunks);
      parallel_for(chunks, threads, [&](std::size_t chunk) {
        for (std::uint64_t m = chunk; m < total; m += chunks) {
          ElementSet s(n);
          s.insert(alg.zero());
          for (std::size_t k = 0; k < others.size(); ++k) {
            if ((m >> k) & 1U) {
              s.insert(others[k]);
            }
          }
          if (is_ideal(alg, s).ideal) {
            found[chunk].push_back(s);
          }
        }
      });
      std::vector<ElementSet> out;
      for (auto& f : found) {
        out.insert(out.end(), f.begin(), f.end());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<ElementSet> kernel_images(FiniteAlgebra const& alg, std::size_t threads) {
      std::vector<ElementSet> out;
      for (auto const& c : all_congruences(alg, threads)) {
        out.push_back(c.block_containing(alg.zero()));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  IdealLattice all_ideals(FiniteAlgebra const& alg, std::size_t threshold, std::size_t threads) {
    IdealLattice lat;
    auto         kernels = kernel_images(alg, threads);
    if (alg.size() <= threshold) {
      lat.ideals = scan_subsets(alg, threads);
      if (lat.ideals == kernels) {
        lat.checks.push_back(pass("ideals-are-kernels",
                                  std::to_string(lat.ideals.size())
                                      + " ideals by subset scan = 0-cosets of Con(A)"));
      } else {
        std::string witness;
        for (auto const& s : lat.ideals) {
          if (std::find(kernels.begin(), kernels.end(), s) == kernels.end()) {
            witness = "ideal " + format_set(alg, s) + " is no 0-coset";
            break;
          }
        }
        if (witness.empty()) {
          for (auto const& s : kernels) {
            if (std::find(lat.ideals.begin(), lat.ideals.end(), s) == lat.ideals.end()) {
              witness = "0-coset " + format_set(alg, s) + " fails " + is_ideal(alg, s).violated;
              break;
            }
          }
        }
        lat.checks.push_back(
            fail("ideals-are-kernels", "subset scan versus 0-cosets of Con(A)", witness));
      }
    } else {
      lat.ideals         = kernels;
      lat.oracle_partial = true;
      lat.checks.push_back(Finding{"ideals-are-kernels",
                                   Verdict::info,
                                   "oracle partial: subset scan skipped above threshold "
                                       + std::to_string(threshold),
                                   {}});
    }

    std::size_t const m = lat.ideals.size();
    lat.contains.assign(m, std::vector<bool>(m, false));
    lat.meet.assign(m, std::vector<std::size_t>(m, kMissing));
    lat.join.assign(m, std::vector<std::size_t>(m, kMissing));
    lat.pseudocomplement.assign(m, kMissing);
    std::string closure_witness;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        lat.contains[i][j] = lat.ideals[i].subset_of(lat.ideals[j]);
        lat.meet[i][j]     = lat.index_of(lat.ideals[i] & lat.ideals[j]);
        lat.join[i][j]     = lat.index_of(generate_ideal(alg, lat.ideals[i] | lat.ideals[j]));
        if ((lat.meet[i][j] == kMissing || lat.join[i][j] == kMissing) && closure_witness.empty()) {
          closure_witness = format_set(alg, lat.ideals[i]) + ", " + format_set(alg, lat.ideals[j]);
        }
      }
    }
    lat.checks.push_back(closure_witness.empty()
                             ? pass("lattice-closure", "intersections and generated joins are ideals")
                             : fail("lattice-closure",
                                    "intersections and generated joins are ideals",
                                    closure_witness));
    if (!closure_witness.empty() || m == 0) {
      return lat;
    }

    std::string pc_witness;
    ElementSet const zero_ideal = ElementSet::of(alg.size(), {alg.zero()});
    for (std::size_t i = 0; i < m; ++i) {
      ElementSet joined = zero_ideal;
      for (std::size_t j = 0; j < m; ++j) {
        if ((lat.ideals[i] & lat.ideals[j]) == zero_ideal) {
          joined = joined | lat.ideals[j];
        }
      }
      auto const star = generate_ideal(alg, joined);
      lat.pseudocomplement[i] = lat.index_of(star);
      bool ok = (star & lat.ideals[i]) == zero_ideal;
      for (std::size_t j = 0; j < m && ok; ++j) {
        if ((lat.ideals[i] & lat.ideals[j]) == zero_ideal && !lat.ideals[j].subset_of(star)) {
          ok = false;
        }
      }
      if (!ok && pc_witness.empty()) {
        pc_witness = "I=" + format_set(alg, lat.ideals[i]);
      }
    }
    lat.checks.push_back(pc_witness.empty()
                             ? pass("pseudocomplemented", "join of S^I meets I in {0} for every I")
                             : fail("pseudocomplemented",
                                    "join of S^I meets I in {0} for every I",
                                    pc_witness));
    return lat;
  }

  IdealJoinCheck ideal_join_via_coset(FiniteAlgebra const& alg,
                                      ElementSet const&    i,
                                      ElementSet const&    j) {
    std::size_t const n     = alg.size();
    auto const        theta = theta_of_ideal(alg, j);
    ElementSet        coset(n);
    for (Element a = 0; a < n; ++a) {
      for (auto x : i.members()) {
        if (theta.relation.contains(a, x)) {
          coset.insert(a);
          break;
        }
      }
    }
    auto generated = generate_ideal(alg, i | j);
    return IdealJoinCheck{coset, generated, coset == generated};
  }

  Pseudocomplement pseudocomplement(FiniteAlgebra const& alg, ElementSet const& i) {
    auto const       lat        = all_ideals(alg);
    ElementSet const zero_ideal = ElementSet::of(alg.size(), {alg.zero()});
    ElementSet       joined     = zero_ideal;
    for (auto const& j : lat.ideals) {
      if ((i & j) == zero_ideal) {
        joined = joined | j;
      }
    }
    auto const star     = generate_ideal(alg, joined);
    bool       verified = (star & i) == zero_ideal;
    for (auto const& j : lat.ideals) {
      if ((i & j) == zero_ideal && !j.subset_of(star)) {
        verified = false;
      }
    }
    return Pseudocomplement{star, verified};
  }

  SkeletonReport skeleton(FiniteAlgebra const& alg) {
    SkeletonReport out;
    auto const     lat = all_ideals(alg);
    if (!all_pass(lat.checks)) {
      out.checks = lat.checks;
      return out;
    }
    std::set<ElementSet> members;
    for (auto pc : lat.pseudocomplement) {
      members.insert(lat.ideals[pc]);
    }
    out.members.assign(members.begin(), members.end());
    std::sort(out.members.begin(), out.members.end());

    auto star = [&](ElementSet const& s) {
      return lat.ideals[lat.pseudocomplement[lat.index_of(s)]];
    };
    ElementSet const zero_ideal = ElementSet::of(alg.size(), {alg.zero()});
    ElementSet const full       = ElementSet::full(alg.size());
    auto             sk_join    = [&](ElementSet const& a, ElementSet const& b) {
      return star(star(a) & star(b));
    };

    std::string witness;
    for (auto const& a : out.members) {
      if (star(star(a)) != a) {
        witness = format_set(alg, a) + " is not regular (I** != I)";
        break;
      }
      if ((a & star(a)) != zero_ideal || sk_join(a, star(a)) != full) {
        witness = format_set(alg, a) + " and its pseudocomplement are not complements";
        break;
      }
      for (auto const& b : out.members) {
        if (!members.contains(a & b) || !members.contains(sk_join(a, b))) {
          witness = format_set(alg, a) + ", " + format_set(alg, b) + " escape the skeleton";
          break;
        }
        for (auto const& c : out.members) {
          if ((a & sk_join(b, c)) != sk_join(a & b, a & c)) {
            witness = format_set(alg, a) + ", " + format_set(alg, b) + ", "
                      + format_set(alg, c) + " violate distributivity";
            break;
          }
        }
        if (!witness.empty()) {
          break;
        }
      }
      if (!witness.empty()) {
        break;
      }
    }
    if (!members.contains(zero_ideal) || !members.contains(full)) {
      witness = "skeleton is not bounded by {0} and A";
    }
    auto const bool_detail = std::to_string(out.members.size())
                             + " members under meet = intersection, join = (I* meet J*)*";
    out.checks.push_back(witness.empty() ? pass("skeleton-boolean", bool_detail)
                                         : fail("skeleton-boolean", bool_detail, witness));

    // {I(e) : e central}, each an interval [0,e]
    std::set<ElementSet> central_ideals;
    std::string          interval_witness;
    for (Element e = 0; e < alg.size(); ++e) {
      if (!is_central(alg, e, CentralityMethod::syntactic).central) {
        continue;
      }
      auto const ie = principal_ideal(alg, e).via_congruence;
      central_ideals.insert(ie);
      ElementSet down(alg.size());
      for (Element x = 0; x < alg.size(); ++x) {
        if (leq(alg, x, e)) {
          down.insert(x);
        }
      }
      if (ie != down && interval_witness.empty()) {
        interval_witness = "e=" + alg.name(e) + ": I(e)=" + format_set(alg, ie)
                           + " but [0,e]=" + format_set(alg, down);
      }
    }
    if (central_ideals == members) {
      out.checks.push_back(pass("skeleton-is-central-ideals",
                                "Skel(Id(A)) = {I(e) : e central}, "
                                    + std::to_string(members.size()) + " members"));
    } else {
      std::string w;
      for (auto const& s : members) {
        if (!central_ideals.contains(s)) {
          w = format_set(alg, s) + " in skeleton, not I(e) for central e";
          break;
        }
      }
      if (w.empty()) {
        for (auto const& s : central_ideals) {
          if (!members.contains(s)) {
            w = format_set(alg, s) + " = I(e) for central e, not in skeleton";
            break;
          }
        }
      }
      out.checks.push_back(
          fail("skeleton-is-central-ideals", "Skel(Id(A)) = {I(e) : e central}", w));
    }
    out.checks.push_back(interval_witness.empty()
                             ? pass("skeleton-intervals", "every I(e), e central, is [0,e]")
                             : fail("skeleton-intervals",
                                    "every I(e), e central, is [0,e]",
                                    interval_witness));
    return out;
  }

  PrincipalIdeal principal_ideal(FiniteAlgebra const& alg, Element a) {
    auto const via_congruence = principal_congruence(alg, a, alg.zero()).block_containing(alg.zero());
    auto const pairs          = polynomial_pairs(alg, a, alg.zero());
    ElementSet via_polynomials(alg.size());
    for (Element c = 0; c < alg.size(); ++c) {
      if (pairs.contains(c, alg.zero())) {
        via_polynomials.insert(c);
      }
    }
    return PrincipalIdeal{via_congruence, via_polynomials, via_congruence == via_polynomials};
  }

  Finding semiring_claims_report(FiniteAlgebra const& alg, ElementSet const& s) {
    std::size_t const n = alg.size();
    std::string       failed_condition;
    if (!s.contains(alg.zero())) {
      failed_condition = "(i) 0 not in S";
    }
    for (Element a = 0; a < n && failed_condition.empty(); ++a) {
      for (Element b = 0; b < n && failed_condition.empty(); ++b) {
        if (s.contains(a) && s.contains(b) && !s.contains(alg.plus(a, b))) {
          failed_condition = "(ii) " + pair_witness(alg, a, b);
        }
      }
    }
    for (Element a = 0; a < n && failed_condition.empty(); ++a) {
      if (!s.contains(a)) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (!s.contains(alg.times(a, c)) || !s.contains(alg.times(c, a))) {
          failed_condition = "(iii) a=" + alg.name(a) + ", c=" + alg.name(c);
          break;
        }
      }
    }
    bool const conditions = failed_condition.empty();
    auto const check      = is_ideal(alg, s);

    Finding f{"semiring-ideal-prop " + format_set(alg, s), Verdict::agree, {}, {}};
    f.detail = std::string("conditions (i)-(iii) ") + (conditions ? "hold" : "fail")
               + ", is_ideal " + (check.ideal ? "true" : "false");
    if (conditions != check.ideal) {
      f.verdict = Verdict::disagree;
      f.witness = conditions ? "(" + check.violated + ") " + check.witness : failed_condition;
    }
    return f;
  }

  Finding semiring_claims_report(FiniteAlgebra const& alg, Element a) {
    ElementSet multiples(alg.size());
    for (Element c = 0; c < alg.size(); ++c) {
      multiples.insert(alg.times(a, c));
    }
    auto const oracle = principal_ideal(alg, a).via_congruence;
    auto       shown  = [&](ElementSet const& s) {
      return s.is_full() ? "A = " + format_set(alg, s) : format_set(alg, s);
    };
    Finding f{"principal-ideal-corollary " + alg.name(a), Verdict::agree, {}, {}};
    f.detail = "computed {a.c} = " + shown(multiples) + " vs oracle I(a) = " + shown(oracle);
    if (multiples != oracle) {
      f.verdict = Verdict::disagree;
      for (Element x = 0; x < alg.size(); ++x) {
        if (oracle.contains(x) != multiples.contains(x)) {
          f.witness = alg.name(x)
                      + (oracle.contains(x) ? " in I(a) but not of the form a.c"
                                            : " = a.c for some c but not in I(a)");
          break;
        }
      }
    }
    return f;
  }

  std::vector<Finding> ideal_lattice_report(FiniteAlgebra const& alg,
                                            std::size_t          threshold,
                                            std::size_t          max_family_bits) {
    std::vector<Finding> out;
    auto const           lat = all_ideals(alg, threshold);
    out.insert(out.end(), lat.checks.begin(), lat.checks.end());
    if (!all_pass(lat.checks)) {
      return out;
    }
    auto const        con = all_congruences(alg);
    std::size_t const m   = lat.ideals.size();

    // Kernel <-> ideal composites.
    std::vector<Partition> theta(m);
    std::string            witness;
    for (std::size_t i = 0; i < m; ++i) {
      auto t = theta_of_ideal(alg, lat.ideals[i]);
      if (!t.partition || !t.diagnostic.empty()) {
        witness = "theta(" + format_set(alg, lat.ideals[i]) + "): " + t.diagnostic;
        break;
      }
      if (std::find(con.begin(), con.end(), *t.partition) == con.end()) {
        witness = "theta(" + format_set(alg, lat.ideals[i]) + ") not in Con(A)";
        break;
      }
      theta[i] = *t.partition;
    }
    for (std::size_t k = 0; k < con.size() && witness.empty(); ++k) {
      auto const kernel = con[k].block_containing(alg.zero());
      auto const t      = theta_of_ideal(alg, kernel);
      if (!t.partition || *t.partition != con[k]) {
        witness = "theta([0]_theta) != theta for theta=" + con[k].to_string(alg);
      }
    }
    if (witness.empty() && con.size() != m) {
      witness = std::to_string(m) + " ideals vs " + std::to_string(con.size()) + " congruences";
    }
    out.push_back(witness.empty()
                      ? pass("kernel-ideal-bijection",
                             "I -> theta(I) and theta -> [0]_theta are mutually inverse on "
                                 + std::to_string(m) + " ideals")
                      : fail("kernel-ideal-bijection", "composites are identities", witness));
    if (!witness.empty()) {
      return out;
    }

    // Lattice isomorphism.
    for (std::size_t i = 0; i < m && witness.empty(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (theta[lat.meet[i][j]] != theta[i].meet(theta[j])) {
          witness = "meet of " + format_set(alg, lat.ideals[i]) + ", "
                    + format_set(alg, lat.ideals[j]);
          break;
        }
        if (theta[lat.join[i][j]] != theta[i].join(theta[j])) {
          witness = "join of " + format_set(alg, lat.ideals[i]) + ", "
                    + format_set(alg, lat.ideals[j]);
          break;
        }
      }
    }
    out.push_back(witness.empty()
                      ? pass("id-con-isomorphism", "theta(I) preserves meets and joins")
                      : fail("id-con-isomorphism", "theta(I) preserves meets and joins", witness));

    // Distributivity.
    witness.clear();
    for (std::size_t a = 0; a < m && witness.empty(); ++a) {
      for (std::size_t b = 0; b < m && witness.empty(); ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          if (lat.meet[a][lat.join[b][c]] != lat.join[lat.meet[a][b]][lat.meet[a][c]]) {
            witness = format_set(alg, lat.ideals[a]) + ", " + format_set(alg, lat.ideals[b])
                      + ", " + format_set(alg, lat.ideals[c]);
            break;
          }
        }
      }
    }
    out.push_back(witness.empty() ? pass("id-distributive", "Id(A) is distributive")
                                  : fail("id-distributive", "Id(A) is distributive", witness));

    // Join-distributivity over families.
    if (m <= max_family_bits) {
      witness.clear();
      for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << m) && witness.empty(); ++fam) {
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t big = lat.bottom(), small = lat.bottom();
          for (std::size_t g = 0; g < m; ++g) {
            if ((fam >> g) & 1U) {
              big   = lat.join[big][g];
              small = lat.join[small][lat.meet[j][g]];
            }
          }
          if (lat.meet[j][big] != small) {
            witness = "J=" + format_set(alg, lat.ideals[j]) + ", family mask "
                      + std::to_string(fam);
            break;
          }
        }
      }
      out.push_back(witness.empty()
                        ? pass("join-distributive",
                               "J meet (join of family) = join of (J meet I_g) over all "
                                   + std::to_string((std::uint64_t{1} << m) - 1) + " families")
                        : fail("join-distributive",
                               "J meet (join of family) = join of (J meet I_g)",
                               witness));
    } else {
      out.push_back(Finding{"join-distributive",
                            Verdict::info,
                            "skipped: " + std::to_string(m) + " ideals exceed family limit",
                            {}});
    }

    // Pseudocomplement laws.
    witness.clear();
    auto const& pc = lat.pseudocomplement;
    for (std::size_t i = 0; i < m && witness.empty(); ++i) {
      if (!lat.contains[i][pc[pc[i]]]) {
        witness = "I=" + format_set(alg, lat.ideals[i]) + " not within I**";
        break;
      }
      if (pc[i] != pc[pc[pc[i]]]) {
        witness = "I=" + format_set(alg, lat.ideals[i]) + ": I* != I***";
        break;
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (lat.contains[i][j] && !lat.contains[pc[j]][pc[i]]) {
          witness = "I=" + format_set(alg, lat.ideals[i]) + ", J=" + format_set(alg, lat.ideals[j])
                    + ": I <= J but not J* <= I*";
          break;
        }
      }
    }
    out.push_back(witness.empty()
                      ? pass("pseudocomplement-laws", "I <= I**, I <= J => J* <= I*, I* = I***")
                      : fail("pseudocomplement-laws", "I <= I**, antitone, I* = I***", witness));

    // <I u J> = [I]_theta(J).
    witness.clear();
    for (std::size_t i = 0; i < m && witness.empty(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto r = ideal_join_via_coset(alg, lat.ideals[i], lat.ideals[j]);
        if (!r.agree) {
          witness = "I=" + format_set(alg, lat.ideals[i]) + ", J=" + format_set(alg, lat.ideals[j])
                    + ": coset " + format_set(alg, r.via_coset) + " vs generated "
                    + format_set(alg, r.via_generation);
          break;
        }
      }
    }
    out.push_back(witness.empty()
                      ? pass("join-via-coset", "<I u J> = [I]_theta(J) for all ideal pairs")
                      : fail("join-via-coset", "<I u J> = [I]_theta(J)", witness));

    // Convexity of ideals.
    witness.clear();
    for (auto const& s : lat.ideals) {
      for (auto c : s.members()) {
        for (Element b = 0; b < alg.size(); ++b) {
          if (leq(alg, b, c) && !s.contains(b)) {
            witness = "I=" + format_set(alg, s) + ", " + alg.name(b) + " <= " + alg.name(c);
          }
        }
      }
      if (!witness.empty()) {
        break;
      }
    }
    out.push_back(witness.empty() ? pass("ideals-convex", "ideals are down-closed")
                                  : fail("ideals-convex", "ideals are down-closed", witness));
    return out;
  }

}  // namespace nearsemi
