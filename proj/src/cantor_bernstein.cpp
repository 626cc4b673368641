#include "nearsemi/cantor_bernstein.hpp"

#include <algorithm>
#include <sstream>

#include "nearsemi/parallel.hpp"

namespace nearsemi {

  Element CBInstance::gamma_parent(Element x) const {
    return b_interval.embedding[gamma(x)];
  }

  Element CBInstance::beta_parent(Element y) const {
    return a_interval.embedding[beta(y)];
  }

  namespace {
    Homomorphism onto_interval(FiniteAlgebra const&        source,
                               FiniteAlgebra const&        parent,
                               IntervalAlgebra const&      interval,
                               std::vector<Element> const& parent_map,
                               char const*                 label) {
      if (parent_map.size() != source.size()) {
        throw StructureError(std::string(label) + " has " + std::to_string(parent_map.size())
                             + " entries, expected " + std::to_string(source.size()));
      }
      std::vector<Element> map(source.size());
      for (Element x = 0; x < source.size(); ++x) {
        if (parent_map[x] >= parent.size()) {
          throw StructureError(std::string(label) + "(" + source.name(x) + ") is outside the codomain");
        }
        auto i = interval.index_of(parent_map[x]);
        if (!i) {
          throw StructureError(std::string(label) + "(" + source.name(x) + ") = "
                               + parent.name(parent_map[x]) + " is outside [0,"
                               + parent.name(interval.top) + "]");
        }
        map[x] = *i;
      }
      Homomorphism h(source, interval.algebra, std::move(map));
      if (!h.bijective()) {
        throw StructureError(std::string(label) + " is not a bijection onto [0,"
                             + parent.name(interval.top) + "]");
      }
      return h;
    }

    std::string join_names(FiniteAlgebra const& alg, std::vector<Element> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : ", ") + alg.name(x);
      }
      return out;
    }
  }  // namespace

  CBInstance make_cb_instance(FiniteAlgebra        a_alg,
                              FiniteAlgebra        b_alg,
                              Element              a,
                              Element              b,
                              std::vector<Element> gamma,
                              std::vector<Element> beta) {
    if (a >= a_alg.size() || b >= b_alg.size()) {
      throw StructureError("interval top outside its algebra");
    }
    auto a_interval = interval_algebra(a_alg, a);
    auto b_interval = interval_algebra(b_alg, b);
    auto g          = onto_interval(a_alg, b_alg, b_interval, gamma, "gamma");
    auto h          = onto_interval(b_alg, a_alg, a_interval, beta, "beta");
    return CBInstance{std::move(a_alg), std::move(b_alg), a,          b,
                      std::move(a_interval), std::move(b_interval), std::move(g), std::move(h)};
  }

  CBTrace cb_sequences(CBInstance const& inst) {
    auto const& A = inst.a_alg;
    auto const& B = inst.b_alg;
    CBTrace     t;
    t.v.push_back(A.one());
    t.u.push_back(B.one());
    std::size_t const limit = A.size() + B.size() + 2;
    for (std::size_t n = 0;; ++n) {
      Element const vn = inst.beta_parent(t.u[n]);
      Element const un = inst.gamma_parent(t.v[n]);
      if (vn == t.v[n] && un == t.u[n]) {
        t.stabilization = n;
        break;
      }
      if (n + 1 > limit) {
        throw StructureError("chains did not stabilize within " + std::to_string(limit) + " steps");
      }
      t.v.push_back(vn);
      t.u.push_back(un);
    }
    std::size_t const N = t.stabilization;
    for (std::size_t n = 0; n <= N; ++n) {
      Element const vn1 = n < N ? t.v[n + 1] : t.v[N];
      Element const un1 = n < N ? t.u[n + 1] : t.u[N];
      t.e.push_back(A.times(t.v[n], A.alpha(vn1)));
      t.d.push_back(B.times(t.u[n], B.alpha(un1)));
    }
    return t;
  }

  std::vector<Finding> cb_trace_checks(CBInstance const& inst, CBTrace const& t) {
    auto const&       A = inst.a_alg;
    auto const&       B = inst.b_alg;
    std::size_t const N = t.stabilization;
    auto              finding = [](char const* id, std::string detail, std::string const& w) {
      return w.empty() ? pass(id, std::move(detail)) : fail(id, std::move(detail), w);
    };
    std::vector<Finding> out;

    std::string w;
    for (std::size_t n = 0; n <= N && w.empty(); ++n) {
      auto const idx = "[" + std::to_string(n) + "]";
      if (!is_central_syntactic(A, t.v[n]).central) w = "v" + idx;
      else if (!is_central_syntactic(B, t.u[n]).central) w = "u" + idx;
      else if (!is_central_syntactic(A, t.e[n]).central) w = "e" + idx;
      else if (!is_central_syntactic(B, t.d[n]).central) w = "d" + idx;
    }
    out.push_back(finding("cb-central", "every v_n, u_n, e_n, d_n is central", w));

    w.clear();
    for (std::size_t n = 0; n < N && w.empty(); ++n) {
      bool const weak = leq(A, t.v[n + 1], t.v[n]) && leq(B, t.u[n + 1], t.u[n]);
      bool const strict = t.v[n + 1] != t.v[n] || t.u[n + 1] != t.u[n];
      if (!weak || !strict) {
        w = "n=" + std::to_string(n) + (weak ? ": no strict step" : ": chain increases");
      }
    }
    out.push_back(finding("cb-descent",
                          "chains descend strictly until stabilization at N="
                              + std::to_string(N),
                          w));

    w.clear();
    if (inst.gamma_parent(t.v_inf()) != t.u_inf()) {
      w = "gamma(v_inf)=" + B.name(inst.gamma_parent(t.v_inf()));
    }
    out.push_back(finding("cb-gamma-limit", "gamma(v_inf) = u_inf", w));
    w.clear();
    if (inst.beta_parent(t.u_inf()) != t.v_inf()) {
      w = "beta(u_inf)=" + A.name(inst.beta_parent(t.u_inf()));
    }
    out.push_back(finding("cb-beta-limit", "beta(u_inf) = v_inf", w));

    std::string gw, bw;
    for (std::size_t n = 0; n < N; ++n) {
      if (gw.empty() && inst.gamma_parent(t.e[n]) != t.d[n + 1]) {
        gw = "n=" + std::to_string(n) + ": gamma(e_n)=" + B.name(inst.gamma_parent(t.e[n]))
             + ", d_{n+1}=" + B.name(t.d[n + 1]);
      }
      if (bw.empty() && inst.beta_parent(t.d[n]) != t.e[n + 1]) {
        bw = "n=" + std::to_string(n) + ": beta(d_n)=" + A.name(inst.beta_parent(t.d[n]))
             + ", e_{n+1}=" + A.name(t.e[n + 1]);
      }
    }
    out.push_back(finding("cb-gamma-differences", "gamma(e_n) = d_{n+1} for n < N", gw));
    out.push_back(finding("cb-beta-differences", "beta(d_n) = e_{n+1} for n < N", bw));

    w.clear();
    for (std::size_t n = 0; n < N && w.empty(); ++n) {
      if (A.plus(t.e[n], t.v[n + 1]) != t.v[n] || A.times(t.e[n], t.v[n + 1]) != A.zero()) {
        w = "A, n=" + std::to_string(n);
      } else if (B.plus(t.d[n], t.u[n + 1]) != t.u[n]
                 || B.times(t.d[n], t.u[n + 1]) != B.zero()) {
        w = "B, n=" + std::to_string(n);
      }
    }
    out.push_back(finding("cb-relative-complement",
                          "e_n is the complement of v_{n+1} in [0,v_n], likewise d_n",
                          w));

    auto disjoint_and_cover = [](FiniteAlgebra const& alg, Element limit,
                                 std::vector<Element> const& diffs, char const* sym,
                                 std::string& disjoint, std::string& cover) {
      std::vector<Element> parts{limit};
      parts.insert(parts.end(), diffs.begin(), diffs.end());
      Element joined = alg.zero();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        joined = alg.plus(joined, parts[i]);
        for (std::size_t j = i + 1; j < parts.size() && disjoint.empty(); ++j) {
          if (alg.times(parts[i], parts[j]) != alg.zero()) {
            auto label = [&](std::size_t k) {
              return k == 0 ? std::string(sym) + "_inf"
                            : std::string(1, sym[0] == 'v' ? 'e' : 'd') + "_"
                                  + std::to_string(k - 1);
            };
            disjoint = label(i) + " meets " + label(j);
          }
        }
      }
      if (joined != alg.one() && cover.empty()) {
        cover = std::string(sym) + "_inf joined with all differences is " + alg.name(joined);
      }
    };
    std::string dis, cov;
    disjoint_and_cover(A, t.v_inf(), t.e, "v", dis, cov);
    disjoint_and_cover(B, t.u_inf(), t.d, "u", dis, cov);
    out.push_back(finding("cb-disjoint", "v_inf, e_0, e_1, ... pairwise meet in 0 (likewise u, d)", dis));
    out.push_back(finding("cb-join-to-1", "v_inf + e_0 + e_1 + ... = 1 (likewise u, d)", cov));
    return out;
  }

  Homomorphism partition_decomposition(FiniteAlgebra const& alg, std::vector<Element> const& parts) {
    if (parts.empty()) {
      throw PreconditionError("join != 1: no parts given");
    }
    for (auto p : parts) {
      if (p >= alg.size()) {
        throw PreconditionError("part index outside the universe");
      }
      if (!is_central_syntactic(alg, p).central) {
        throw PreconditionError("non-central: part " + alg.name(p));
      }
    }
    Element joined = alg.zero();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      joined = alg.plus(joined, parts[i]);
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (Element m = alg.times(parts[i], parts[j]); m != alg.zero()) {
          throw PreconditionError("overlapping: parts " + alg.name(parts[i]) + " and "
                                  + alg.name(parts[j]) + " meet in " + alg.name(m));
        }
      }
    }
    if (joined != alg.one()) {
      throw PreconditionError("join != 1: parts join to " + alg.name(joined));
    }

    std::vector<IntervalAlgebra> factors;
    for (auto p : parts) {
      factors.push_back(interval_algebra(alg, p));
    }
    FiniteAlgebra target = factors[0].algebra;
    for (std::size_t i = 1; i < factors.size(); ++i) {
      target = product(target, factors[i].algebra);
    }
    std::vector<Element> map(alg.size());
    for (Element x = 0; x < alg.size(); ++x) {
      Element code = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        code = code * static_cast<Element>(factors[i].algebra.size())
               + *factors[i].index_of(central_meet(alg, parts[i], x));
      }
      map[x] = code;
    }
    Homomorphism h(alg, std::move(target), std::move(map));
    if (!h.bijective()) {
      throw StructureError("decomposition map is not bijective");
    }
    return h;
  }

  Homomorphism cb_isomorphism(CBInstance const& inst, CBTrace const& t) {
    auto const&       A = inst.a_alg;
    auto const&       B = inst.b_alg;
    std::size_t const N = t.stabilization;

    std::vector<Element> a_parts{t.v_inf()}, b_parts{t.u_inf()};
    for (std::size_t k = 0; k < N; ++k) {
      a_parts.push_back(t.e[k]);
      b_parts.push_back(t.d[k]);
    }
    auto const pa = partition_decomposition(A, a_parts);
    auto const pb = partition_decomposition(B, b_parts);

    std::vector<Element> beta_inverse(A.size(), 0);
    std::vector<bool>    in_beta_image(A.size(), false);
    for (Element y = 0; y < B.size(); ++y) {
      beta_inverse[inst.beta_parent(y)]  = y;
      in_beta_image[inst.beta_parent(y)] = true;
    }

    // Source part i in A goes to target part target_of[i] in B.
    std::size_t const        parts = a_parts.size();
    std::vector<std::size_t> target_of(parts);
    std::vector<bool>        via_gamma(parts);
    target_of[0] = 0;
    via_gamma[0] = true;
    for (std::size_t k = 0; k < N; ++k) {
      bool const  even = k % 2 == 0;
      std::size_t j    = even ? k + 1 : k - 1;
      via_gamma[k + 1] = even;
      if (j >= N) {
        if (t.e[k] != A.zero()) {
          throw StructureError("e_" + std::to_string(k) + " is nonzero but d_" + std::to_string(j)
                               + " lies past stabilization");
        }
        j = k;  // both trivial; the zero factor maps to a zero factor
      }
      target_of[k + 1] = j + 1;
    }
    std::vector<bool> hit(parts, false);
    for (auto j : target_of) {
      if (hit[j]) {
        throw StructureError("factor pairing is not a bijection");
      }
      hit[j] = true;
    }

    std::vector<IntervalAlgebra> a_int, b_int;
    for (std::size_t i = 0; i < parts; ++i) {
      a_int.push_back(interval_algebra(A, a_parts[i]));
      b_int.push_back(interval_algebra(B, b_parts[i]));
    }
    // Factor isomorphisms [0,a_i] -> [0,b_j], verified.
    std::vector<std::vector<Element>> factor_maps(parts);
    for (std::size_t i = 0; i < parts; ++i) {
      auto const& src = a_int[i];
      auto const& dst = b_int[target_of[i]];
      std::vector<Element> fmap(src.algebra.size());
      for (Element x = 0; x < src.algebra.size(); ++x) {
        Element const p = src.embedding[x];
        Element       image;
        if (via_gamma[i]) {
          image = inst.gamma_parent(p);
        } else {
          if (!in_beta_image[p]) {
            throw StructureError(A.name(p) + " is outside the image of beta");
          }
          image = beta_inverse[p];
        }
        auto idx = dst.index_of(image);
        if (!idx) {
          throw StructureError("factor [0," + A.name(a_parts[i]) + "] maps " + A.name(p)
                               + " outside [0," + B.name(b_parts[target_of[i]]) + "]");
        }
        fmap[x] = *idx;
      }
      Homomorphism check(src.algebra, dst.algebra, fmap);
      if (!check.bijective()) {
        throw StructureError("factor map [0," + A.name(a_parts[i]) + "] -> [0,"
                             + B.name(b_parts[target_of[i]]) + "] is not bijective");
      }
      factor_maps[i] = std::move(fmap);
    }

    auto const           pb_inverse = pb.inverse();
    std::vector<Element> map(A.size());
    for (Element x = 0; x < A.size(); ++x) {
      // Decode the A-tuple (last factor fastest), permute, encode for B.
      std::vector<Element> a_tuple(parts), b_tuple(parts);
      Element              code = pa(x);
      for (std::size_t i = parts; i-- > 0;) {
        a_tuple[i] = code % a_int[i].algebra.size();
        code /= a_int[i].algebra.size();
      }
      for (std::size_t i = 0; i < parts; ++i) {
        b_tuple[target_of[i]] = factor_maps[i][a_tuple[i]];
      }
      Element b_code = 0;
      for (std::size_t j = 0; j < parts; ++j) {
        b_code = b_code * static_cast<Element>(b_int[j].algebra.size()) + b_tuple[j];
      }
      map[x] = pb_inverse(b_code);
    }
    Homomorphism iso(A, B, std::move(map));
    if (!iso.bijective()) {
      throw StructureError("assembled map is not bijective");
    }
    return iso;
  }

  CBReport cb_report(CBInstance const& inst) {
    CBReport    out;
    auto const& A = inst.a_alg;
    auto const& B = inst.b_alg;
    CBTrace     t;
    try {
      t = cb_sequences(inst);
    } catch (StructureError const& err) {
      out.findings.push_back(fail("cb-sequences", "chains stabilize", err.what()));
      return out;
    }
    out.lines.push_back("a = " + A.name(inst.a) + ", b = " + B.name(inst.b)
                        + ", stabilization index N = " + std::to_string(t.stabilization));
    out.lines.push_back("n  v_n  u_n  e_n  d_n");
    for (std::size_t n = 0; n <= t.stabilization; ++n) {
      out.lines.push_back(std::to_string(n) + "  " + A.name(t.v[n]) + "  " + B.name(t.u[n])
                          + "  " + A.name(t.e[n]) + "  " + B.name(t.d[n]));
    }
    out.lines.push_back("v_inf = " + A.name(t.v_inf()) + ", u_inf = " + B.name(t.u_inf()));
    std::vector<Element> a_parts{t.v_inf()}, b_parts{t.u_inf()};
    for (std::size_t k = 0; k < t.stabilization; ++k) {
      a_parts.push_back(t.e[k]);
      b_parts.push_back(t.d[k]);
    }
    out.lines.push_back("factors of A: " + join_names(A, a_parts));
    out.lines.push_back("factors of B: " + join_names(B, b_parts));

    out.findings = cb_trace_checks(inst, t);
    try {
      auto iso = cb_isomorphism(inst, t);
      std::string table;
      for (Element x = 0; x < A.size(); ++x) {
        table += (x ? ", " : "") + A.name(x) + "->" + B.name(iso(x));
      }
      out.lines.push_back("map: " + table);
      out.findings.push_back(
          pass("cb-isomorphism", "assembled map A -> B is a verified isomorphism"));
      out.iso = std::move(iso);
    } catch (std::exception const& err) {
      out.findings.push_back(fail("cb-isomorphism", "assembled map A -> B", err.what()));
    }
    return out;
  }

  CBReport cb_search(FiniteAlgebra const& a_alg,
                     FiniteAlgebra const& b_alg,
                     std::size_t          cap,
                     std::size_t          threads) {
    std::vector<Element> ca, cb;
    for (Element x = 0; x < a_alg.size(); ++x) {
      if (is_central_syntactic(a_alg, x).central) {
        ca.push_back(x);
      }
    }
    for (Element y = 0; y < b_alg.size(); ++y) {
      if (is_central_syntactic(b_alg, y).central) {
        cb.push_back(y);
      }
    }
    std::size_t const pairs = ca.size() * cb.size();
    if (pairs > cap) {
      throw ResourceError("cb search over " + std::to_string(pairs)
                          + " central pairs exceeds the cap " + std::to_string(cap));
    }

    // Per pair: both interval isomorphisms, lexicographically least.
    struct Hit {
      std::vector<Element> gamma, beta;
    };
    std::vector<std::optional<Hit>> hits(pairs);
    parallel_for(pairs, threads, [&](std::size_t k) {
      Element const a  = ca[k / cb.size()];
      Element const b  = cb[k % cb.size()];
      auto const    ib = interval_algebra(b_alg, b);
      auto const    ia = interval_algebra(a_alg, a);
      if (ib.algebra.size() != a_alg.size() || ia.algebra.size() != b_alg.size()) {
        return;
      }
      auto g = find_isomorphism(a_alg, ib.algebra);
      auto h = find_isomorphism(b_alg, ia.algebra);
      if (!g || !h) {
        return;
      }
      Hit hit;
      for (Element x = 0; x < a_alg.size(); ++x) {
        hit.gamma.push_back(ib.embedding[(*g)(x)]);
      }
      for (Element y = 0; y < b_alg.size(); ++y) {
        hit.beta.push_back(ia.embedding[(*h)(y)]);
      }
      hits[k] = std::move(hit);
    });

    std::size_t qualifying = 0;
    std::size_t first      = pairs;
    bool        proper     = false;
    for (std::size_t k = 0; k < pairs; ++k) {
      if (hits[k]) {
        ++qualifying;
        first  = std::min(first, k);
        proper = proper || ca[k / cb.size()] != a_alg.one() || cb[k % cb.size()] != b_alg.one();
      }
    }

    CBReport out;
    out.findings.push_back(Finding{"cb-search",
                                   Verdict::info,
                                   "searched " + std::to_string(pairs) + " central pairs, "
                                       + std::to_string(qualifying) + " qualifying",
                                   {}});
    if (first == pairs) {
      std::string why = a_alg.size() != b_alg.size()
                            ? "sizes differ (" + std::to_string(a_alg.size()) + " vs "
                                  + std::to_string(b_alg.size())
                                  + "): the hypotheses force |A| = |B| on finite algebras"
                            : "no central pair admits A ~ [0,b] and B ~ [0,a]";
      out.findings.push_back(Finding{"cb-no-qualifying-pair", Verdict::info, why, {}});
      return out;
    }

    Element const a   = ca[first / cb.size()];
    Element const b   = cb[first % cb.size()];
    auto          inst = make_cb_instance(a_alg, b_alg, a, b, hits[first]->gamma, hits[first]->beta);
    auto          sub  = cb_report(inst);
    out.lines          = std::move(sub.lines);
    out.findings.insert(out.findings.end(), sub.findings.begin(), sub.findings.end());
    out.iso = std::move(sub.iso);

    out.findings.push_back(Finding{
        "cb-finite-degenerate",
        Verdict::info,
        proper ? "a qualifying pair has a proper interval"
               : "only a = 1, b = 1 qualifies; finite hypotheses leave no proper interval",
        {}});
    if (out.iso) {
      bool const confirmed = find_isomorphism(a_alg, b_alg).has_value();
      out.findings.push_back(confirmed
                                 ? pass("cb-confirms-isomorphic",
                                        "find_isomorphism independently confirms A ~ B")
                                 : fail("cb-confirms-isomorphic",
                                        "find_isomorphism independently confirms A ~ B",
                                        "no isomorphism found by search"));
    }
    return out;
  }

}  // namespace nearsemi
