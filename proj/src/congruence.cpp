#include "nearsemi/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nearsemi/term.hpp"

namespace nearsemi {

  bool PairSet::insert(Element a, Element b) {
    auto ref = bits_[a * n_ + b];
    if (ref) {
      return false;
    }
    ref = true;
    return true;
  }

  std::size_t PairSet::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<std::pair<Element, Element>> PairSet::pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        if (contains(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  PairSet as_pairs(Partition const& p) {
    PairSet r(p.size());
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = 0; b < p.size(); ++b) {
        if (p.related(a, b)) {
          r.insert(a, b);
        }
      }
    }
    return r;
  }

  Partition equivalence_closure(PairSet const& r) {
    UnionFind uf(r.universe_size());
    for (auto [a, b] : r.pairs()) {
      uf.unite(a, b);
    }
    return Partition::from(uf);
  }

  PairSet compose(PairSet const& r, PairSet const& s) {
    std::size_t const n = r.universe_size();
    PairSet           out(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!r.contains(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (s.contains(b, c)) {
            out.insert(a, c);
          }
        }
      }
    }
    return out;
  }

  Partition congruence_generated(FiniteAlgebra const&                            alg,
                                 std::vector<std::pair<Element, Element>> const& pairs) {
    std::size_t const                          n = alg.size();
    UnionFind                                  uf(n);
    std::deque<std::pair<Element, Element>>    work;
    auto merge = [&](Element c, Element d) {
      if (uf.unite(c, d)) {
        work.emplace_back(c, d);
      }
    };
    for (auto [a, b] : pairs) {
      merge(a, b);
    }
    // Each merged pair is pushed through every basic translation once; the
    // equivalence generated by a translation-closed set of pairs is a
    // congruence.
    while (!work.empty()) {
      auto [c, d] = work.front();
      work.pop_front();
      merge(alg.alpha(c), alg.alpha(d));
      for (Element x = 0; x < n; ++x) {
        merge(alg.plus(c, x), alg.plus(d, x));
        merge(alg.plus(x, c), alg.plus(x, d));
        merge(alg.times(c, x), alg.times(d, x));
        merge(alg.times(x, c), alg.times(x, d));
      }
    }
    return Partition::from(uf);
  }

  Partition principal_congruence(FiniteAlgebra const& alg, Element a, Element b) {
    return congruence_generated(alg, {{a, b}});
  }

  std::optional<std::string> congruence_failure(FiniteAlgebra const& alg, Partition const& p) {
    std::size_t const n = alg.size();
    if (p.size() != n) {
      return "partition is over a different universe";
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (!p.related(a, b)) {
          continue;
        }
        auto pair = "a=" + alg.name(a) + ", b=" + alg.name(b);
        if (!p.related(alg.alpha(a), alg.alpha(b))) {
          return "alpha not compatible at " + pair;
        }
        for (Element x = 0; x < n; ++x) {
          if (!p.related(alg.plus(a, x), alg.plus(b, x))
              || !p.related(alg.plus(x, a), alg.plus(x, b))) {
            return "+ not compatible at " + pair + ", x=" + alg.name(x);
          }
          if (!p.related(alg.times(a, x), alg.times(b, x))
              || !p.related(alg.times(x, a), alg.times(x, b))) {
            return ". not compatible at " + pair + ", x=" + alg.name(x);
          }
        }
      }
    }
    return std::nullopt;
  }

  PairSet polynomial_pairs(FiniteAlgebra const& alg, Element a, Element b) {
    std::size_t const                       n = alg.size();
    PairSet                                 r(n);
    std::vector<std::pair<Element, Element>> members;
    auto add = [&](Element c, Element d) {
      if (r.insert(c, d)) {
        members.emplace_back(c, d);
      }
    };
    for (Element x = 0; x < n; ++x) {
      add(x, x);
    }
    add(a, b);
    // Synchronised closure: every new pair is combined with every pair seen
    // so far, in both argument positions.
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const [c, d] = members[i];
      add(alg.alpha(c), alg.alpha(d));
      for (std::size_t j = 0; j <= i; ++j) {
        auto const [e, f] = members[j];
        add(alg.plus(c, e), alg.plus(d, f));
        add(alg.plus(e, c), alg.plus(f, d));
        add(alg.times(c, e), alg.times(d, f));
        add(alg.times(e, c), alg.times(f, d));
      }
    }
    return r;
  }

  std::vector<Partition> all_congruences(FiniteAlgebra const& alg, std::size_t threads) {
    std::size_t const                        n = alg.size();
    std::vector<std::pair<Element, Element>> gens;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        gens.emplace_back(a, b);
      }
    }
    std::vector<Partition> principal(gens.size());
    parallel_for(gens.size(), threads, [&](std::size_t i) {
      principal[i] = principal_congruence(alg, gens[i].first, gens[i].second);
    });

    std::set<Partition> found(principal.begin(), principal.end());
    found.insert(Partition::discrete(n));
    found.insert(Partition::full(n));

    // Join closure. Every congruence of a finite algebra is a finite join of
    // principal congruences.
    std::vector<Partition> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Partition> next;
      std::vector<Partition> snapshot(found.begin(), found.end());
      for (auto const& p : frontier) {
        for (auto const& q : snapshot) {
          std::vector<std::pair<Element, Element>> pairs;
          for (auto const* part : {&p, &q}) {
            for (auto const& block : part->blocks()) {
              for (std::size_t k = 1; k < block.size(); ++k) {
                pairs.emplace_back(block[0], block[k]);
              }
            }
          }
          auto j = congruence_generated(alg, pairs);
          if (found.insert(j).second) {
            next.push_back(j);
          }
        }
      }
      frontier = std::move(next);
    }
    return {found.begin(), found.end()};
  }

  std::vector<Finding> malcev_and_regularity_report(FiniteAlgebra const& alg) {
    using terms::x;
    using terms::y;
    std::vector<Finding> out;

    auto identity = [&](std::string id, Identity const& ident) {
      if (auto w = check_identity(alg, ident)) {
        out.push_back(fail(std::move(id),
                           ident.lhs.to_string() + " = " + ident.rhs.to_string(),
                           w->describe(alg)));
      } else {
        out.push_back(pass(std::move(id), ident.lhs.to_string() + " = " + ident.rhs.to_string()));
      }
    };
    identity("malcev-p(x,y,y)=x", {"p(x,y,y)=x", terms::malcev(x(), y(), y()), x()});
    identity("malcev-p(x,x,y)=y", {"p(x,x,y)=y", terms::malcev(x(), x(), y()), y()});

    auto const           con = all_congruences(alg);
    std::vector<PairSet> rel;
    for (auto const& c : con) {
      rel.push_back(as_pairs(c));
    }
    std::optional<std::string> permute_witness;
    for (std::size_t i = 0; i < con.size() && !permute_witness; ++i) {
      for (std::size_t j = i + 1; j < con.size() && !permute_witness; ++j) {
        auto ab = compose(rel[i], rel[j]);
        auto ba = compose(rel[j], rel[i]);
        if (ab != ba) {
          for (auto [c, d] : ab.pairs()) {
            if (!ba.contains(c, d)) {
              permute_witness = "theta=" + con[i].to_string(alg) + ", phi=" + con[j].to_string(alg)
                                + ", pair (" + alg.name(c) + "," + alg.name(d)
                                + ") in theta.phi only";
              break;
            }
          }
          if (!permute_witness) {
            for (auto [c, d] : ba.pairs()) {
              if (!ab.contains(c, d)) {
                permute_witness = "theta=" + con[i].to_string(alg) + ", phi="
                                  + con[j].to_string(alg) + ", pair (" + alg.name(c) + ","
                                  + alg.name(d) + ") in phi.theta only";
                break;
              }
            }
          }
        }
      }
    }
    auto const permute_detail = std::to_string(con.size()) + " congruences, all pairs";
    out.push_back(permute_witness ? fail("permutability", permute_detail, *permute_witness)
                                  : pass("permutability", permute_detail));

    std::map<std::uint64_t, std::size_t> kernels;
    std::optional<std::string>           regular_witness;
    for (std::size_t i = 0; i < con.size(); ++i) {
      auto k              = con[i].block_containing(alg.zero()).bits();
      auto [it, inserted] = kernels.emplace(k, i);
      if (!inserted && !regular_witness) {
        regular_witness = con[it->second].to_string(alg) + " and " + con[i].to_string(alg)
                          + " share 0-coset "
                          + format_set(alg, con[i].block_containing(alg.zero()));
      }
    }
    auto const regular_detail = std::to_string(con.size()) + " congruences, "
                                + std::to_string(kernels.size()) + " distinct 0-cosets";
    out.push_back(regular_witness ? fail("0-regularity", regular_detail, *regular_witness)
                                  : pass("0-regularity", regular_detail));

    identity("gumm-ursini-s(x,x)=0", {"s(x,x)=0", terms::gumm_ursini(x(), x()), Term::zero()});
    identity("gumm-ursini-s(0,x)=x", {"s(0,x)=x", terms::gumm_ursini(Term::zero(), x()), x()});
    return out;
  }

  std::vector<Finding> werner_report(FiniteAlgebra const& alg) {
    std::size_t const          n = alg.size();
    std::optional<std::string> lemma_witness;
    std::optional<std::string> werner_witness;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        auto const r     = polynomial_pairs(alg, a, b);
        auto const theta = principal_congruence(alg, a, b);
        auto const where = "a=" + alg.name(a) + ", b=" + alg.name(b);
        if (!lemma_witness && equivalence_closure(r) != theta) {
          lemma_witness = where;
        }
        if (!werner_witness && r != as_pairs(theta)) {
          werner_witness = where + ": pair closure has " + std::to_string(r.count())
                           + " pairs, theta(a,b) has " + std::to_string(as_pairs(theta).count());
        }
      }
    }
    std::vector<Finding> out;
    out.push_back(lemma_witness
                      ? fail("polynomial-closure-generates-theta",
                             "equivalence generated by {(p(a),p(b))} equals theta(a,b)",
                             *lemma_witness)
                      : pass("polynomial-closure-generates-theta",
                             "equivalence generated by {(p(a),p(b))} equals theta(a,b)"));
    out.push_back(werner_witness ? fail("polynomial-closure-is-theta",
                                        "{(p(a),p(b))} is already theta(a,b)",
                                        *werner_witness)
                                 : pass("polynomial-closure-is-theta",
                                        "{(p(a),p(b))} is already theta(a,b)"));
    return out;
  }

  std::vector<Finding> congruence_lattice_report(FiniteAlgebra const&          alg,
                                                 std::vector<Partition> const& con) {
    std::vector<Finding> out;
    std::set<Partition>  members(con.begin(), con.end());

    std::optional<std::string> compat;
    for (auto const& c : con) {
      if (auto w = congruence_failure(alg, c)) {
        compat = c.to_string(alg) + ": " + *w;
        break;
      }
    }
    out.push_back(compat ? fail("substitution-property", "every member of Con(A)", *compat)
                         : pass("substitution-property",
                                "every member of Con(A), " + std::to_string(con.size())
                                    + " congruences"));

    std::optional<std::string> closed;
    for (std::size_t i = 0; i < con.size() && !closed; ++i) {
      for (std::size_t j = 0; j < con.size() && !closed; ++j) {
        auto m = con[i].meet(con[j]);
        auto k = con[i].join(con[j]);
        if (!members.contains(m) || !members.contains(k)) {
          closed = con[i].to_string(alg) + ", " + con[j].to_string(alg);
        }
      }
    }
    out.push_back(closed ? fail("lattice-closure", "meets and joins stay in Con(A)", *closed)
                         : pass("lattice-closure", "meets and joins stay in Con(A)"));

    std::optional<std::string> distributive;
    for (std::size_t i = 0; i < con.size() && !distributive; ++i) {
      for (std::size_t j = 0; j < con.size() && !distributive; ++j) {
        for (std::size_t k = 0; k < con.size() && !distributive; ++k) {
          auto lhs = con[i].meet(con[j].join(con[k]));
          auto rhs = con[i].meet(con[j]).join(con[i].meet(con[k]));
          if (lhs != rhs) {
            distributive = con[i].to_string(alg) + ", " + con[j].to_string(alg) + ", "
                           + con[k].to_string(alg);
          }
        }
      }
    }
    out.push_back(distributive
                      ? fail("distributive", "x meet (y join z) = (x meet y) join (x meet z)",
                             *distributive)
                      : pass("distributive", "x meet (y join z) = (x meet y) join (x meet z)"));
    return out;
  }

}  // namespace nearsemi
