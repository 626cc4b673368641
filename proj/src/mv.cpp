#include "nearsemi/mv.hpp"

#include <algorithm>

#include "nearsemi/ideal.hpp"

namespace nearsemi {

  MVAlgebra::MVAlgebra(std::size_t              n,
                       std::vector<Element>     oplus,
                       std::vector<Element>     neg,
                       Element                  zero,
                       std::vector<std::string> names)
      : n_(n),
        oplus_(std::move(oplus)),
        neg_(std::move(neg)),
        zero_(zero),
        names_(std::move(names)),
        declared_names_(!names_.empty()) {
    if (n_ == 0) {
      throw StructureError("universe must be non-empty");
    }
    if (n_ > kMaxUniverse) {
      throw ResourceError("universe of size " + std::to_string(n_) + " exceeds the maximum "
                          + std::to_string(kMaxUniverse));
    }
    if (oplus_.size() != n_ * n_ || neg_.size() != n_) {
      throw StructureError("MV tables do not match size " + std::to_string(n_));
    }
    auto out_of_range = [&](Element x) { return x >= n_; };
    if (std::any_of(oplus_.begin(), oplus_.end(), out_of_range)
        || std::any_of(neg_.begin(), neg_.end(), out_of_range) || zero_ >= n_) {
      throw StructureError("MV table entry outside the universe");
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < n_; ++i) {
        names_.push_back(std::to_string(i));
      }
    } else if (names_.size() != n_) {
      throw StructureError("names has " + std::to_string(names_.size()) + " entries, expected "
                           + std::to_string(n_));
    }
  }

  bool MVAlgebra::same_tables(MVAlgebra const& other) const noexcept {
    return n_ == other.n_ && oplus_ == other.oplus_ && neg_ == other.neg_
           && zero_ == other.zero_;
  }

  MVAlgebra mv_chain(std::size_t n) {
    if (n < 2) {
      throw StructureError("an MV chain needs at least two elements");
    }
    Element const            top = static_cast<Element>(n - 1);
    std::vector<Element>     oplus(n * n), neg(n);
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) {
      neg[x] = top - x;
      for (Element y = 0; y < n; ++y) {
        oplus[x * n + y] = std::min(top, x + y);
      }
      if (x == 0 || x == top) {
        names[x] = x == 0 ? "0" : "1";
      } else if (n == 3) {
        names[x] = "h";
      } else {
        names[x] = std::to_string(x) + "/" + std::to_string(top);
      }
    }
    return MVAlgebra(n, std::move(oplus), std::move(neg), 0, std::move(names));
  }

  MVAlgebra mv_product(MVAlgebra const& a, MVAlgebra const& b) {
    std::size_t const na = a.size(), nb = b.size(), n = na * nb;
    if (n > kMaxUniverse) {
      throw ResourceError("product of sizes " + std::to_string(na) + " and "
                          + std::to_string(nb) + " exceeds the maximum "
                          + std::to_string(kMaxUniverse));
    }
    std::vector<Element>     oplus(n * n), neg(n);
    std::vector<std::string> names(n);
    for (Element i = 0; i < n; ++i) {
      Element const i1 = i / nb, i2 = i % nb;
      names[i]         = "(" + a.name(i1) + "," + b.name(i2) + ")";
      neg[i]           = a.neg(i1) * nb + b.neg(i2);
      for (Element j = 0; j < n; ++j) {
        Element const j1 = j / nb, j2 = j % nb;
        oplus[i * n + j] = a.oplus(i1, j1) * nb + b.oplus(i2, j2);
      }
    }
    return MVAlgebra(n, std::move(oplus), std::move(neg),
                     static_cast<Element>(a.zero() * nb + b.zero()), std::move(names));
  }

  std::vector<Finding> check_mv_axioms(MVAlgebra const& mv) {
    std::size_t const n = mv.size();
    auto              nm = [&](Element x) { return mv.name(x); };
    std::string       comm, assoc, unit, dneg, luk, top;
    Element const     one = mv.one();
    for (Element x = 0; x < n; ++x) {
      if (unit.empty() && mv.oplus(x, mv.zero()) != x) {
        unit = "x=" + nm(x);
      }
      if (dneg.empty() && mv.neg(mv.neg(x)) != x) {
        dneg = "x=" + nm(x);
      }
      if (top.empty() && mv.oplus(x, one) != one) {
        top = "x=" + nm(x);
      }
      for (Element y = 0; y < n; ++y) {
        auto const xy = "x=" + nm(x) + ", y=" + nm(y);
        if (comm.empty() && mv.oplus(x, y) != mv.oplus(y, x)) {
          comm = xy;
        }
        Element const l = mv.oplus(mv.neg(mv.oplus(mv.neg(x), y)), y);
        Element const r = mv.oplus(mv.neg(mv.oplus(mv.neg(y), x)), x);
        if (luk.empty() && l != r) {
          luk = xy + " (lhs " + nm(l) + ", rhs " + nm(r) + ")";
        }
        for (Element z = 0; z < n && assoc.empty(); ++z) {
          if (mv.oplus(x, mv.oplus(y, z)) != mv.oplus(mv.oplus(x, y), z)) {
            assoc = xy + ", z=" + nm(z);
          }
        }
      }
    }
    auto finding = [](char const* id, char const* detail, std::string const& w) {
      return w.empty() ? pass(id, detail) : fail(id, detail, w);
    };
    return {
        finding("mv-commutative", "x + y = y + x (oplus)", comm),
        finding("mv-associative", "x + (y + z) = (x + y) + z (oplus)", assoc),
        finding("mv-zero-unit", "x oplus 0 = x", unit),
        finding("mv-double-negation", "x'' = x", dneg),
        finding("mv-lukasiewicz", "(x' oplus y)' oplus y = (y' oplus x)' oplus x", luk),
        finding("mv-absorbing-top", "x oplus 0' = 0'", top),
    };
  }

  bool is_mv_algebra(MVAlgebra const& mv) {
    return all_pass(check_mv_axioms(mv));
  }

  MVAlgebra to_mv(FiniteAlgebra const& alg) {
    std::size_t const    n = alg.size();
    std::vector<Element> oplus(n * n), neg(n);
    for (Element x = 0; x < n; ++x) {
      neg[x] = alg.alpha(x);
      for (Element y = 0; y < n; ++y) {
        oplus[x * n + y] = alg.alpha(alg.times(alg.plus(alg.alpha(x), y), alg.alpha(y)));
      }
    }
    return MVAlgebra(n, std::move(oplus), std::move(neg), alg.zero(),
                     alg.has_declared_names() ? alg.names() : std::vector<std::string>{});
  }

  FiniteAlgebra from_mv(MVAlgebra const& mv) {
    std::size_t const    n = mv.size();
    std::vector<Element> plus(n * n), times(n * n), alpha(n);
    for (Element x = 0; x < n; ++x) {
      alpha[x] = mv.neg(x);
      for (Element y = 0; y < n; ++y) {
        plus[x * n + y]  = mv.oplus(mv.neg(mv.oplus(mv.neg(x), y)), y);
        times[x * n + y] = mv.neg(mv.oplus(mv.neg(x), mv.neg(y)));
      }
    }
    return FiniteAlgebra(n, std::move(plus), std::move(times), std::move(alpha), mv.zero(),
                         mv.one(),
                         mv.has_declared_names() ? mv.names() : std::vector<std::string>{});
  }

  namespace {
    template <typename Names>
    std::string first_difference(char const*              table,
                                 std::span<Element const> got,
                                 std::span<Element const> want,
                                 std::size_t              n,
                                 Names const&             nm) {
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i] != want[i]) {
          std::string cell = got.size() == n ? nm(i) : nm(i / n) + "][" + nm(i % n);
          return std::string(table) + "[" + cell + "]: got " + nm(got[i]) + ", expected "
                 + nm(want[i]);
        }
      }
      return {};
    }
  }  // namespace

  Finding roundtrip_check(FiniteAlgebra const& alg) {
    auto const back = from_mv(to_mv(alg));
    auto       nm   = [&](std::size_t x) { return alg.name(static_cast<Element>(x)); };
    std::string witness;
    if (back.zero() != alg.zero() || back.one() != alg.one()) {
      witness = "constants differ";
    }
    for (auto [label, got, want] :
         {std::tuple{"plus", back.plus_table(), alg.plus_table()},
          std::tuple{"times", back.times_table(), alg.times_table()},
          std::tuple{"alpha", back.alpha_table(), alg.alpha_table()}}) {
      if (witness.empty()) {
        witness = first_difference(label, got, want, alg.size(), nm);
      }
    }
    return witness.empty() ? pass("roundtrip-R(M(A))=A", "R(M(A)) = A table for table")
                           : fail("roundtrip-R(M(A))=A", "R(M(A)) = A table for table", witness);
  }

  Finding roundtrip_check(MVAlgebra const& mv) {
    auto const back = to_mv(from_mv(mv));
    auto       nm   = [&](std::size_t x) { return mv.name(static_cast<Element>(x)); };
    std::string witness;
    if (back.zero() != mv.zero()) {
      witness = "zero differs";
    }
    for (auto [label, got, want] :
         {std::tuple{"oplus", back.oplus_table(), mv.oplus_table()},
          std::tuple{"neg", back.neg_table(), mv.neg_table()}}) {
      if (witness.empty()) {
        witness = first_difference(label, got, want, mv.size(), nm);
      }
    }
    return witness.empty() ? pass("roundtrip-M(R(B))=B", "M(R(B)) = B table for table")
                           : fail("roundtrip-M(R(B))=B", "M(R(B)) = B table for table", witness);
  }

  Finding mv_ideal_correspondence(FiniteAlgebra const& alg, std::size_t max_size) {
    std::size_t const n = alg.size();
    if (n > max_size) {
      return Finding{"mv-ideal-correspondence",
                     Verdict::info,
                     "skipped: size " + std::to_string(n) + " above " + std::to_string(max_size),
                     {}};
    }
    auto const mv = to_mv(alg);
    auto       below = [&](Element x, Element y) {
      return mv.oplus(mv.neg(x), y) == mv.one();
    };
    std::size_t agreed = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ElementSet const s(n, bits);
      bool             mv_ideal = s.contains(mv.zero());
      for (Element x = 0; x < n && mv_ideal; ++x) {
        for (Element y = 0; y < n && mv_ideal; ++y) {
          if (s.contains(x) && s.contains(y) && !s.contains(mv.oplus(x, y))) {
            mv_ideal = false;
          }
          if (s.contains(y) && below(x, y) && !s.contains(x)) {
            mv_ideal = false;
          }
        }
      }
      bool const ideal = is_ideal(alg, s).ideal;
      if (ideal != mv_ideal) {
        return Finding{"mv-ideal-correspondence",
                       Verdict::disagree,
                       "ideals versus MV-ideals over all subsets",
                       format_set(alg, s) + (ideal ? " is an ideal but no MV-ideal"
                                                   : " is an MV-ideal but no ideal")};
      }
      agreed += ideal ? 1 : 0;
    }
    return Finding{"mv-ideal-correspondence",
                   Verdict::agree,
                   "ideals and MV-ideals coincide (" + std::to_string(agreed) + " of "
                       + std::to_string(std::uint64_t{1} << n) + " subsets)",
                   {}};
  }

}  // namespace nearsemi
