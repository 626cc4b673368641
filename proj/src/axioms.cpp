#include "nearsemi/axioms.hpp"

#include <algorithm>

#include "nearsemi/term.hpp"

namespace nearsemi {

  char const* to_string(AlgebraClass c) noexcept {
    switch (c) {
      case AlgebraClass::inrs:
        return "inrs";
      case AlgebraClass::luk_nrs:
        return "luk-nrs";
      case AlgebraClass::luk_rs:
        return "luk-rs";
    }
    return "?";
  }

  std::optional<AlgebraClass> parse_algebra_class(std::string_view s) noexcept {
    if (s == "inrs") {
      return AlgebraClass::inrs;
    }
    if (s == "luk-nrs") {
      return AlgebraClass::luk_nrs;
    }
    if (s == "luk-rs") {
      return AlgebraClass::luk_rs;
    }
    return std::nullopt;
  }

  bool AxiomReport::admitted() const noexcept {
    return std::all_of(verdicts.begin(), verdicts.end(), [](AxiomVerdict const& v) {
      return v.role != AxiomRole::required || v.holds;
    });
  }

  AxiomVerdict const* AxiomReport::find(std::string_view id) const noexcept {
    for (auto const& v : verdicts) {
      if (v.id == id) {
        return &v;
      }
    }
    return nullptr;
  }

  std::vector<std::string> AxiomReport::failed_required() const {
    std::vector<std::string> out;
    for (auto const& v : verdicts) {
      if (v.role == AxiomRole::required && !v.holds) {
        out.push_back(v.id);
      }
    }
    return out;
  }

  std::vector<Finding> AxiomReport::findings() const {
    std::vector<Finding> out;
    bool const           ok = admitted();
    for (auto const& v : verdicts) {
      Finding f{"(" + v.id + ")", Verdict::pass, v.statement, {}};
      if (!v.holds) {
        f.witness = v.witness;
        switch (v.role) {
          case AxiomRole::required:
            f.verdict = Verdict::fail;
            break;
          case AxiomRole::implied:
            // A consequence claimed for the class failing on an admitted
            // algebra contradicts the claim; on a rejected algebra it is
            // only a symptom.
            f.verdict = ok ? Verdict::disagree : Verdict::info;
            break;
          case AxiomRole::informational:
            f.verdict = Verdict::info;
            break;
        }
      } else if (v.role == AxiomRole::informational) {
        f.verdict = Verdict::info;
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  namespace {
    using terms::x;
    using terms::y;
    using terms::z;

    // First failing identity of a conjunction, as "<label>: <witness>".
    std::optional<std::string> first_failure(FiniteAlgebra const&               alg,
                                             std::vector<Identity> const& ids) {
      for (auto const& id : ids) {
        if (auto w = check_identity(alg, id)) {
          return id.id + ": " + w->describe(alg);
        }
      }
      return std::nullopt;
    }

    AxiomVerdict from_identities(FiniteAlgebra const&         alg,
                                 std::string                  id,
                                 std::string                  statement,
                                 AxiomRole                    role,
                                 std::vector<Identity> const& ids) {
      auto failure = first_failure(alg, ids);
      if (failure && ids.size() == 1) {
        // Single identity: the label repeats the statement.
        failure = failure->substr(failure->find(": ") + 2);
      }
      return AxiomVerdict{std::move(id),
                          std::move(statement),
                          role,
                          !failure.has_value(),
                          failure.value_or(std::string{})};
    }

    AxiomVerdict antitone(FiniteAlgebra const& alg) {
      std::size_t const n = alg.size();
      for (Element b = 0; b < n; ++b) {
        for (Element a = 0; a < n; ++a) {
          if (leq(alg, a, b) && !leq(alg, alg.alpha(b), alg.alpha(a))) {
            return AxiomVerdict{"vi",
                                "x <= y implies y^a <= x^a",
                                AxiomRole::required,
                                false,
                                "x=" + alg.name(a) + ", y=" + alg.name(b)};
          }
        }
      }
      return AxiomVerdict{"vi", "x <= y implies y^a <= x^a", AxiomRole::required, true, {}};
    }
  }  // namespace

  AxiomReport check_axioms(FiniteAlgebra const& alg, AlgebraClass cls) {
    using R            = AxiomRole;
    bool const luk     = cls != AlgebraClass::inrs;
    bool const semiring = cls == AlgebraClass::luk_rs;
    Term const zero    = Term::zero();
    Term const one     = Term::one();

    AxiomReport report{cls, {}};
    auto&       v = report.verdicts;

    v.push_back(from_identities(alg,
                                "i",
                                "<A,+,0,1> is a join semilattice with bounds 0, 1",
                                R::required,
                                {{"idempotent", x() + x(), x()},
                                 {"commutative", x() + y(), y() + x()},
                                 {"associative", (x() + y()) + z(), x() + (y() + z())},
                                 {"zero-neutral", x() + zero, x()},
                                 {"one-top", x() + one, one}}));
    v.push_back(from_identities(alg,
                                "ii",
                                "x.1 = x = 1.x",
                                R::required,
                                {{"right-unit", x() * one, x()}, {"left-unit", one * x(), x()}}));
    v.push_back(from_identities(alg,
                                "iii",
                                "(x+y).z = x.z + y.z",
                                R::required,
                                {{"iii", (x() + y()) * z(), (x() * z()) + (y() * z())}}));
    v.push_back(from_identities(alg,
                                "iv",
                                "x.0 = 0 = 0.x",
                                R::required,
                                {{"right-zero", x() * zero, zero}, {"left-zero", zero * x(), zero}}));
    v.push_back(from_identities(
        alg, "v", "x^a^a = x", R::required, {{"v", alpha(alpha(x())), x()}}));
    v.push_back(antitone(alg));
    v.push_back(from_identities(alg,
                                "vii",
                                "(x.y^a)^a.y^a = (y.x^a)^a.x^a",
                                luk ? R::required : R::informational,
                                {{"vii",
                                  alpha(x() * alpha(y())) * alpha(y()),
                                  alpha(y() * alpha(x())) * alpha(x())}}));
    v.push_back(from_identities(alg,
                                "monoid",
                                "(x.y).z = x.(y.z)",
                                semiring ? R::required : R::informational,
                                {{"monoid", (x() * y()) * z(), x() * (y() * z())}}));
    v.push_back(from_identities(alg,
                                "viii",
                                "(x+y)^a + x^a = x^a",
                                R::implied,
                                {{"viii", alpha(x() + y()) + alpha(x()), alpha(x())}}));
    v.push_back(from_identities(alg,
                                "prop-a",
                                "x.x^a = 0 = x^a.x",
                                luk ? R::implied : R::informational,
                                {{"right", x() * alpha(x()), zero}, {"left", alpha(x()) * x(), zero}}));
    v.push_back(from_identities(alg,
                                "prop-b",
                                "x+y = ((x.y^a)^a.y^a)^a",
                                luk ? R::implied : R::informational,
                                {{"prop-b", x() + y(), alpha(alpha(x() * alpha(y())) * alpha(y()))}}));
    v.push_back(from_identities(alg,
                                "commutative",
                                "x.y = y.x",
                                semiring ? R::implied : R::informational,
                                {{"commutative", x() * y(), y() * x()}}));
    v.push_back(from_identities(alg,
                                "right-distributive",
                                "z.(x+y) = z.x + z.y",
                                semiring ? R::implied : R::informational,
                                {{"right-distributive", z() * (x() + y()), (z() * x()) + (z() * y())}}));
    return report;
  }

  bool satisfies(FiniteAlgebra const& alg, AlgebraClass cls) {
    return check_axioms(alg, cls).admitted();
  }

}  // namespace nearsemi
