#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  //! inrs: iota-near semiring, axioms (i)-(vi).
  //! luk_nrs: adds the Lukasiewicz axiom (vii).
  //! luk_rs: adds associativity of . (monoid reduct).
  enum class AlgebraClass { inrs, luk_nrs, luk_rs };

  char const*                 to_string(AlgebraClass c) noexcept;
  std::optional<AlgebraClass> parse_algebra_class(std::string_view s) noexcept;

  //! How an axiom relates to the requested class.
  //!   required: part of the class definition.
  //!   implied: claimed to follow from the required axioms; a failure on an
  //!     admitted algebra is an adjudicated disagreement.
  //!   informational: not claimed for this class; evaluated for the record.
  enum class AxiomRole { required, implied, informational };

  struct AxiomVerdict {
    std::string id;
    std::string statement;
    AxiomRole   role;
    bool        holds;
    std::string witness;
  };

  struct AxiomReport {
    AlgebraClass              cls;
    std::vector<AxiomVerdict> verdicts;

    //! All required axioms hold.
    bool admitted() const noexcept;

    AxiomVerdict const* find(std::string_view id) const noexcept;

    //! ids of failing required axioms.
    std::vector<std::string> failed_required() const;

    std::vector<Finding> findings() const;
  };

  //! Exhaustive verdict per axiom. Ids: "i", "ii", ..., "vii", "monoid",
  //! "viii", "prop-a", "prop-b", "commutative", "right-distributive".
  AxiomReport check_axioms(FiniteAlgebra const& alg, AlgebraClass cls);

  //! Shorthand for check_axioms(alg, cls).admitted().
  bool satisfies(FiniteAlgebra const& alg, AlgebraClass cls);

}  // namespace nearsemi
