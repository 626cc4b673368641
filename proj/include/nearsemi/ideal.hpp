#pragma once

// Ideals of Lukasiewicz near semirings: the (I1)/(I2) predicate, Horn
// closure, the congruence theta(I) of an ideal, the ideal lattice with
// pseudocomplements and skeleton, principal ideals, and comparison reports
// for the semiring-specific descriptions of ideals.

#include <optional>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/congruence.hpp"
#include "nearsemi/partition.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  //! Default universe size up to which all_ideals scans every subset.
  inline constexpr std::size_t kDefaultSubsetScanThreshold = 14;

  struct IdealCheck {
    bool ideal;
    //! "contains-0", "I1" or "I2" when not an ideal.
    std::string violated;
    std::string witness;
    //! Derived condition (I3): a^a.b, b^a.a in S implies a.b^a in S.
    bool        i3_holds;
    std::string i3_witness;
  };

  IdealCheck is_ideal(FiniteAlgebra const& alg, ElementSet const& s);

  //! Least subset containing seed and 0 closed under the Horn rules of
  //! (I1) and (I2).
  ElementSet generate_ideal(FiniteAlgebra const& alg, ElementSet const& seed);

  //! The relation a theta(I) b iff a^a.b, b^a.a in I. When I is not an ideal
  //! the relation may fail to be a congruence; `partition` is then empty and
  //! `diagnostic` names the first failed property with a witness.
  struct ThetaOfIdeal {
    PairSet                  relation;
    std::optional<Partition> partition;
    std::string              diagnostic;
  };

  ThetaOfIdeal theta_of_ideal(FiniteAlgebra const& alg, ElementSet const& i);

  //! Id(A) with its order, lattice operations and pseudocomplements. All
  //! tables are indexed by position in `ideals`.
  struct IdealLattice {
    std::vector<ElementSet>               ideals;
    std::vector<std::vector<bool>>        contains;  // contains[i][j]: ideals[i] <= ideals[j]
    std::vector<std::vector<std::size_t>> meet;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::size_t>              pseudocomplement;
    //! The subset scan was skipped (universe above threshold); ideals come
    //! from congruence kernels only.
    bool oracle_partial = false;
    //! Subset-scan versus kernel-image comparison and lattice sanity.
    std::vector<Finding> checks;

    std::size_t index_of(ElementSet const& s) const;
    std::size_t bottom() const;
    std::size_t top() const;
  };

  IdealLattice all_ideals(FiniteAlgebra const& alg,
                          std::size_t          threshold = kDefaultSubsetScanThreshold,
                          std::size_t          threads   = 1);

  struct IdealJoinCheck {
    ElementSet via_coset;      // [I]_theta(J)
    ElementSet via_generation; // <I u J>
    bool       agree;
  };

  IdealJoinCheck ideal_join_via_coset(FiniteAlgebra const& alg,
                                      ElementSet const&    i,
                                      ElementSet const&    j);

  //! Join of all ideals meeting i in {0}; `verified` confirms it is itself
  //! such an ideal and contains every other one.
  struct Pseudocomplement {
    ElementSet value;
    bool       verified;
  };

  Pseudocomplement pseudocomplement(FiniteAlgebra const& alg, ElementSet const& i);

  struct SkeletonReport {
    std::vector<ElementSet> members;  // {I* : I in Id(A)}, canonical order
    std::vector<Finding>    checks;
  };

  SkeletonReport skeleton(FiniteAlgebra const& alg);

  //! I(a) as the 0-coset of theta(a, 0) and, independently, as
  //! {p(a) : p unary polynomial, p(0) = 0}.
  struct PrincipalIdeal {
    ElementSet via_congruence;
    ElementSet via_polynomials;
    bool       agree;
  };

  PrincipalIdeal principal_ideal(FiniteAlgebra const& alg, Element a);

  //! Compares the commutative-semiring description of ideals ((i) 0 in S,
  //! (ii) closed under +, (iii) a.c in S for a in S) with is_ideal.
  Finding semiring_claims_report(FiniteAlgebra const& alg, ElementSet const& s);

  //! Compares {a.c : c in A} with the principal ideal I(a).
  Finding semiring_claims_report(FiniteAlgebra const& alg, Element a);

  //! Id(A) versus Con(A): bijection, lattice isomorphism, distributivity,
  //! join-distributivity over all families (when |Id(A)| <= max_family_bits),
  //! pseudocomplement laws, coset description of joins, convexity.
  std::vector<Finding> ideal_lattice_report(FiniteAlgebra const& alg,
                                            std::size_t          threshold       = kDefaultSubsetScanThreshold,
                                            std::size_t          max_family_bits = 16);

}  // namespace nearsemi
