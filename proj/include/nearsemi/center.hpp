#pragma once

// Central elements via the Church term q(x,y,z) = x.y + x^a.z: syntactic and
// semantic centrality, the Boolean algebra Ce(A), interval algebras [0,e]
// and the decomposition A ~ A_e x A_{e^a}.

#include <optional>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/partition.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  inline Element q(FiniteAlgebra const& alg, Element x, Element y, Element z) noexcept {
    return alg.plus(alg.times(x, y), alg.times(alg.alpha(x), z));
  }

  //! e ^ b = q(e, b, 0). For central e this is e.b, the meet of e and b.
  inline Element central_meet(FiniteAlgebra const& alg, Element e, Element b) noexcept {
    return q(alg, e, b, alg.zero());
  }

  enum class CentralityMethod { syntactic, semantic, both };

  struct CentralityCheck {
    bool central;
    //! For non-central elements: the failed condition with its witness.
    std::string witness;
    //! Set by method `both` when the two methods disagree.
    std::optional<Finding> disagreement;
  };

  //! Conditions (a)-(d) on q, exhaustively.
  CentralityCheck is_central_syntactic(FiniteAlgebra const& alg, Element e);

  //! theta(e,0) and theta(e,1) are complementary factor congruences.
  CentralityCheck is_central_semantic(FiniteAlgebra const& alg, Element e);

  CentralityCheck is_central(FiniteAlgebra const& alg,
                             Element              e,
                             CentralityMethod     method = CentralityMethod::both);

  //! Meet Delta, join Nabla, permuting, and every pair of blocks intersects
  //! (so a -> (a/theta, a/phi) is a bijection onto the product of quotients).
  std::optional<std::string> factor_pair_failure(FiniteAlgebra const& alg,
                                                 Partition const&     theta,
                                                 Partition const&     phi);

  struct CenterReport {
    std::vector<Element> elements;
    //! Boolean operations as indices into `elements`.
    std::vector<std::vector<std::size_t>> meet;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::size_t>              complement;
    std::vector<Finding>                  checks;
  };

  CenterReport center(FiniteAlgebra const& alg);

  //! Idempotency, commutation and associativity of central elements,
  //! a <= e => a.e = a, e.b is the order meet, e distributes over joins.
  std::vector<Finding> central_laws_report(FiniteAlgebra const& alg);

  //! [0,e] with operations g_e(x) = e ^ g(x). Elements keep the parent's
  //! names; `embedding[i]` is the parent index of interval element i, and
  //! interval elements are ordered by parent index.
  struct IntervalAlgebra {
    FiniteAlgebra        algebra;
    std::vector<Element> embedding;
    Element              top;

    //! Interval index of a parent element, if it lies in [0, top].
    std::optional<Element> index_of(Element parent) const;
  };

  //! Throws PreconditionError when e is not central.
  IntervalAlgebra interval_algebra(FiniteAlgebra const& alg, Element e);

  struct Decomposition {
    Element         e;
    IntervalAlgebra factor;    // A_e
    IntervalAlgebra cofactor;  // A_{e^a}
    //! a -> (e ^ a, e^a ^ a) into product(factor, cofactor).
    Homomorphism pair_map;
  };

  //! Throws PreconditionError when e is not central.
  Decomposition decompose(FiniteAlgebra const& alg, Element e);

  //! I(e) = [0,e]; (I(e), I(e^a)) factor ideals; I(e^a) = I(e)*.
  std::vector<Finding> central_ideal_check(FiniteAlgebra const& alg, Element e);

  //! Everything above over all elements of alg.
  std::vector<Finding> center_decomposition_report(FiniteAlgebra const& alg);

}  // namespace nearsemi
