#pragma once

// Cantor-Bernstein machinery for central intervals: the chains
// v_{n+1} = beta(u_n), u_{n+1} = gamma(v_n), their differences, partition
// of unity decompositions and assembly of an isomorphism A -> B.

#include <optional>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/center.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  //! Default limit on |Ce(A)| * |Ce(B)| for cb_search.
  inline constexpr std::size_t kDefaultCbSearchCap = 4096;

  //! gamma: A ~ [0,b] in B and beta: B ~ [0,a] in A, both verified.
  struct CBInstance {
    FiniteAlgebra   a_alg;
    FiniteAlgebra   b_alg;
    Element         a;
    Element         b;
    IntervalAlgebra a_interval;  // [0,a] in A
    IntervalAlgebra b_interval;  // [0,b] in B
    Homomorphism    gamma;       // A -> b_interval.algebra
    Homomorphism    beta;        // B -> a_interval.algebra

    //! gamma and beta as maps into the parent algebras.
    Element gamma_parent(Element x) const;
    Element beta_parent(Element y) const;
  };

  //! `gamma` lists, for every element of A, its image as an element of B;
  //! likewise `beta`. Throws PreconditionError when a or b is not central
  //! and StructureError when a map leaves its interval or is not an
  //! isomorphism onto it.
  CBInstance make_cb_instance(FiniteAlgebra        a_alg,
                              FiniteAlgebra        b_alg,
                              Element              a,
                              Element              b,
                              std::vector<Element> gamma,
                              std::vector<Element> beta);

  //! Chains up to the stabilization index N: v[0..N], u[0..N] with
  //! v[N] = v_inf, u[N] = u_inf; differences e[0..N], d[0..N] (e[N] = d[N] = 0).
  struct CBTrace {
    std::vector<Element> v;
    std::vector<Element> u;
    std::vector<Element> e;
    std::vector<Element> d;
    std::size_t          stabilization = 0;

    Element v_inf() const {
      return v.back();
    }
    Element u_inf() const {
      return u.back();
    }
  };

  CBTrace cb_sequences(CBInstance const& inst);

  //! Checks on a trace: centrality, descent, limits, the
  //! gamma/beta difference identities, relative complements, disjointness
  //! and joins to 1.
  std::vector<Finding> cb_trace_checks(CBInstance const& inst, CBTrace const& trace);

  //! a -> (a ^ a_i)_i onto the product of the intervals [0,a_i], factors in
  //! list order. Throws PreconditionError naming the failed clause
  //! (non-central, overlapping, join != 1) and StructureError if the map is
  //! not an isomorphism.
  Homomorphism partition_decomposition(FiniteAlgebra const& alg, std::vector<Element> const& parts);

  //! Assembles A -> B from the decompositions A ~ [0,v_inf] x prod [0,e_k]
  //! and B ~ [0,u_inf] x prod [0,d_k], pairing [0,v_inf] with [0,u_inf] and
  //! [0,e_k] with [0,d_{k+1}] through gamma for even k, [0,e_k] with
  //! [0,d_{k-1}] through beta^-1 for odd k. Throws StructureError when a
  //! factor map fails.
  Homomorphism cb_isomorphism(CBInstance const& inst, CBTrace const& trace);

  struct CBReport {
    std::vector<std::string>    lines;  // chain table, factor list, map table
    std::vector<Finding>        findings;
    std::optional<Homomorphism> iso;
  };

  CBReport cb_report(CBInstance const& inst);

  //! Searches central pairs (a, b) with A ~ [0,b] and B ~ [0,a]; on success
  //! runs the construction and confirms A ~ B. Throws ResourceError when
  //! |Ce(A)| * |Ce(B)| exceeds cap.
  CBReport cb_search(FiniteAlgebra const& a_alg,
                     FiniteAlgebra const& b_alg,
                     std::size_t          cap     = kDefaultCbSearchCap,
                     std::size_t          threads = 1);

}  // namespace nearsemi
