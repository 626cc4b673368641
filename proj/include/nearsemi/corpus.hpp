#pragma once

// Named example algebras. Chains are indexed bottom-up, so 0 has index 0
// and 1 has index n-1.

#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"

namespace nearsemi::corpus {

  //! Two-element Boolean algebra.
  FiniteAlgebra b2();

  //! n-element Lukasiewicz chain: max, 1-x, max(0, x+y-1). Names are
  //! "0","h","1" for n = 3 and "0","1/(n-1)",...,"1" otherwise.
  FiniteAlgebra lukasiewicz_chain(std::size_t n);

  inline FiniteAlgebra l3() {
    return lukasiewicz_chain(3);
  }
  inline FiniteAlgebra l4() {
    return lukasiewicz_chain(4);
  }

  //! 3-chain 0 < h < 1 with h.h = h (Goedel product): an iota-near
  //! semiring that fails the Lukasiewicz axiom.
  FiniteAlgebra g3();

  struct Entry {
    std::string   name;
    FiniteAlgebra algebra;
  };

  //! B2, L3, L4, B2xL3, L3xB2, B2xB2, L3xL3: every entry is a Lukasiewicz
  //! semiring.
  std::vector<Entry> lukasiewicz_semirings();

}  // namespace nearsemi::corpus
