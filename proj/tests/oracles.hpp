#pragma once

// Brute-force reference computations written straight from the
// definitions, sharing no code with the engines they check.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/axioms.hpp"

namespace oracle {

  using nearsemi::Element;
  using nearsemi::FiniteAlgebra;

  //! Every equivalence relation with the substitution property, as block
  //! label vectors normalized to first-occurrence order.
  std::vector<std::vector<Element>> congruences(FiniteAlgebra const& alg);

  //! (I1) and (I2) checked literally over all tuples, subset as a bitmask.
  bool is_ideal(FiniteAlgebra const& alg, std::uint64_t subset);

  std::vector<std::uint64_t> ideals(FiniteAlgebra const& alg);

  //! All algebras of size n (0 at index 0, 1 at index n-1) in the class,
  //! up to isomorphism, by scanning every table with the forced 0/1 rows
  //! and columns filled in. Feasible for n <= 4.
  std::vector<FiniteAlgebra> brute_force_models(std::size_t n, nearsemi::AlgebraClass cls);

  //! Frozen rows of data/regression_counts.txt.
  struct CountRow {
    std::size_t  size;
    std::string  cls;
    std::size_t  count;
  };
  std::vector<CountRow> frozen_counts(std::string const& path);

}  // namespace oracle
