#pragma once

// Hasse diagrams in DOT. Only covering pairs become edges; nodes are
// emitted in the order given, so output is stable for a fixed input.

#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/partition.hpp"

namespace nearsemi {

  //! leq[i][j]: element i lies below element j.
  std::string hasse_dot(std::string const&               graph_name,
                        std::vector<std::string> const&  labels,
                        std::vector<std::vector<bool>> const& leq);

  //! Covering pairs (lower, upper) of a finite order.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
      std::vector<std::vector<bool>> const& leq);

  std::string congruence_lattice_dot(FiniteAlgebra const& alg, std::vector<Partition> const& con);
  std::string ideal_lattice_dot(FiniteAlgebra const& alg, std::vector<ElementSet> const& ideals);
  std::string center_lattice_dot(FiniteAlgebra const& alg, std::vector<Element> const& center);

}  // namespace nearsemi
