#pragma once

// Congruences of finite algebras: principal congruences by union-find
// fixpoint, the pair closure describing unary polynomial images of a pair,
// the whole congruence lattice, and the Mal'cev / 0-regularity checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/parallel.hpp"
#include "nearsemi/partition.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  //! A binary relation on the universe as an n x n membership matrix.
  class PairSet {
   public:
    explicit PairSet(std::size_t n) : n_(n), bits_(n * n, false) {}

    std::size_t universe_size() const noexcept {
      return n_;
    }
    bool contains(Element a, Element b) const noexcept {
      return bits_[a * n_ + b];
    }
    //! Returns true if the pair was new.
    bool insert(Element a, Element b);

    std::size_t                           count() const noexcept;
    std::vector<std::pair<Element, Element>> pairs() const;

    bool operator==(PairSet const&) const = default;

   private:
    std::size_t       n_;
    std::vector<bool> bits_;
  };

  PairSet   as_pairs(Partition const& p);
  Partition equivalence_closure(PairSet const& r);
  PairSet   compose(PairSet const& r, PairSet const& s);

  //! Least congruence containing every listed pair.
  Partition congruence_generated(FiniteAlgebra const&                           alg,
                                 std::vector<std::pair<Element, Element>> const& pairs);

  //! theta(a, b).
  Partition principal_congruence(FiniteAlgebra const& alg, Element a, Element b);

  //! Description of the first substitution failure, nullopt if p is a
  //! congruence.
  std::optional<std::string> congruence_failure(FiniteAlgebra const& alg, Partition const& p);

  inline bool is_congruence(FiniteAlgebra const& alg, Partition const& p) {
    return !congruence_failure(alg, p).has_value();
  }

  //! {(p(a), p(b)) : p unary polynomial}: the subalgebra of A x A generated
  //! by (a, b) and the diagonal.
  PairSet polynomial_pairs(FiniteAlgebra const& alg, Element a, Element b);

  //! Con(A) in canonical order (discrete first, full last).
  std::vector<Partition> all_congruences(FiniteAlgebra const& alg,
                                         std::size_t          threads = 1);

  //! Mal'cev identities, permutability of every congruence pair,
  //! injectivity of theta -> [0]_theta, Gumm-Ursini identities.
  std::vector<Finding> malcev_and_regularity_report(FiniteAlgebra const& alg);

  //! Compares polynomial_pairs(a, b) with theta(a, b) for every pair. Two
  //! findings: the equivalence generated by the pair closure equals theta
  //! (holds in every algebra), and the pair closure already equals theta
  //! (expected in congruence-permutable algebras).
  std::vector<Finding> werner_report(FiniteAlgebra const& alg);

  //! Lattice sanity of Con(A): meets are intersections, joins transitive
  //! closures, both congruences; distributivity over all triples.
  std::vector<Finding> congruence_lattice_report(FiniteAlgebra const&          alg,
                                                 std::vector<Partition> const& con);

}  // namespace nearsemi
