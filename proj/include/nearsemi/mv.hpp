#pragma once

// MV-algebras on the same carrier as Lukasiewicz semirings and the term
// translations between the two signatures.

#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/report.hpp"

namespace nearsemi {

  //! <A, oplus, neg, 0>. Like FiniteAlgebra, construction validates shape
  //! only; check_mv_axioms decides membership in the variety.
  class MVAlgebra {
   public:
    MVAlgebra(std::size_t              n,
              std::vector<Element>     oplus,
              std::vector<Element>     neg,
              Element                  zero,
              std::vector<std::string> names = {});

    std::size_t size() const noexcept {
      return n_;
    }
    Element oplus(Element a, Element b) const noexcept {
      return oplus_[a * n_ + b];
    }
    Element neg(Element a) const noexcept {
      return neg_[a];
    }
    Element zero() const noexcept {
      return zero_;
    }
    Element one() const noexcept {
      return neg_[zero_];
    }

    std::span<Element const> oplus_table() const noexcept {
      return oplus_;
    }
    std::span<Element const> neg_table() const noexcept {
      return neg_;
    }

    std::string const& name(Element a) const {
      return names_[a];
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    bool has_declared_names() const noexcept {
      return declared_names_;
    }

    bool same_tables(MVAlgebra const& other) const noexcept;

   private:
    std::size_t              n_;
    std::vector<Element>     oplus_;
    std::vector<Element>     neg_;
    Element                  zero_;
    std::vector<std::string> names_;
    bool                     declared_names_;
  };

  //! The (n)-element MV chain {0, 1/(n-1), ..., 1} with truncated addition.
  //! Names match corpus::lukasiewicz_chain(n).
  MVAlgebra mv_chain(std::size_t n);

  //! Componentwise product, indexed like product().
  MVAlgebra mv_product(MVAlgebra const& a, MVAlgebra const& b);

  //! Commutativity, associativity, zero unit, double negation, the
  //! Lukasiewicz identity and absorbing top. One finding per axiom.
  std::vector<Finding> check_mv_axioms(MVAlgebra const& mv);

  bool is_mv_algebra(MVAlgebra const& mv);

  //! x oplus y = ((x^a + y).y^a)^a, neg = alpha.
  MVAlgebra to_mv(FiniteAlgebra const& alg);

  //! x + y = (x' oplus y)' oplus y, x.y = (x' oplus y')', alpha = ', 1 = 0'.
  FiniteAlgebra from_mv(MVAlgebra const& mv);

  //! R(M(A)) = A table for table; the witness names the first differing cell.
  Finding roundtrip_check(FiniteAlgebra const& alg);

  //! M(R(B)) = B table for table.
  Finding roundtrip_check(MVAlgebra const& mv);

  //! Ideals of alg ((I1)/(I2)) versus MV-ideals of to_mv(alg) (0, closed
  //! under oplus, down-closed), by scanning all subsets up to max_size.
  //! AGREE, DISAGREE with a witness subset, or INFO when skipped.
  Finding mv_ideal_correspondence(FiniteAlgebra const& alg, std::size_t max_size = 6);

}  // namespace nearsemi
