#pragma once

// Exhaustive enumeration of iota-near semirings up to isomorphism.
//
// Search order: bounded lattices for + (naturally labelled posets, 0 first
// and 1 last, deduplicated by canonical form), then antitone involutions up
// to lattice automorphism, then the columns of . as join-endomorphisms
// f with f(0) = 0, f(1) = z, checking (vii) and associativity as soon as the
// columns they read are fixed. Each (lattice, alpha) pair is an independent
// task; algebras from different tasks are never isomorphic.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/axioms.hpp"

namespace nearsemi {

  //! Lexicographically least encoding [n, plus, times, alpha] over all
  //! relabellings sending 0 to 0 and 1 to n-1.
  struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    bool operator==(CanonicalForm const&) const = default;
    auto operator<=>(CanonicalForm const&) const = default;

    //! 64-bit FNV-1a of the bytes, as 16 hex digits.
    std::string hash() const;
  };

  CanonicalForm canonical_form(FiniteAlgebra const& alg);

  //! The relabelling of alg that realizes its canonical form.
  FiniteAlgebra canonical_algebra(FiniteAlgebra const& alg);

  inline constexpr std::size_t   kDefaultMaxEnumerationSize = 8;
  inline constexpr std::uint64_t kDefaultMaxNodes           = 2'000'000'000;
  inline constexpr std::uint64_t kDefaultMaxResults         = 1'000'000;

  struct EnumerationTask {
    std::size_t   size;
    AlgebraClass  cls;
    std::size_t   max_size  = kDefaultMaxEnumerationSize;
    std::uint64_t max_nodes = kDefaultMaxNodes;
    //! Bound on algebras held in memory across all tasks.
    std::uint64_t max_results = kDefaultMaxResults;
    std::size_t   threads   = 1;
    //! First (lattice, alpha) task to run; a resume token from a previous
    //! partial run.
    std::size_t resume_from = 0;
  };

  //! Thrown when the node or result budget runs out. `partial` holds every algebra of
  //! the tasks [resume_from, resume_token); rerunning with resume_from =
  //! resume_token yields the rest.
  class EnumerationIncomplete : public ResourceError {
   public:
    EnumerationIncomplete(std::vector<FiniteAlgebra> partial, std::size_t token, std::size_t total);

    std::vector<FiniteAlgebra> const& partial() const noexcept {
      return partial_;
    }
    std::size_t resume_token() const noexcept {
      return token_;
    }
    std::size_t task_count() const noexcept {
      return total_;
    }

   private:
    std::vector<FiniteAlgebra> partial_;
    std::size_t                token_;
    std::size_t                total_;
  };

  //! Canonically labelled representatives, sorted by canonical form.
  //! Throws ResourceError when size exceeds max_size.
  std::vector<FiniteAlgebra> enumerate(EnumerationTask const& task);

  //! |enumerate({n, cls})|, cached per (n, cls).
  std::size_t count(std::size_t n, AlgebraClass cls, std::size_t threads = 1);

  //! Bounded lattices on n elements (0 = index 0, 1 = index n-1) up to
  //! isomorphism, as join tables.
  std::vector<std::vector<Element>> enumerate_lattices(std::size_t n);

}  // namespace nearsemi
