#pragma once

// Finite algebras of signature (+, ., alpha, 0, 1) stored as dense operation
// tables, plus the small value types every engine shares: element subsets,
// structure-preserving maps, direct products and isomorphism search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearsemi {

  using Element = unsigned;

  //! Largest universe any engine accepts. ElementSet is a 64-bit mask.
  inline constexpr std::size_t kMaxUniverse = 64;

  class StructureError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An operation was called on an input outside its domain (e.g. a
  //! non-central element where centrality is required).
  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Immutable operation tables over the universe {0, ..., n-1}.
  //!
  //! The constructor validates shape only (dimensions, entry ranges, valid
  //! constants). Whether the tables form an iota-near semiring is a question
  //! for check_axioms; the adjudication workflow needs to load algebras that
  //! fail some axioms.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::size_t              n,
                  std::vector<Element>     plus,
                  std::vector<Element>     times,
                  std::vector<Element>     alpha,
                  Element                  zero,
                  Element                  one,
                  std::vector<std::string> names = {});

    std::size_t size() const noexcept {
      return n_;
    }

    Element plus(Element a, Element b) const noexcept {
      return plus_[a * n_ + b];
    }

    Element times(Element a, Element b) const noexcept {
      return times_[a * n_ + b];
    }

    Element alpha(Element a) const noexcept {
      return alpha_[a];
    }

    Element zero() const noexcept {
      return zero_;
    }

    Element one() const noexcept {
      return one_;
    }

    std::span<Element const> plus_table() const noexcept {
      return plus_;
    }
    std::span<Element const> times_table() const noexcept {
      return times_;
    }
    std::span<Element const> alpha_table() const noexcept {
      return alpha_;
    }

    //! Display label of an element; the decimal index when no names were
    //! declared.
    std::string const& name(Element a) const {
      return names_[a];
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    bool has_declared_names() const noexcept {
      return declared_names_;
    }

    //! Looks an element up by declared name or decimal index.
    std::optional<Element> find_element(std::string const& ref) const;

    //! Table-for-table equality (names are ignored).
    bool same_tables(FiniteAlgebra const& other) const noexcept;

   private:
    std::size_t              n_;
    std::vector<Element>     plus_;
    std::vector<Element>     times_;
    std::vector<Element>     alpha_;
    Element                  zero_;
    Element                  one_;
    std::vector<std::string> names_;
    bool                     declared_names_;
  };

  //! x <= y iff x + y = y.
  inline bool leq(FiniteAlgebra const& alg, Element a, Element b) noexcept {
    return alg.plus(a, b) == b;
  }

  //! Subset of a universe of at most kMaxUniverse elements.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t n, std::uint64_t bits = 0);

    static ElementSet full(std::size_t n);
    static ElementSet of(std::size_t n, std::initializer_list<Element> xs);

    std::size_t universe_size() const noexcept {
      return n_;
    }
    std::uint64_t bits() const noexcept {
      return bits_;
    }

    bool contains(Element a) const noexcept {
      return (bits_ >> a) & 1U;
    }
    void insert(Element a) noexcept {
      bits_ |= std::uint64_t{1} << a;
    }
    void erase(Element a) noexcept {
      bits_ &= ~(std::uint64_t{1} << a);
    }

    std::size_t count() const noexcept;
    bool        empty() const noexcept {
      return bits_ == 0;
    }
    bool is_full() const noexcept;

    bool subset_of(ElementSet const& other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }

    ElementSet operator&(ElementSet const& other) const noexcept {
      return ElementSet(n_, bits_ & other.bits_);
    }
    ElementSet operator|(ElementSet const& other) const noexcept {
      return ElementSet(n_, bits_ | other.bits_);
    }

    std::vector<Element> members() const;

    bool operator==(ElementSet const&) const = default;

    //! Canonical order: by cardinality, then by sorted member list.
    bool operator<(ElementSet const& other) const;

   private:
    std::size_t   n_    = 0;
    std::uint64_t bits_ = 0;
  };

  //! "{0,h}" using display names.
  std::string format_set(FiniteAlgebra const& alg, ElementSet const& s);

  //! Returns a description of the first operation the map fails to
  //! preserve, or nullopt if it is a homomorphism.
  std::optional<std::string> homomorphism_failure(FiniteAlgebra const& source,
                                                  FiniteAlgebra const& target,
                                                  std::span<Element const> map);

  //! A structure-preserving map whose preservation has been checked on all
  //! tuples at construction.
  class Homomorphism {
   public:
    //! Throws StructureError naming the failed operation if the map does not
    //! preserve +, ., alpha, 0 and 1.
    Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<Element> map);

    FiniteAlgebra const& source() const noexcept {
      return source_;
    }
    FiniteAlgebra const& target() const noexcept {
      return target_;
    }
    std::vector<Element> const& map() const noexcept {
      return map_;
    }
    bool bijective() const noexcept {
      return bijective_;
    }

    Element operator()(Element a) const {
      return map_.at(a);
    }

    //! Inverse of a bijective homomorphism; throws otherwise.
    Homomorphism inverse() const;

   private:
    FiniteAlgebra        source_;
    FiniteAlgebra        target_;
    std::vector<Element> map_;
    bool                 bijective_;
  };

  //! Componentwise product. Element (i, j) has index i * |b| + j and name
  //! "(name_i,name_j)".
  FiniteAlgebra product(FiniteAlgebra const& a,
                        FiniteAlgebra const& b,
                        std::size_t          max_size = kMaxUniverse);

  //! Projections out of product(a, b).
  Homomorphism projection_left(FiniteAlgebra const& a, FiniteAlgebra const& b);
  Homomorphism projection_right(FiniteAlgebra const& a, FiniteAlgebra const& b);

  //! The 1-element algebra.
  FiniteAlgebra trivial_algebra();

  //! Lexicographically least isomorphism a -> b, if any.
  std::optional<Homomorphism> find_isomorphism(FiniteAlgebra const& a,
                                               FiniteAlgebra const& b);

}  // namespace nearsemi
