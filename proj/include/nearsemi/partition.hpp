#pragma once

#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"

namespace nearsemi {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);

    Element find(Element x);

    //! Returns true if x and y were in different classes.
    bool unite(Element x, Element y);

    std::size_t size() const noexcept {
      return parent_.size();
    }

   private:
    std::vector<Element> parent_;
  };

  //! An equivalence relation on {0, ..., n-1}, stored as block labels.
  //! Blocks are numbered in order of their least element, so two equal
  //! partitions have identical label arrays.
  class Partition {
   public:
    Partition() = default;

    //! Any labelling; equal labels mean same block.
    explicit Partition(std::vector<Element> const& labels);

    static Partition discrete(std::size_t n);
    static Partition full(std::size_t n);
    static Partition from(UnionFind& uf);

    std::size_t size() const noexcept {
      return block_of_.size();
    }
    std::size_t num_blocks() const noexcept {
      return num_blocks_;
    }
    Element block_of(Element x) const noexcept {
      return block_of_[x];
    }
    bool related(Element a, Element b) const noexcept {
      return block_of_[a] == block_of_[b];
    }

    //! Blocks sorted by least element, each sorted.
    std::vector<std::vector<Element>> blocks() const;

    //! The block containing x.
    ElementSet block_containing(Element x) const;

    //! Every block of this partition lies inside a block of other.
    bool refines(Partition const& other) const noexcept;

    Partition meet(Partition const& other) const;

    //! Transitive closure of the union.
    Partition join(Partition const& other) const;

    bool is_discrete() const noexcept {
      return num_blocks_ == size();
    }
    bool is_full() const noexcept {
      return num_blocks_ == 1;
    }

    bool operator==(Partition const&) const = default;

    //! Canonical order: more blocks first, then block lists lexicographic.
    bool operator<(Partition const& other) const;

    std::string to_string(FiniteAlgebra const& alg) const;

   private:
    std::vector<Element> block_of_;
    std::size_t          num_blocks_ = 0;
  };

}  // namespace nearsemi
