#include "nearsemi/partition.hpp"

#include <algorithm>
#include <numeric>

namespace nearsemi {

  UnionFind::UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
  }

  Element UnionFind::find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool UnionFind::unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    // smaller root wins, which keeps roots stable under canonical labelling
    if (y < x) {
      std::swap(x, y);
    }
    parent_[y] = x;
    return true;
  }

  Partition::Partition(std::vector<Element> const& labels) : block_of_(labels.size()) {
    std::vector<Element> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Element l   = labels[i];
      auto    pos = std::find(seen.begin(), seen.end(), l);
      if (pos == seen.end()) {
        seen.push_back(l);
        block_of_[i] = static_cast<Element>(seen.size() - 1);
      } else {
        block_of_[i] = static_cast<Element>(pos - seen.begin());
      }
    }
    num_blocks_ = seen.size();
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<Element> labels(n);
    std::iota(labels.begin(), labels.end(), Element{0});
    return Partition(labels);
  }

  Partition Partition::full(std::size_t n) {
    return Partition(std::vector<Element>(n, 0));
  }

  Partition Partition::from(UnionFind& uf) {
    std::vector<Element> labels(uf.size());
    for (std::size_t i = 0; i < uf.size(); ++i) {
      labels[i] = uf.find(static_cast<Element>(i));
    }
    return Partition(labels);
  }

  std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out(num_blocks_);
    for (std::size_t i = 0; i < size(); ++i) {
      out[block_of_[i]].push_back(static_cast<Element>(i));
    }
    return out;
  }

  ElementSet Partition::block_containing(Element x) const {
    ElementSet s(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (block_of_[i] == block_of_[x]) {
        s.insert(static_cast<Element>(i));
      }
    }
    return s;
  }

  bool Partition::refines(Partition const& other) const noexcept {
    // representative of each block must agree with all of its members
    std::vector<Element> image(num_blocks_, ~Element{0});
    for (std::size_t i = 0; i < size(); ++i) {
      auto& slot = image[block_of_[i]];
      if (slot == ~Element{0}) {
        slot = other.block_of_[i];
      } else if (slot != other.block_of_[i]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& other) const {
    std::vector<Element> labels(size());
    for (std::size_t i = 0; i < size(); ++i) {
      labels[i] = static_cast<Element>(block_of_[i] * other.num_blocks_ + other.block_of_[i]);
    }
    return Partition(labels);
  }

  Partition Partition::join(Partition const& other) const {
    UnionFind uf(size());
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (related(static_cast<Element>(i), static_cast<Element>(j))
            || other.related(static_cast<Element>(i), static_cast<Element>(j))) {
          uf.unite(static_cast<Element>(i), static_cast<Element>(j));
        }
      }
    }
    return from(uf);
  }

  bool Partition::operator<(Partition const& other) const {
    if (num_blocks_ != other.num_blocks_) {
      return num_blocks_ > other.num_blocks_;
    }
    return blocks() < other.blocks();
  }

  std::string Partition::to_string(FiniteAlgebra const& alg) const {
    std::string out = "{";
    bool        first_block = true;
    for (auto const& block : blocks()) {
      if (!first_block) {
        out += ',';
      }
      first_block = false;
      out += '{';
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k != 0) {
          out += ',';
        }
        out += alg.name(block[k]);
      }
      out += '}';
    }
    return out + "}";
  }

}  // namespace nearsemi
