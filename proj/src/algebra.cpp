#include "nearsemi/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace nearsemi {

  namespace {
    void check_table(std::vector<Element> const& table,
                     std::size_t                 expected,
                     std::size_t                 n,
                     char const*                 what) {
      if (table.size() != expected) {
        throw StructureError(std::string(what) + " has " + std::to_string(table.size())
                             + " entries, expected " + std::to_string(expected));
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= n) {
          throw StructureError(std::string(what) + " entry " + std::to_string(i) + " is "
                               + std::to_string(table[i]) + ", outside [0, "
                               + std::to_string(n) + ")");
        }
      }
    }
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(std::size_t              n,
                               std::vector<Element>     plus,
                               std::vector<Element>     times,
                               std::vector<Element>     alpha,
                               Element                  zero,
                               Element                  one,
                               std::vector<std::string> names)
      : n_(n),
        plus_(std::move(plus)),
        times_(std::move(times)),
        alpha_(std::move(alpha)),
        zero_(zero),
        one_(one),
        names_(std::move(names)),
        declared_names_(!names_.empty()) {
    if (n_ == 0) {
      throw StructureError("universe must be non-empty");
    }
    if (n_ > kMaxUniverse) {
      throw ResourceError("universe of size " + std::to_string(n_) + " exceeds the maximum "
                          + std::to_string(kMaxUniverse));
    }
    check_table(plus_, n_ * n_, n_, "plus");
    check_table(times_, n_ * n_, n_, "times");
    check_table(alpha_, n_, n_, "alpha");
    if (zero_ >= n_ || one_ >= n_) {
      throw StructureError("designated constant outside the universe");
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < n_; ++i) {
        names_.push_back(std::to_string(i));
      }
    } else if (names_.size() != n_) {
      throw StructureError("names has " + std::to_string(names_.size()) + " entries, expected "
                           + std::to_string(n_));
    }
  }

  std::optional<Element> FiniteAlgebra::find_element(std::string const& ref) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (names_[i] == ref) {
        return static_cast<Element>(i);
      }
    }
    if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      auto v = std::stoull(ref);
      if (v < n_) {
        return static_cast<Element>(v);
      }
    }
    return std::nullopt;
  }

  bool FiniteAlgebra::same_tables(FiniteAlgebra const& other) const noexcept {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_
           && plus_ == other.plus_ && times_ == other.times_ && alpha_ == other.alpha_;
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n > kMaxUniverse) {
      throw ResourceError("element set over more than 64 elements");
    }
  }

  ElementSet ElementSet::full(std::size_t n) {
    return ElementSet(n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  ElementSet ElementSet::of(std::size_t n, std::initializer_list<Element> xs) {
    ElementSet s(n);
    for (auto x : xs) {
      s.insert(x);
    }
    return s;
  }

  std::size_t ElementSet::count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  bool ElementSet::is_full() const noexcept {
    return *this == full(n_);
  }

  std::vector<Element> ElementSet::members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (contains(static_cast<Element>(i))) {
        out.push_back(static_cast<Element>(i));
      }
    }
    return out;
  }

  bool ElementSet::operator<(ElementSet const& other) const {
    if (count() != other.count()) {
      return count() < other.count();
    }
    auto lhs = members();
    auto rhs = other.members();
    return lhs < rhs;
  }

  std::string format_set(FiniteAlgebra const& alg, ElementSet const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto x : s.members()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += alg.name(x);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> homomorphism_failure(FiniteAlgebra const&     source,
                                                  FiniteAlgebra const&     target,
                                                  std::span<Element const> map) {
    std::size_t const n = source.size();
    if (map.size() != n) {
      return "map has " + std::to_string(map.size()) + " entries, source has "
             + std::to_string(n) + " elements";
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (map[i] >= target.size()) {
        return "image of " + source.name(static_cast<Element>(i)) + " is outside the target";
      }
    }
    if (map[source.zero()] != target.zero()) {
      return "0 is not preserved";
    }
    if (map[source.one()] != target.one()) {
      return "1 is not preserved";
    }
    for (Element x = 0; x < n; ++x) {
      if (map[source.alpha(x)] != target.alpha(map[x])) {
        return "alpha is not preserved at x=" + source.name(x);
      }
      for (Element y = 0; y < n; ++y) {
        if (map[source.plus(x, y)] != target.plus(map[x], map[y])) {
          return "+ is not preserved at x=" + source.name(x) + ", y=" + source.name(y);
        }
        if (map[source.times(x, y)] != target.times(map[x], map[y])) {
          return ". is not preserved at x=" + source.name(x) + ", y=" + source.name(y);
        }
      }
    }
    return std::nullopt;
  }

  Homomorphism::Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<Element> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)),
        bijective_(false) {
    if (auto failure = homomorphism_failure(source_, target_, map_)) {
      throw StructureError("not a homomorphism: " + *failure);
    }
    if (source_.size() == target_.size()) {
      std::vector<bool> hit(target_.size(), false);
      bijective_ = true;
      for (auto y : map_) {
        if (hit[y]) {
          bijective_ = false;
          break;
        }
        hit[y] = true;
      }
    }
  }

  Homomorphism Homomorphism::inverse() const {
    if (!bijective_) {
      throw StructureError("inverse of a non-bijective homomorphism");
    }
    std::vector<Element> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
      inv[map_[i]] = static_cast<Element>(i);
    }
    return Homomorphism(target_, source_, std::move(inv));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra product(FiniteAlgebra const& a, FiniteAlgebra const& b, std::size_t max_size) {
    std::size_t const na = a.size();
    std::size_t const nb = b.size();
    std::size_t const n  = na * nb;
    if (n > max_size || n > kMaxUniverse) {
      throw ResourceError("product of sizes " + std::to_string(na) + " and "
                          + std::to_string(nb) + " exceeds the maximum universe "
                          + std::to_string(std::min(max_size, kMaxUniverse)));
    }
    auto idx = [nb](Element i, Element j) {
      return static_cast<Element>(i * nb + j);
    };
    std::vector<Element>     plus(n * n), times(n * n), alpha(n);
    std::vector<std::string> names(n);
    for (Element i = 0; i < na; ++i) {
      for (Element j = 0; j < nb; ++j) {
        Element const x = idx(i, j);
        alpha[x]        = idx(a.alpha(i), b.alpha(j));
        names[x]        = "(" + a.name(i) + "," + b.name(j) + ")";
        for (Element k = 0; k < na; ++k) {
          for (Element l = 0; l < nb; ++l) {
            Element const y = idx(k, l);
            plus[x * n + y] = idx(a.plus(i, k), b.plus(j, l));
            times[x * n + y] = idx(a.times(i, k), b.times(j, l));
          }
        }
      }
    }
    return FiniteAlgebra(n,
                         std::move(plus),
                         std::move(times),
                         std::move(alpha),
                         idx(a.zero(), b.zero()),
                         idx(a.one(), b.one()),
                         std::move(names));
  }

  Homomorphism projection_left(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    auto                 p = product(a, b);
    std::vector<Element> map(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      map[x] = static_cast<Element>(x / b.size());
    }
    return Homomorphism(std::move(p), a, std::move(map));
  }

  Homomorphism projection_right(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    auto                 p = product(a, b);
    std::vector<Element> map(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      map[x] = static_cast<Element>(x % b.size());
    }
    return Homomorphism(std::move(p), b, std::move(map));
  }

  FiniteAlgebra trivial_algebra() {
    return FiniteAlgebra(1, {0}, {0}, {0}, 0, 0, {"0"});
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Isomorphism-invariant fingerprint of a single element.
    struct Profile {
      bool        alpha_fixed;
      std::size_t down;
      std::size_t up;
      std::size_t times_preimages;
      std::size_t squares_to_self;

      bool operator==(Profile const&) const = default;
    };

    std::vector<Profile> profiles(FiniteAlgebra const& alg) {
      std::size_t const    n = alg.size();
      std::vector<Profile> out(n, Profile{false, 0, 0, 0, 0});
      for (Element x = 0; x < n; ++x) {
        out[x].alpha_fixed     = alg.alpha(x) == x;
        out[x].squares_to_self = alg.times(x, x) == x;
        for (Element y = 0; y < n; ++y) {
          out[x].down += leq(alg, y, x);
          out[x].up += leq(alg, x, y);
          out[alg.times(x, y)].times_preimages++;
        }
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteAlgebra const& a, FiniteAlgebra const& b)
          : a_(a),
            b_(b),
            n_(a.size()),
            pa_(profiles(a)),
            pb_(profiles(b)),
            map_(n_, kUnset),
            used_(n_, false) {}

      std::optional<std::vector<Element>> run() {
        if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) {
          return std::nullopt;
        }
        if (!consistent()) {
          return std::nullopt;
        }
        if (search(0)) {
          return map_;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element kUnset = ~Element{0};

      bool assign(Element x, Element y) {
        if (map_[x] != kUnset) {
          return map_[x] == y;
        }
        if (used_[y] || !(pa_[x] == pb_[y])) {
          return false;
        }
        map_[x]  = y;
        used_[y] = true;
        return true;
      }

      // Every fully-determined instance of an operation must commute with
      // the partial map.
      bool consistent() const {
        for (Element x = 0; x < n_; ++x) {
          if (map_[x] == kUnset) {
            continue;
          }
          Element const ax = a_.alpha(x);
          if (map_[ax] != kUnset && map_[ax] != b_.alpha(map_[x])) {
            return false;
          }
          for (Element y = 0; y < n_; ++y) {
            if (map_[y] == kUnset) {
              continue;
            }
            Element const s = a_.plus(x, y);
            if (map_[s] != kUnset && map_[s] != b_.plus(map_[x], map_[y])) {
              return false;
            }
            Element const t = a_.times(x, y);
            if (map_[t] != kUnset && map_[t] != b_.times(map_[x], map_[y])) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(Element x) {
        while (x < n_ && map_[x] != kUnset) {
          ++x;
        }
        if (x == n_) {
          return true;
        }
        for (Element y = 0; y < n_; ++y) {
          if (used_[y] || !(pa_[x] == pb_[y])) {
            continue;
          }
          map_[x]  = y;
          used_[y] = true;
          if (consistent() && search(x + 1)) {
            return true;
          }
          map_[x]  = kUnset;
          used_[y] = false;
        }
        return false;
      }

      FiniteAlgebra const& a_;
      FiniteAlgebra const& b_;
      std::size_t          n_;
      std::vector<Profile> pa_;
      std::vector<Profile> pb_;
      std::vector<Element> map_;
      std::vector<bool>    used_;
    };
  }  // namespace

  std::optional<Homomorphism> find_isomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    auto key = [](Profile const& p) {
      return std::tuple(p.alpha_fixed, p.down, p.up, p.times_preimages, p.squares_to_self);
    };
    std::vector<std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t>> ka, kb;
    for (auto const& p : pa) {
      ka.push_back(key(p));
    }
    for (auto const& p : pb) {
      kb.push_back(key(p));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) {
      return std::nullopt;
    }
    auto map = IsoSearch(a, b).run();
    if (!map) {
      return std::nullopt;
    }
    return Homomorphism(a, b, std::move(*map));
  }

}  // namespace nearsemi
