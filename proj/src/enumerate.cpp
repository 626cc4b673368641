#include "nearsemi/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "nearsemi/parallel.hpp"

namespace nearsemi {

  std::string CanonicalForm::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  namespace {
    // new index -> old index for each relabelling fixing 0 -> 0, 1 -> n-1.
    template <typename Visit>
    void for_each_relabelling(FiniteAlgebra const& alg, Visit&& visit) {
      std::size_t const    n = alg.size();
      std::vector<Element> free;
      for (Element x = 0; x < n; ++x) {
        if (x != alg.zero() && x != alg.one()) {
          free.push_back(x);
        }
      }
      std::vector<Element> old_of(n);
      do {
        old_of[0] = alg.zero();
        std::copy(free.begin(), free.end(), old_of.begin() + 1);
        if (alg.one() != alg.zero()) {
          old_of[n - 1] = alg.one();
        }
        visit(old_of);
      } while (std::next_permutation(free.begin(), free.end()));
    }

    // Writes the encoding under old_of into out, stopping early once it
    // exceeds best. Returns true if out < best.
    bool encode_if_smaller(FiniteAlgebra const&            alg,
                           std::vector<Element> const&     old_of,
                           std::vector<Element>&           new_of,
                           std::vector<std::uint8_t>&      out,
                           std::vector<std::uint8_t> const& best) {
      std::size_t const n = alg.size();
      for (Element i = 0; i < n; ++i) {
        new_of[old_of[i]] = i;
      }
      out.clear();
      bool        decided = best.empty();
      bool        smaller = best.empty();
      auto        push    = [&](std::uint8_t b) {
        std::size_t const k = out.size();
        out.push_back(b);
        if (!decided) {
          if (b < best[k]) {
            decided = smaller = true;
          } else if (b > best[k]) {
            decided = true;
            smaller = false;
          }
        }
        return !decided || smaller;
      };
      if (!push(static_cast<std::uint8_t>(n))) return false;
      for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
          if (!push(static_cast<std::uint8_t>(new_of[alg.plus(old_of[i], old_of[j])]))) return false;
      for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
          if (!push(static_cast<std::uint8_t>(new_of[alg.times(old_of[i], old_of[j])]))) return false;
      for (Element i = 0; i < n; ++i)
        if (!push(static_cast<std::uint8_t>(new_of[alg.alpha(old_of[i])]))) return false;
      return smaller;
    }

    std::pair<CanonicalForm, std::vector<Element>> canonical_with_labels(FiniteAlgebra const& alg) {
      std::vector<std::uint8_t> best, scratch;
      std::vector<Element>      best_old, new_of(alg.size());
      for_each_relabelling(alg, [&](std::vector<Element> const& old_of) {
        if (encode_if_smaller(alg, old_of, new_of, scratch, best)) {
          best.swap(scratch);
          best_old = old_of;
        }
      });
      return {CanonicalForm{std::move(best)}, std::move(best_old)};
    }
  }  // namespace

  CanonicalForm canonical_form(FiniteAlgebra const& alg) {
    return canonical_with_labels(alg).first;
  }

  FiniteAlgebra canonical_algebra(FiniteAlgebra const& alg) {
    auto const [form, old_of] = canonical_with_labels(alg);
    std::size_t const    n    = alg.size();
    std::vector<Element> plus(n * n), times(n * n), alpha(n);
    std::size_t          k = 1;
    for (auto* table : {&plus, &times}) {
      for (auto& cell : *table) {
        cell = form.bytes[k++];
      }
    }
    for (auto& cell : alpha) {
      cell = form.bytes[k++];
    }
    std::vector<std::string> names;
    if (alg.has_declared_names()) {
      for (auto old : old_of) {
        names.push_back(alg.name(old));
      }
    }
    Element const one = alg.one() == alg.zero() ? 0 : static_cast<Element>(n - 1);
    return FiniteAlgebra(n, std::move(plus), std::move(times), std::move(alpha), 0, one,
                         std::move(names));
  }

  EnumerationIncomplete::EnumerationIncomplete(std::vector<FiniteAlgebra> partial,
                                               std::size_t                token,
                                               std::size_t                total)
      : ResourceError("enumeration budget exhausted after task " + std::to_string(token)
                      + " of " + std::to_string(total) + "; resume token "
                      + std::to_string(token)),
        partial_(std::move(partial)),
        token_(token),
        total_(total) {}

  ////////////////////////////////////////////////////////////////////////
  // Lattices
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Table = std::vector<Element>;

    // Join table of the poset given by strict down-sets of middle elements,
    // or nullopt if some pair lacks a least upper bound.
    std::optional<Table> join_table(std::size_t n, std::vector<std::uint32_t> const& below) {
      Element const top = static_cast<Element>(n - 1);
      auto          le  = [&](Element x, Element y) {
        return x == y || x == 0 || y == top || (y != 0 && x != top && ((below[y] >> x) & 1U));
      };
      Table plus(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
          std::optional<Element> least;
          for (Element z = 0; z < n && !least; ++z) {
            if (!le(x, z) || !le(y, z)) {
              continue;
            }
            bool below_all = true;
            for (Element w = 0; w < n && below_all; ++w) {
              if (le(x, w) && le(y, w) && !le(z, w)) {
                below_all = false;
              }
            }
            if (below_all) {
              least = z;
            }
          }
          if (!least) {
            return std::nullopt;
          }
          plus[x * n + y] = plus[y * n + x] = *least;
        }
      }
      return plus;
    }

    Table relabel_table(Table const& t, std::size_t n, std::vector<Element> const& old_of,
                        std::vector<Element> const& new_of) {
      Table out(n * n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          out[i * n + j] = new_of[t[old_of[i] * n + old_of[j]]];
        }
      }
      return out;
    }

    // All middle permutations as (old_of, new_of).
    std::vector<std::pair<std::vector<Element>, std::vector<Element>>> middle_perms(std::size_t n) {
      std::vector<std::pair<std::vector<Element>, std::vector<Element>>> out;
      std::vector<Element> old_of(n);
      std::iota(old_of.begin(), old_of.end(), 0);
      do {
        std::vector<Element> new_of(n);
        for (Element i = 0; i < n; ++i) {
          new_of[old_of[i]] = i;
        }
        out.emplace_back(old_of, new_of);
      } while (n >= 2 && std::next_permutation(old_of.begin() + 1, old_of.end() - 1));
      return out;
    }
  }  // namespace

  std::vector<std::vector<Element>> enumerate_lattices(std::size_t n) {
    if (n == 0) {
      return {};
    }
    if (n == 1) {
      return {{0}};
    }
    std::size_t const m     = n - 2;
    auto const        perms = middle_perms(n);
    std::set<Table>   seen;

    // Middle element j (1..m) gets a down-closed strict down-set among 1..j-1.
    std::vector<std::uint32_t> below(n, 0);
    auto rec = [&](auto&& self, Element j) -> void {
      if (j > m) {
        auto plus = join_table(n, below);
        if (!plus) {
          return;
        }
        Table best = *plus;
        for (auto const& [old_of, new_of] : perms) {
          best = std::min(best, relabel_table(*plus, n, old_of, new_of));
        }
        seen.insert(std::move(best));
        return;
      }
      std::uint32_t const choices = std::uint32_t{1} << (j - 1);
      for (std::uint32_t s = 0; s < choices; ++s) {
        std::uint32_t const set = s << 1;  // bits 1..j-1
        bool                closed = true;
        for (Element i = 1; i < j && closed; ++i) {
          if (((set >> i) & 1U) && (below[i] & ~set)) {
            closed = false;
          }
        }
        if (!closed) {
          continue;
        }
        below[j] = set;
        self(self, j + 1);
      }
      below[j] = 0;
    };
    rec(rec, 1);
    return {seen.begin(), seen.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct BudgetExhausted {};

    struct Task {
      std::size_t lattice;
      Table       alpha;
    };

    std::vector<Table> antitone_involutions(std::size_t n, Table const& plus) {
      Element const top = static_cast<Element>(n - 1);
      auto          le  = [&](Element x, Element y) { return plus[x * n + y] == y; };
      std::vector<Table> out;
      Table              alpha(n, n);
      alpha[0]   = top;
      alpha[top] = 0;
      auto rec   = [&](auto&& self) -> void {
        auto it = std::find(alpha.begin(), alpha.end(), static_cast<Element>(n));
        if (it == alpha.end()) {
          for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
              if (le(x, y) && !le(alpha[y], alpha[x])) {
                return;
              }
            }
          }
          out.push_back(alpha);
          return;
        }
        Element const x = static_cast<Element>(it - alpha.begin());
        for (Element y = x; y < n; ++y) {
          if (alpha[y] != n) {
            continue;
          }
          alpha[x] = y;
          alpha[y] = x;
          self(self);
          alpha[x] = alpha[y] = static_cast<Element>(n);
        }
      };
      if (n == 1) {
        return {{0}};
      }
      rec(rec);
      return out;
    }

    // Join-endomorphisms f with f(0) = 0, f(top) = z, as length-n columns.
    std::vector<Table> column_candidates(std::size_t n, Table const& plus, Element z) {
      Element const top = static_cast<Element>(n - 1);
      auto          le  = [&](Element x, Element y) { return plus[x * n + y] == y; };
      std::vector<Element> values;
      for (Element v = 0; v < n; ++v) {
        if (le(v, z)) {
          values.push_back(v);
        }
      }
      std::vector<Table> out;
      Table              f(n, 0);
      f[top] = z;
      auto rec = [&](auto&& self, Element x) -> void {
        if (x == top) {
          out.push_back(f);
          return;
        }
        for (auto v : values) {
          f[x]    = v;
          bool ok = true;
          for (Element a = 0; a <= x && ok; ++a) {
            for (Element b = 0; b <= x && ok; ++b) {
              Element const j = plus[a * n + b];
              if ((j <= x || j == top) && f[j] != plus[f[a] * n + f[b]]) {
                ok = false;
              }
            }
          }
          if (ok) {
            self(self, x + 1);
          }
        }
      };
      rec(rec, 1);
      return out;
    }

    class TaskSearch {
     public:
      TaskSearch(std::size_t n, AlgebraClass cls, Table const& plus, Table const& alpha,
                 std::atomic<std::uint64_t>& nodes, std::uint64_t max_nodes,
                 std::atomic<std::uint64_t>& results, std::uint64_t max_results)
          : n_(n), cls_(cls), plus_(plus), alpha_(alpha), nodes_(nodes), max_nodes_(max_nodes),
            results_(results), max_results_(max_results),
            times_(n * n, 0), assigned_(n, false) {
        Element const top = static_cast<Element>(n - 1);
        for (Element x = 0; x < n; ++x) {
          times_[x * n + top] = x;  // x.1 = x
        }
        assigned_[0] = assigned_[top] = true;
        for (Element z = 1; z < top; ++z) {
          candidates_.push_back(column_candidates(n, plus, z));
        }
      }

      std::map<CanonicalForm, FiniteAlgebra> run() {
        rec(1);
        return std::move(found_);
      }

     private:
      Element t(Element x, Element y) const {
        return times_[x * n_ + y];
      }

      bool consistent() const {
        if (cls_ == AlgebraClass::inrs) {
          return true;
        }
        for (Element x = 0; x < n_; ++x) {
          for (Element y = 0; y < n_; ++y) {
            Element const ay = alpha_[y], ax = alpha_[x];
            if (!assigned_[ay] || !assigned_[ax]) {
              continue;
            }
            if (t(alpha_[t(x, ay)], ay) != t(alpha_[t(y, ax)], ax)) {
              return false;
            }
          }
        }
        if (cls_ != AlgebraClass::luk_rs) {
          return true;
        }
        for (Element y = 0; y < n_; ++y) {
          for (Element z = 0; z < n_; ++z) {
            if (!assigned_[y] || !assigned_[z] || !assigned_[t(y, z)]) {
              continue;
            }
            for (Element x = 0; x < n_; ++x) {
              if (t(t(x, y), z) != t(x, t(y, z))) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void rec(Element z) {
        if (z + 1 >= n_) {
          FiniteAlgebra alg(n_, plus_, times_, alpha_, 0, static_cast<Element>(n_ - 1));
          auto          form = canonical_form(alg);
          if (!found_.contains(form)) {
            if (results_.fetch_add(1, std::memory_order_relaxed) >= max_results_) {
              throw BudgetExhausted{};
            }
            found_.emplace(std::move(form), canonical_algebra(alg));
          }
          return;
        }
        for (auto const& column : candidates_[z - 1]) {
          if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_nodes_) {
            throw BudgetExhausted{};
          }
          for (Element x = 0; x < n_; ++x) {
            times_[x * n_ + z] = column[x];
          }
          assigned_[z] = true;
          if (consistent()) {
            rec(z + 1);
          }
          assigned_[z] = false;
        }
        for (Element x = 0; x < n_; ++x) {
          times_[x * n_ + z] = 0;
        }
      }

      std::size_t                 n_;
      AlgebraClass                cls_;
      Table const&                plus_;
      Table const&                alpha_;
      std::atomic<std::uint64_t>& nodes_;
      std::uint64_t               max_nodes_;
      std::atomic<std::uint64_t>& results_;
      std::uint64_t               max_results_;
      Table                       times_;
      std::vector<bool>           assigned_;
      std::vector<std::vector<Table>>        candidates_;
      std::map<CanonicalForm, FiniteAlgebra> found_;
    };
  }  // namespace

  std::vector<FiniteAlgebra> enumerate(EnumerationTask const& task) {
    std::size_t const n = task.size;
    if (n == 0) {
      throw StructureError("enumeration size must be positive");
    }
    if (n > task.max_size) {
      throw ResourceError("enumeration size " + std::to_string(n) + " exceeds the cap "
                          + std::to_string(task.max_size));
    }
    if (n == 1) {
      return {trivial_algebra()};
    }

    auto const lattices = enumerate_lattices(n);
    auto const perms    = middle_perms(n);
    std::vector<Task> tasks;
    for (std::size_t li = 0; li < lattices.size(); ++li) {
      auto const& plus = lattices[li];
      std::vector<std::pair<std::vector<Element>, std::vector<Element>>> autos;
      for (auto const& p : perms) {
        if (relabel_table(plus, n, p.first, p.second) == plus) {
          autos.push_back(p);
        }
      }
      for (auto const& alpha : antitone_involutions(n, plus)) {
        bool minimal = true;
        for (auto const& [old_of, new_of] : autos) {
          Table conj(n);
          for (Element i = 0; i < n; ++i) {
            conj[i] = new_of[alpha[old_of[i]]];
          }
          if (conj < alpha) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          tasks.push_back(Task{li, alpha});
        }
      }
    }

    std::size_t const start = std::min(task.resume_from, tasks.size());
    std::size_t const count = tasks.size() - start;
    std::vector<std::vector<FiniteAlgebra>> results(count);
    std::vector<char>                       complete(count, 0);
    std::atomic<std::uint64_t>              nodes{0};
    std::atomic<std::uint64_t>              found{0};
    parallel_for(count, task.threads, [&](std::size_t k) {
      auto const& tk = tasks[start + k];
      try {
        TaskSearch search(n, task.cls, lattices[tk.lattice], tk.alpha, nodes, task.max_nodes,
                          found, task.max_results);
        for (auto& [form, alg] : search.run()) {
          results[k].push_back(std::move(alg));
        }
        complete[k] = 1;
      } catch (BudgetExhausted const&) {
      }
    });

    auto by_form = [](std::vector<FiniteAlgebra>& algs) {
      std::vector<std::pair<CanonicalForm, std::size_t>> keyed;
      for (std::size_t i = 0; i < algs.size(); ++i) {
        keyed.emplace_back(canonical_form(algs[i]), i);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<FiniteAlgebra> out;
      for (auto const& [form, i] : keyed) {
        out.push_back(algs[i]);
      }
      return out;
    };

    std::size_t done = 0;
    while (done < count && complete[done]) {
      ++done;
    }
    std::vector<FiniteAlgebra> out;
    for (std::size_t k = 0; k < done; ++k) {
      out.insert(out.end(), results[k].begin(), results[k].end());
    }
    out = by_form(out);
    if (done < count) {
      throw EnumerationIncomplete(std::move(out), start + done, tasks.size());
    }
    return out;
  }

  std::size_t count(std::size_t n, AlgebraClass cls, std::size_t threads) {
    static std::mutex                                           mutex;
    static std::map<std::pair<std::size_t, AlgebraClass>, std::size_t> cache;
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find({n, cls}); it != cache.end()) {
        return it->second;
      }
    }
    EnumerationTask task{n, cls};
    task.threads          = threads;
    std::size_t const c   = enumerate(task).size();
    std::lock_guard   lock(mutex);
    cache[{n, cls}] = c;
    return c;
  }

}  // namespace nearsemi
