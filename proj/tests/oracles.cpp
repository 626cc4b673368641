#include "oracles.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace oracle {

  namespace {
    bool compatible(FiniteAlgebra const& alg, std::vector<Element> const& label) {
      std::size_t const n = alg.size();
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (label[a] != label[b]) {
            continue;
          }
          if (label[alg.alpha(a)] != label[alg.alpha(b)]) {
            return false;
          }
          for (Element c = 0; c < n; ++c) {
            if (label[alg.plus(a, c)] != label[alg.plus(b, c)]
                || label[alg.plus(c, a)] != label[alg.plus(c, b)]
                || label[alg.times(a, c)] != label[alg.times(b, c)]
                || label[alg.times(c, a)] != label[alg.times(c, b)]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<std::vector<Element>> congruences(FiniteAlgebra const& alg) {
    std::size_t const                 n = alg.size();
    std::vector<std::vector<Element>> out;
    std::vector<Element>              rgs(n, 0);
    // Restricted growth strings enumerate every set partition once.
    std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element max_label) {
      if (i == n) {
        if (compatible(alg, rgs)) {
          out.push_back(rgs);
        }
        return;
      }
      for (Element l = 0; l <= max_label + 1; ++l) {
        rgs[i] = l;
        rec(i + 1, std::max(max_label, l));
      }
    };
    rgs[0] = 0;
    if (n == 1) {
      out.push_back(rgs);
    } else {
      rec(1, 0);
    }
    return out;
  }

  bool is_ideal(FiniteAlgebra const& alg, std::uint64_t s) {
    auto in = [&](Element x) { return (s >> x) & 1U; };
    std::size_t const n = alg.size();
    if (!in(alg.zero())) {
      return false;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (in(alg.times(a, alg.alpha(b))) && in(b) && !in(a)) {
          return false;
        }
        if (in(alg.times(alg.alpha(a), b)) && in(alg.times(alg.alpha(b), a))) {
          for (Element c = 0; c < n; ++c) {
            if (!in(alg.times(alg.alpha(alg.times(a, c)), alg.times(b, c)))
                || !in(alg.times(alg.alpha(alg.times(c, a)), alg.times(c, b)))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<std::uint64_t> ideals(FiniteAlgebra const& alg) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << alg.size()); ++s) {
      if (is_ideal(alg, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<FiniteAlgebra> brute_force_models(std::size_t n, nearsemi::AlgebraClass cls) {
    if (n == 1) {
      return {nearsemi::trivial_algebra()};
    }
    Element const top = static_cast<Element>(n - 1);
    // Free cells: the (n-2) x (n-2) middle block of + and ., and alpha on
    // the middle elements. Everything touching 0 or 1 is forced.
    std::vector<std::pair<Element, Element>> cells;
    for (Element a = 1; a < top; ++a) {
      for (Element b = 1; b < top; ++b) {
        cells.emplace_back(a, b);
      }
    }
    auto base = [&](bool plus) {
      std::vector<Element> t(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (plus) {
            t[a * n + b] = a == 0 ? b : b == 0 ? a : (a == top || b == top) ? top : 0;
          } else {
            t[a * n + b] = (a == 0 || b == 0) ? 0 : a == top ? b : b == top ? a : 0;
          }
        }
      }
      return t;
    };
    auto assignments = [&](std::size_t count, auto&& visit) {
      std::vector<Element> digits(count, 0);
      while (true) {
        visit(digits);
        std::size_t i = 0;
        while (i < count && ++digits[i] == n) {
          digits[i++] = 0;
        }
        if (i == count) {
          return;
        }
      }
    };

    std::vector<std::vector<Element>> plus_tables;
    assignments(cells.size(), [&](std::vector<Element> const& d) {
      auto t = base(true);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        t[cells[k].first * n + cells[k].second] = d[k];
      }
      for (Element a = 0; a < n; ++a) {
        if (t[a * n + a] != a) {
          return;
        }
        for (Element b = 0; b < n; ++b) {
          if (t[a * n + b] != t[b * n + a]) {
            return;
          }
          for (Element c = 0; c < n; ++c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
              return;
            }
          }
        }
      }
      plus_tables.push_back(t);
    });
    std::vector<std::vector<Element>> alphas;
    assignments(n - 2, [&](std::vector<Element> const& d) {
      std::vector<Element> al(n);
      al[0]   = top;
      al[top] = 0;
      for (Element a = 1; a < top; ++a) {
        al[a] = d[a - 1];
      }
      for (Element a = 0; a < n; ++a) {
        if (al[al[a]] != a) {
          return;
        }
      }
      alphas.push_back(al);
    });

    std::vector<FiniteAlgebra> found;
    for (auto const& plus : plus_tables) {
      for (auto const& al : alphas) {
        assignments(cells.size(), [&](std::vector<Element> const& d) {
          auto t = base(false);
          for (std::size_t k = 0; k < cells.size(); ++k) {
            t[cells[k].first * n + cells[k].second] = d[k];
          }
          FiniteAlgebra alg(n, plus, t, al, 0, top);
          if (!nearsemi::satisfies(alg, cls)) {
            return;
          }
          for (auto const& other : found) {
            if (nearsemi::find_isomorphism(alg, other)) {
              return;
            }
          }
          found.push_back(std::move(alg));
        });
      }
    }
    return found;
  }

  std::vector<CountRow> frozen_counts(std::string const& path) {
    std::ifstream         in(path);
    std::vector<CountRow> rows;
    std::string           line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.find('=') != std::string::npos) {
        continue;
      }
      std::istringstream ss(line);
      CountRow           row;
      if (ss >> row.size >> row.cls >> row.count) {
        rows.push_back(row);
      }
    }
    return rows;
  }

}  // namespace oracle
