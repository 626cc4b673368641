#include "nearsemi/dot.hpp"

#include <sstream>

namespace nearsemi {

  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
      std::vector<std::vector<bool>> const& leq) {
    std::size_t const                                m = leq.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !leq[i][j]) {
          continue;
        }
        bool covered = true;
        for (std::size_t k = 0; k < m && covered; ++k) {
          if (k != i && k != j && leq[i][k] && leq[k][j]) {
            covered = false;
          }
        }
        if (covered) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  std::string hasse_dot(std::string const&                    graph_name,
                        std::vector<std::string> const&       labels,
                        std::vector<std::vector<bool>> const& leq) {
    std::ostringstream os;
    os << "digraph " << quoted(graph_name) << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      os << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
    }
    for (auto const& [lo, hi] : covering_pairs(leq)) {
      os << "  n" << lo << " -> n" << hi << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string congruence_lattice_dot(FiniteAlgebra const& alg, std::vector<Partition> const& con) {
    std::vector<std::string>       labels;
    std::vector<std::vector<bool>> leq(con.size(), std::vector<bool>(con.size()));
    for (std::size_t i = 0; i < con.size(); ++i) {
      labels.push_back(con[i].to_string(alg));
      for (std::size_t j = 0; j < con.size(); ++j) {
        leq[i][j] = con[i].refines(con[j]);
      }
    }
    return hasse_dot("Con", labels, leq);
  }

  std::string ideal_lattice_dot(FiniteAlgebra const& alg, std::vector<ElementSet> const& ideals) {
    std::vector<std::string>       labels;
    std::vector<std::vector<bool>> leq(ideals.size(), std::vector<bool>(ideals.size()));
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      labels.push_back(format_set(alg, ideals[i]));
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        leq[i][j] = ideals[i].subset_of(ideals[j]);
      }
    }
    return hasse_dot("Id", labels, leq);
  }

  std::string center_lattice_dot(FiniteAlgebra const& alg, std::vector<Element> const& center) {
    std::vector<std::string>       labels;
    std::vector<std::vector<bool>> leq(center.size(), std::vector<bool>(center.size()));
    for (std::size_t i = 0; i < center.size(); ++i) {
      labels.push_back(alg.name(center[i]));
      for (std::size_t j = 0; j < center.size(); ++j) {
        leq[i][j] = nearsemi::leq(alg, center[i], center[j]);
      }
    }
    return hasse_dot("Ce", labels, leq);
  }

}  // namespace nearsemi
