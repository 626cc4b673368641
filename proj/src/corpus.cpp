#include "nearsemi/corpus.hpp"

#include <algorithm>

namespace nearsemi::corpus {

  FiniteAlgebra b2() {
    return lukasiewicz_chain(2);
  }

  FiniteAlgebra lukasiewicz_chain(std::size_t n) {
    if (n < 2) {
      throw StructureError("a Lukasiewicz chain needs at least two elements");
    }
    Element const            top = static_cast<Element>(n - 1);
    std::vector<Element>     plus(n * n), times(n * n), alpha(n);
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) {
      alpha[x] = top - x;
      for (Element y = 0; y < n; ++y) {
        plus[x * n + y]  = std::max(x, y);
        times[x * n + y] = x + y > top ? x + y - top : 0;
      }
      if (x == 0 || x == top) {
        names[x] = x == 0 ? "0" : "1";
      } else if (n == 3) {
        names[x] = "h";
      } else {
        names[x] = std::to_string(x) + "/" + std::to_string(top);
      }
    }
    return FiniteAlgebra(n, std::move(plus), std::move(times), std::move(alpha), 0, top, names);
  }

  FiniteAlgebra g3() {
    return FiniteAlgebra(3,
                         {0, 1, 2, 1, 1, 2, 2, 2, 2},
                         {0, 0, 0, 0, 1, 1, 0, 1, 2},
                         {2, 1, 0},
                         0,
                         2,
                         {"0", "h", "1"});
  }

  std::vector<Entry> lukasiewicz_semirings() {
    auto const b = b2();
    auto const l = l3();
    return {{"B2", b},
            {"L3", l},
            {"L4", l4()},
            {"B2xL3", product(b, l)},
            {"L3xB2", product(l, b)},
            {"B2xB2", product(b, b)},
            {"L3xL3", product(l, l)}};
  }

}  // namespace nearsemi::corpus
