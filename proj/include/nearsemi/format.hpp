#pragma once

// The algebra file format.
//
//   # comment
//   kind = luk-rs                  (inrs | luk-nrs | luk-rs | mv; default inrs)
//   size = 3
//   names = ["0", "h", "1"]        (optional)
//   zero = 0
//   one = 2                        (not for mv)
//   plus = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
//   times = [[...], ...]
//   alpha = [2, 1, 0]
//
// MV files use `oplus` and `neg` in place of plus, times, alpha and one.
// Tokens may be separated by any whitespace, so matrices can span lines.
// Map files hold a single `map = [..]` list of element indices or names.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearsemi/algebra.hpp"
#include "nearsemi/mv.hpp"

namespace nearsemi {

  class ParseError : public std::runtime_error {
   public:
    //! what() reads "[source: ]line L, column C: message".
    ParseError(std::size_t        line,
               std::size_t        column,
               std::string const& message,
               std::string const& source = {});

    std::string const& message() const noexcept {
      return message_;
    }

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
  };

  struct AlgebraDocument {
    std::string                  kind;  // "inrs", "luk-nrs", "luk-rs" or "mv"
    std::optional<FiniteAlgebra> algebra;
    std::optional<MVAlgebra>     mv;

    bool is_mv() const noexcept {
      return mv.has_value();
    }
  };

  AlgebraDocument parse(std::string_view text);

  //! Canonical layout: fixed key order, one matrix row per line.
  std::string serialize(AlgebraDocument const& doc);
  std::string serialize(FiniteAlgebra const& alg, std::string const& kind);
  std::string serialize(MVAlgebra const& mv);

  //! Reads a file; throws std::runtime_error naming the path if it cannot be
  //! opened, ParseError (prefixed with the path) on bad contents.
  AlgebraDocument load_document(std::string const& path);

  //! `map = [..]` resolved against the codomain's names and indices.
  std::vector<Element> parse_map(std::string_view text, FiniteAlgebra const& codomain);
  std::vector<Element> load_map(std::string const& path, FiniteAlgebra const& codomain);

}  // namespace nearsemi
