#include "nearsemi/format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nearsemi/axioms.hpp"

namespace nearsemi {

  namespace {
    std::string located(std::size_t line, std::size_t column, std::string const& message,
                        std::string const& source) {
      return (source.empty() ? "" : source + ": ") + "line " + std::to_string(line)
             + ", column " + std::to_string(column) + ": " + message;
    }
  }  // namespace

  ParseError::ParseError(std::size_t        line,
                         std::size_t        column,
                         std::string const& message,
                         std::string const& source)
      : std::runtime_error(located(line, column, message, source)),
        line_(line),
        column_(column),
        message_(message) {}

  namespace {
    struct Token {
      enum class Type { word, integer, string, equals, open, close, comma, end };
      Type        type;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    class Lexer {
     public:
      explicit Lexer(std::string_view text) : text_(text) {}

      Token next() {
        skip_space();
        Token t{Token::Type::end, {}, line_, column_};
        if (pos_ >= text_.size()) {
          return t;
        }
        char const c = text_[pos_];
        auto       single = [&](Token::Type type) {
          t.type = type;
          t.text = std::string(1, c);
          advance();
          return t;
        };
        switch (c) {
          case '=':
            return single(Token::Type::equals);
          case '[':
            return single(Token::Type::open);
          case ']':
            return single(Token::Type::close);
          case ',':
            return single(Token::Type::comma);
          case '"': {
            advance();
            t.type = Token::Type::string;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
              t.text += text_[pos_];
              advance();
            }
            if (pos_ >= text_.size() || text_[pos_] != '"') {
              throw ParseError(t.line, t.column, "unterminated string");
            }
            advance();
            return t;
          }
          default:
            break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          t.type = Token::Type::integer;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            t.text += text_[pos_];
            advance();
          }
          return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          t.type = Token::Type::word;
          while (pos_ < text_.size()
                 && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'
                     || text_[pos_] == '-')) {
            t.text += text_[pos_];
            advance();
          }
          return t;
        }
        throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
      }

     private:
      void advance() {
        if (text_[pos_] == '\n') {
          ++line_;
          column_ = 1;
        } else {
          ++column_;
        }
        ++pos_;
      }

      void skip_space() {
        while (pos_ < text_.size()) {
          char const c = text_[pos_];
          if (c == '#') {
            while (pos_ < text_.size() && text_[pos_] != '\n') {
              advance();
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
          } else {
            break;
          }
        }
      }

      std::string_view text_;
      std::size_t      pos_    = 0;
      std::size_t      line_   = 1;
      std::size_t      column_ = 1;
    };

    struct Value {
      enum class Type { integer, word, string, list };
      Type               type;
      std::string        text;
      std::vector<Value> items;
      std::size_t        line;
      std::size_t        column;
    };

    class Parser {
     public:
      explicit Parser(std::string_view text) : lexer_(text) {
        look_ = lexer_.next();
      }

      //! key -> value in file order; end position for missing-key errors.
      std::vector<std::pair<std::string, Value>> entries() {
        std::vector<std::pair<std::string, Value>> out;
        std::set<std::string>                      seen;
        while (look_.type != Token::Type::end) {
          Token key = take();
          if (key.type != Token::Type::word) {
            throw ParseError(key.line, key.column, "expected a key, found '" + key.text + "'");
          }
          if (!seen.insert(key.text).second) {
            throw ParseError(key.line, key.column, "duplicate key '" + key.text + "'");
          }
          Token eq = take();
          if (eq.type != Token::Type::equals) {
            throw ParseError(eq.line, eq.column, "expected '=' after '" + key.text + "'");
          }
          out.emplace_back(key.text, value());
        }
        end_line_   = look_.line;
        end_column_ = look_.column;
        return out;
      }

      std::size_t end_line() const noexcept {
        return end_line_;
      }
      std::size_t end_column() const noexcept {
        return end_column_;
      }

     private:
      Token take() {
        Token t = look_;
        look_   = lexer_.next();
        return t;
      }

      Value value() {
        Token t = take();
        switch (t.type) {
          case Token::Type::integer:
            return Value{Value::Type::integer, t.text, {}, t.line, t.column};
          case Token::Type::word:
            return Value{Value::Type::word, t.text, {}, t.line, t.column};
          case Token::Type::string:
            return Value{Value::Type::string, t.text, {}, t.line, t.column};
          case Token::Type::open: {
            Value list{Value::Type::list, {}, {}, t.line, t.column};
            if (look_.type == Token::Type::close) {
              take();
              return list;
            }
            while (true) {
              list.items.push_back(value());
              Token sep = take();
              if (sep.type == Token::Type::close) {
                return list;
              }
              if (sep.type != Token::Type::comma) {
                throw ParseError(sep.line, sep.column,
                                 sep.type == Token::Type::end ? "unterminated list"
                                                              : "expected ',' or ']'");
              }
            }
          }
          case Token::Type::end:
            throw ParseError(t.line, t.column, "unexpected end of input");
          default:
            throw ParseError(t.line, t.column, "unexpected '" + t.text + "'");
        }
      }

      Lexer       lexer_;
      Token       look_;
      std::size_t end_line_   = 1;
      std::size_t end_column_ = 1;
    };

    [[noreturn]] void error_at(Value const& v, std::string const& message) {
      throw ParseError(v.line, v.column, message);
    }

    std::size_t as_count(Value const& v, char const* key) {
      if (v.type != Value::Type::integer) {
        error_at(v, std::string(key) + " must be an integer");
      }
      if (v.text.size() > 6) {
        error_at(v, std::string(key) + " is too large");
      }
      return std::stoul(v.text);
    }

    Element as_element(Value const& v, std::size_t n, std::string const& what) {
      if (v.type != Value::Type::integer) {
        error_at(v, what + " must be an integer");
      }
      if (v.text.size() > 6 || std::stoul(v.text) >= n) {
        error_at(v, what + " = " + v.text + " is outside [0, " + std::to_string(n) + ")");
      }
      return static_cast<Element>(std::stoul(v.text));
    }

    std::vector<Element> as_vector(Value const& v, std::size_t n, std::string const& key) {
      if (v.type != Value::Type::list) {
        error_at(v, key + " must be a list");
      }
      if (v.items.size() != n) {
        error_at(v, key + " has " + std::to_string(v.items.size()) + " entries, expected "
                        + std::to_string(n));
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(as_element(v.items[i], n, key + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    std::vector<Element> as_matrix(Value const& v, std::size_t n, std::string const& key) {
      if (v.type != Value::Type::list) {
        error_at(v, key + " must be a list of rows");
      }
      if (v.items.size() != n) {
        error_at(v, key + " has " + std::to_string(v.items.size()) + " rows, expected "
                        + std::to_string(n));
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& row = v.items[i];
        if (row.type != Value::Type::list) {
          error_at(row, key + " row " + std::to_string(i) + " must be a list");
        }
        if (row.items.size() != n) {
          error_at(row, key + " row " + std::to_string(i) + " has "
                            + std::to_string(row.items.size()) + " entries, expected "
                            + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          out.push_back(as_element(row.items[j], n,
                                   key + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
      }
      return out;
    }
  }  // namespace

  AlgebraDocument parse(std::string_view text) {
    Parser parser(text);
    auto   entries = parser.entries();
    std::map<std::string, Value const*> by_key;
    for (auto const& [k, v] : entries) {
      by_key[k] = &v;
    }
    auto require = [&](std::string const& key) -> Value const& {
      auto it = by_key.find(key);
      if (it == by_key.end()) {
        throw ParseError(parser.end_line(), parser.end_column(), "missing key '" + key + "'");
      }
      return *it->second;
    };

    std::string kind = "inrs";
    if (auto it = by_key.find("kind"); it != by_key.end()) {
      auto const& v = *it->second;
      if (v.type != Value::Type::word
          || (v.text != "mv" && !parse_algebra_class(v.text).has_value())) {
        error_at(v, "kind must be one of inrs, luk-nrs, luk-rs, mv");
      }
      kind = v.text;
    }
    bool const            mv      = kind == "mv";
    std::set<std::string> allowed = mv ? std::set<std::string>{"kind", "size", "names", "zero", "oplus", "neg"}
                                       : std::set<std::string>{"kind", "size", "names", "zero", "one", "plus", "times", "alpha"};
    for (auto const& [k, v] : entries) {
      if (!allowed.contains(k)) {
        error_at(v, "key '" + k + "' is not allowed for kind " + kind);
      }
    }

    auto const&       size_value = require("size");
    std::size_t const n          = as_count(size_value, "size");
    if (n == 0) {
      error_at(size_value, "size must be positive");
    }
    if (n > kMaxUniverse) {
      error_at(size_value, "size " + std::to_string(n) + " exceeds the maximum "
                               + std::to_string(kMaxUniverse));
    }

    std::vector<std::string> names;
    if (auto it = by_key.find("names"); it != by_key.end()) {
      auto const& v = *it->second;
      if (v.type != Value::Type::list || v.items.size() != n) {
        error_at(v, "names must be a list of " + std::to_string(n) + " strings");
      }
      std::set<std::string> distinct;
      for (auto const& item : v.items) {
        if (item.type != Value::Type::string || item.text.empty()) {
          error_at(item, "names entries must be non-empty strings");
        }
        if (!distinct.insert(item.text).second) {
          error_at(item, "duplicate name \"" + item.text + "\"");
        }
        names.push_back(item.text);
      }
    }

    Element const zero = as_element(require("zero"), n, "zero");
    AlgebraDocument doc{kind, std::nullopt, std::nullopt};
    if (mv) {
      doc.mv.emplace(n, as_matrix(require("oplus"), n, "oplus"), as_vector(require("neg"), n, "neg"),
                     zero, std::move(names));
    } else {
      Element const one   = as_element(require("one"), n, "one");
      auto          plus  = as_matrix(require("plus"), n, "plus");
      auto          times = as_matrix(require("times"), n, "times");
      auto          alpha = as_vector(require("alpha"), n, "alpha");
      doc.algebra.emplace(n, std::move(plus), std::move(times), std::move(alpha), zero, one,
                          std::move(names));
    }
    return doc;
  }

  namespace {
    void write_names(std::ostringstream& os, std::vector<std::string> const& names, bool declared) {
      if (!declared) {
        return;
      }
      os << "names = [";
      for (std::size_t i = 0; i < names.size(); ++i) {
        os << (i ? ", " : "") << '"' << names[i] << '"';
      }
      os << "]\n";
    }

    void write_vector(std::ostringstream& os, char const* key, std::span<Element const> v) {
      os << key << " = [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
      }
      os << "]\n";
    }

    void write_matrix(std::ostringstream& os, char const* key, std::span<Element const> t,
                      std::size_t n) {
      os << key << " = [\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << "  [";
        for (std::size_t j = 0; j < n; ++j) {
          os << (j ? ", " : "") << t[i * n + j];
        }
        os << "]" << (i + 1 < n ? "," : "") << "\n";
      }
      os << "]\n";
    }
  }  // namespace

  std::string serialize(FiniteAlgebra const& alg, std::string const& kind) {
    std::ostringstream os;
    os << "kind = " << kind << "\n";
    os << "size = " << alg.size() << "\n";
    write_names(os, alg.names(), alg.has_declared_names());
    os << "zero = " << alg.zero() << "\n";
    os << "one = " << alg.one() << "\n";
    write_matrix(os, "plus", alg.plus_table(), alg.size());
    write_matrix(os, "times", alg.times_table(), alg.size());
    write_vector(os, "alpha", alg.alpha_table());
    return os.str();
  }

  std::string serialize(MVAlgebra const& mv) {
    std::ostringstream os;
    os << "kind = mv\n";
    os << "size = " << mv.size() << "\n";
    write_names(os, mv.names(), mv.has_declared_names());
    os << "zero = " << mv.zero() << "\n";
    write_matrix(os, "oplus", mv.oplus_table(), mv.size());
    write_vector(os, "neg", mv.neg_table());
    return os.str();
  }

  std::string serialize(AlgebraDocument const& doc) {
    return doc.is_mv() ? serialize(*doc.mv) : serialize(*doc.algebra, doc.kind);
  }

  namespace {
    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw std::runtime_error("cannot open file '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }  // namespace

  AlgebraDocument load_document(std::string const& path) {
    auto const text = read_file(path);
    try {
      return parse(text);
    } catch (ParseError const& err) {
      throw ParseError(err.line(), err.column(), err.message(), path);
    } catch (StructureError const& err) {
      throw ParseError(1, 1, err.what(), path);
    }
  }

  std::vector<Element> parse_map(std::string_view text, FiniteAlgebra const& codomain) {
    Parser parser(text);
    auto   entries = parser.entries();
    if (entries.size() != 1 || entries[0].first != "map") {
      throw ParseError(1, 1, "a map file holds exactly one key, 'map'");
    }
    auto const& v = entries[0].second;
    if (v.type != Value::Type::list) {
      error_at(v, "map must be a list");
    }
    std::vector<Element> out;
    for (auto const& item : v.items) {
      std::optional<Element> e;
      if (item.type == Value::Type::string || item.type == Value::Type::integer) {
        e = codomain.find_element(item.text);
      }
      if (!e) {
        error_at(item, "unknown element '" + item.text + "'");
      }
      out.push_back(*e);
    }
    return out;
  }

  std::vector<Element> load_map(std::string const& path, FiniteAlgebra const& codomain) {
    auto const text = read_file(path);
    try {
      return parse_map(text, codomain);
    } catch (ParseError const& err) {
      throw ParseError(err.line(), err.column(), err.message(), path);
    }
  }

}  // namespace nearsemi
