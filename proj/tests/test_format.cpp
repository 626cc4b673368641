#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nearsemi/corpus.hpp"
#include "nearsemi/format.hpp"

using namespace nearsemi;

namespace {
  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string without_comments(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    std::string        out;
    while (std::getline(in, line)) {
      if (!line.starts_with("#")) {
        out += line + "\n";
      }
    }
    return out;
  }

  ParseError parse_error(std::string const& text) {
    try {
      parse(text);
    } catch (ParseError const& e) {
      return e;
    }
    FAIL("no parse error");
    return ParseError(0, 0, "");
  }
}  // namespace

TEST_CASE("bundled fixtures") {
  auto const l3 = load_document(NEARSEMI_DATA_DIR "/l3.alg");
  REQUIRE(l3.algebra);
  CHECK(l3.kind == "luk-rs");
  CHECK(l3.algebra->names() == std::vector<std::string>{"0", "h", "1"});
  CHECK(l3.algebra->same_tables(corpus::l3()));
  auto const g3 = load_document(NEARSEMI_DATA_DIR "/g3.alg");
  CHECK(g3.algebra->same_tables(corpus::g3()));
  auto const mv = load_document(NEARSEMI_DATA_DIR "/mv3.alg");
  CHECK(mv.is_mv());
}

TEST_CASE("serialization round-trips byte-exactly on canonical files") {
  for (char const* name : {"b2", "l3", "l4", "g3", "b2xl3", "l3xb2", "b2xb2", "l3xl3", "mv3", "mv4",
                           "mv2xmv3"}) {
    INFO(name);
    auto const text      = slurp(std::string(NEARSEMI_DATA_DIR "/") + name + ".alg");
    auto const canonical = without_comments(text);
    CHECK(serialize(parse(text)) == canonical);
    CHECK(serialize(parse(canonical)) == canonical);
  }
}

TEST_CASE("serialize after parse is idempotent on free-form input") {
  std::string const messy =
      "# comment\nsize=2 zero =0 one= 1 plus=[[0,1],[1,1]]   times = [[0, 0],\n[0, 1]] alpha=[1,0]\n";
  auto const once = serialize(parse(messy));
  CHECK(serialize(parse(once)) == once);
  CHECK(once.starts_with("kind = inrs\n"));
}

TEST_CASE("trivial algebra") {
  auto const doc = parse("size = 1\nzero = 0\none = 0\nplus = [[0]]\ntimes = [[0]]\nalpha = [0]\n");
  CHECK(doc.kind == "inrs");
  CHECK(doc.algebra->size() == 1);
}

TEST_CASE("dimension errors point at the offending row") {
  auto const e = parse_error(
      "size = 3\nzero = 0\none = 2\nplus = [\n  [0, 1, 2],\n  [1, 1, 2]\n]\n");
  CHECK(e.message() == "plus has 2 rows, expected 3");
  auto const row = parse_error(
      "size = 3\nzero = 0\none = 2\nplus = [[0, 1, 2],\n  [1, 1],\n  [2, 2, 2]]\n");
  CHECK(row.line() == 5);
  CHECK(row.column() == 3);
  CHECK(row.message() == "plus row 1 has 2 entries, expected 3");
  auto const two_by_three = parse_error("size = 2\nzero = 0\none = 1\nplus = [[0, 1, 1], [1, 1, 1]]\n");
  CHECK(two_by_three.line() == 4);
  CHECK(two_by_three.column() == 9);
}

TEST_CASE("other diagnostics") {
  auto const range = parse_error("size = 2\nzero = 0\none = 1\nalpha = [1, 2]\n"
                                 "plus = [[0,1],[1,1]]\ntimes = [[0,0],[0,1]]\n");
  CHECK(range.message() == "alpha[1] = 2 is outside [0, 2)");
  CHECK(range.line() == 4);
  auto const missing = parse_error("size = 2\nzero = 0\none = 1\nplus = [[0,1],[1,1]]\n");
  CHECK(missing.message() == "missing key 'times'");
  CHECK(parse_error("size = 1\nsize = 1\n").message() == "duplicate key 'size'");
  CHECK(parse_error("size = 1\ncolour = 3\n").message() == "key 'colour' is not allowed for kind inrs");
  CHECK(parse_error("kind = luk-rs\nsize = 1\nzero = 0\nneg = [0]\n").message()
        == "key 'neg' is not allowed for kind luk-rs");
  CHECK(parse_error("kind = ring\n").message().starts_with("kind must be one of"));
  CHECK(parse_error("size = [1\n").message() == "unterminated list");
  CHECK(parse_error("size = 1 $").message() == "unexpected character '$'");
  CHECK(parse_error("size = 1\nnames = [\"a\"\n").line() == 3);
  CHECK(parse_error("size = 2\nnames = [\"a\", \"a\"]\n").message() == "duplicate name \"a\"");
  CHECK(parse_error("size = 99\n").message() == "size 99 exceeds the maximum 64");
}

TEST_CASE("load errors name the file") {
  CHECK_THROWS_WITH(load_document("/nonexistent/x.alg"), doctest::Contains("/nonexistent/x.alg"));
}

TEST_CASE("map files") {
  auto const l3 = corpus::l3();
  CHECK(parse_map("map = [\"0\", \"h\", 2]\n", l3) == std::vector<Element>{0, 1, 2});
  CHECK_THROWS_WITH_AS(parse_map("map = [\"q\"]", l3), doctest::Contains("unknown element 'q'"),
                       ParseError);
  CHECK_THROWS_AS(parse_map("maps = [0]", l3), ParseError);
}
