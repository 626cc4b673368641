#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"

namespace {
  struct Run {
    int         status;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          status = nearsemi::cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(NEARSEMI_DATA_DIR "/") + name;
  }
}  // namespace

TEST_CASE("claims on L3 reports both disagreements and exits 1") {
  auto const r = run({"claims", data("l3.alg")});
  CHECK(r.status == 1);
  CHECK(r.out.find("DISAGREE semiring-ideal-prop {0,h}: conditions (i)-(iii) hold, is_ideal false "
                   "witness: (I1) a=1, b=h\n")
        != std::string::npos);
  CHECK(r.out.find("DISAGREE principal-ideal-corollary h: computed {a.c} = {0,h} vs oracle I(a) = "
                   "A = {0,h,1} witness: 1 in I(a) but not of the form a.c\n")
        != std::string::npos);
  CHECK(r.out.ends_with("verdict: DISAGREE\n"));
}

TEST_CASE("claims on B2 agrees") {
  CHECK(run({"claims", data("b2.alg")}).status == 0);
}

TEST_CASE("ideals on L3 lists two ideals") {
  auto const r = run({"ideals", data("l3.alg")});
  CHECK(r.status == 0);
  CHECK(r.out.find("ideals: 2\n  I0 = {0}") != std::string::npos);
  CHECK(r.out.find("  I0 < I1\n") != std::string::npos);
}

TEST_CASE("check") {
  CHECK(run({"check", data("b2.alg"), "--class", "luk-rs"}).status == 0);
  auto const g3 = run({"check", data("g3.alg"), "--class", "luk-nrs"});
  CHECK(g3.status == 1);
  CHECK(g3.out.find("FAIL (vii)") != std::string::npos);
  CHECK(run({"check", data("g3.alg")}).status == 0);
  CHECK(run({"check", data("mv3.alg")}).status == 0);
}

TEST_CASE("reports on every corpus file pass") {
  for (char const* f : {"b2.alg", "l3.alg", "l4.alg", "b2xl3.alg", "l3xb2.alg", "b2xb2.alg"}) {
    for (char const* cmd : {"congruences", "ideals", "center", "roundtrip"}) {
      INFO(cmd << " " << f);
      CHECK(run({cmd, data(f)}).status == 0);
    }
  }
}

TEST_CASE("non-Lukasiewicz inputs are described, not failed") {
  for (char const* cmd : {"congruences", "ideals", "center"}) {
    auto const r = run({cmd, data("g3.alg")});
    CHECK(r.status == 0);
  }
  CHECK(run({"congruences", data("g3.alg")}).out.find("INFO malcev-p(x,y,y)=x") != std::string::npos);
}

TEST_CASE("decompose and principal-ideal accept names and indices") {
  auto const byname = run({"decompose", data("b2xl3.alg"), "--element", "(1,0)"});
  auto const byidx  = run({"decompose", data("b2xl3.alg"), "--element", "3"});
  CHECK(byname.status == 0);
  CHECK(byidx.status == 0);
  CHECK(byname.out.substr(byname.out.find("\n==")) == byidx.out.substr(byidx.out.find("\n==")));
  auto const nc = run({"decompose", data("l3.alg"), "--element", "h"});
  CHECK(nc.status == 1);
  CHECK(nc.out.find("FAIL central") != std::string::npos);
  auto const pi = run({"principal-ideal", data("l3.alg"), "--element", "h"});
  CHECK(pi.status == 0);
  CHECK(pi.out.find("via theta(a,0): {0,h,1}") != std::string::npos);
}

TEST_CASE("mv conversions") {
  auto const to = run({"to-mv", data("l3.alg")});
  CHECK(to.status == 0);
  CHECK(to.out.starts_with("kind = mv\n"));
  auto const from = run({"from-mv", data("mv4.alg")});
  CHECK(from.status == 0);
  CHECK(from.out.starts_with("kind = luk-rs\n"));
  CHECK(run({"to-mv", data("g3.alg")}).status == 1);
  CHECK(run({"from-mv", data("l3.alg")}).status == 2);
  CHECK(run({"roundtrip", data("mv2xmv3.alg")}).status == 0);
}

TEST_CASE("cb instances") {
  CHECK(run({"cb", data("b2.alg"), data("b2.alg"), "--gamma", data("maps/b2_identity.map"), "--beta",
             data("maps/b2_identity.map")})
            .status
        == 0);
  CHECK(run({"cb", data("b2xb2.alg"), data("b2xb2.alg"), "--gamma", data("maps/b2xb2_swap.map"),
             "--beta", data("maps/b2xb2_identity.map")})
            .status
        == 0);
  auto const composed = run({"cb", data("b2xl3.alg"), data("l3xb2.alg"), "--gamma",
                             data("maps/b2xl3_to_l3xb2.map"), "--beta",
                             data("maps/l3xb2_to_b2xl3.map"), "--a", "(1,1)", "--b", "5"});
  CHECK(composed.status == 0);
  CHECK(composed.out.find("PASS cb-isomorphism") != std::string::npos);
  auto const search = run({"cb", data("b2.alg"), data("l3.alg"), "--search"});
  CHECK(search.status == 0);
  CHECK(search.out.find("cb-no-qualifying-pair") != std::string::npos);
  CHECK(run({"cb", data("b2.alg"), data("b2.alg")}).status == 2);
  auto const bad = run({"cb", data("b2xb2.alg"), data("b2xb2.alg"), "--gamma",
                        data("maps/b2xb2_swap.map"), "--beta", data("maps/b2xb2_identity.map"),
                        "--a", "(1,0)"});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL cb-instance") != std::string::npos);
}

TEST_CASE("enumerate writes files named by hash") {
  auto const dir = std::filesystem::temp_directory_path() / "nearsemi-cli-test";
  std::filesystem::remove_all(dir);
  auto const r = run({"enumerate", "--size", "4", "--class", "luk-nrs", "--out", dir.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("count: 3\n") != std::string::npos);
  std::size_t files = 0;
  for (auto const& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().extension() == ".alg");
    CHECK(entry.path().stem().string().size() == 16);
    CHECK(run({"check", entry.path().string(), "--class", "luk-nrs"}).status == 0);
    ++files;
  }
  CHECK(files == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("dot") {
  auto const r = run({"dot", data("l3.alg"), "--lattice", "id"});
  CHECK(r.status == 0);
  CHECK(r.out.find("n0 -> n1") != std::string::npos);
  CHECK(run({"dot", data("l3.alg"), "--lattice", "xx"}).status == 2);
}

TEST_CASE("usage and input errors exit 2 with distinct diagnostics") {
  auto const missing = run({"check", "/nonexistent.alg"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot open file") != std::string::npos);
  auto const unknown = run({"decompose", data("l3.alg"), "--element", "q"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown element 'q'") != std::string::npos);
  auto const cap = run({"enumerate", "--size", "9"});
  CHECK(cap.status == 2);
  CHECK(cap.err.find("limit exceeded") != std::string::npos);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"check", data("l3.alg"), "--class", "ring"}).status == 2);
}

TEST_CASE("output is deterministic across thread counts") {
  auto const one  = run({"--threads", "1", "congruences", data("b2xl3.alg")});
  auto const many = run({"--threads", "4", "congruences", data("b2xl3.alg")});
  CHECK(one.status == many.status);
  CHECK(one.out.substr(one.out.find('\n')) == many.out.substr(many.out.find('\n')));
}
