#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "chordweights/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  std::vector<json> lines() const {
    std::vector<json> v;
    std::istringstream s(out);
    for (std::string line; std::getline(s, line);)
      if (!line.empty()) v.push_back(json::parse(line));
    return v;
  }
};

Outcome run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = chordweights::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli invariants") {
  const auto r = run({"invariants", "1 2 1 2"});
  REQUIRE(r.code == chordweights::cli::kOk);
  const auto lines = r.lines();
  REQUIRE(lines.size() == 1);
  const auto &j = lines[0];
  CHECK(j["det"] == 1);
  CHECK(j["rank"] == 2);
  CHECK(j["components"] == 1);
  CHECK(j["conway"] == 1);
  CHECK(j["homfly"] == "a^2");
  CHECK(j["kauffman"] == "a^2*b - a^2");
  CHECK(j["homfly_deframed"] == "-a^2*b^2 + a^2");

  SUBCASE("marked input has null unmarked weights") {
    const auto m = run({"invariants", "1# 1"}).lines();
    REQUIRE(m.size() == 1);
    CHECK(m[0]["rank"] == 1);
    CHECK(m[0]["homfly"].is_null());
    CHECK(m[0]["components"] == 1);
  }
  SUBCASE("stdin, blank lines skipped") {
    const auto s = run({"invariants"}, "1 1\n\n1 2 1 2\n");
    CHECK(s.code == 0);
    CHECK(s.lines().size() == 2);
  }
  SUBCASE("debug fields") {
    const auto d = run({"invariants", "--debug", "1 1"}).lines();
    REQUIRE(d.size() == 1);
    CHECK(d[0].contains("kauffman_marked"));
    CHECK(d[0]["t_deframed"] == "0");
    CHECK(d[0]["t_deframed_uncorrected"] == "1");
  }
  SUBCASE("human tables") {
    const auto h = run({"--human", "invariants", "1 1"});
    CHECK(h.code == 0);
    CHECK(h.out.find("homfly") != std::string::npos);
    CHECK(h.out.find('{') == std::string::npos);
  }
}

TEST_CASE("cli enumerate, surgery and caravan") {
  const auto e = run({"enumerate", "-n", "2"}).lines();
  REQUIRE(e.size() == 2);
  CHECK(e[0]["diagram"] == "1 1 2 2");
  CHECK(run({"enumerate", "-n", "3", "--marked"}).lines().size() == 28);
  CHECK(run({"enumerate", "-n", "9"}).code == chordweights::cli::kUsageError);

  const auto s = run({"surgery", "--trace", "1# 1"}).lines();
  REQUIRE(s.size() == 1);
  CHECK(s[0]["components"] == 1);
  CHECK(s[0]["cycles"][0].size() == 2);

  const auto c = run({"caravan", "1# 2# 1# 2#"}).lines();
  REQUIRE(c.size() == 1);
  CHECK(c[0]["n1"] == 1);
  CHECK(c[0]["n2"] == 1);
  CHECK(c[0]["n3"] == 0);
}

TEST_CASE("cli check and quotient-dim") {
  const auto ok = run({"check", "--kind", "4t", "--weights", "conway", "-n", "3"});
  CHECK(ok.code == chordweights::cli::kOk);
  const auto lines = ok.lines();
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["failures"] == 0);

  const auto bad = run({"check", "--kind", "1t", "--weights", "rank", "-n", "1"});
  CHECK(bad.code == chordweights::cli::kCheckFailed);
  CHECK(bad.lines()[0]["failures"] == 1);

  CHECK(run({"check", "--kind", "ext2t", "--weights", "kauffman", "-n", "3"}).code == 0);

  const auto q = run({"quotient-dim", "-n", "4", "--space", "a"}).lines();
  REQUIRE(q.size() == 1);
  CHECK(q[0]["dimension"] == 6);
  const auto qb = run({"quotient-dim", "-n", "3", "--space", "bm", "--classes"}).lines();
  REQUIRE(qb.size() == 1);
  CHECK(qb[0]["dimension"] == 5);
  CHECK(qb[0]["caravan_failures"] == 0);
  CHECK(qb[0]["class_of"].size() == 28);
}

TEST_CASE("cli errors and determinism") {
  const auto bad = run({"invariants", "1 2 1"});
  CHECK(bad.code == chordweights::cli::kUsageError);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(run({}).code == chordweights::cli::kUsageError);
  CHECK(run({"check", "--kind", "9t", "--weights", "conway", "-n", "2"}).code ==
        chordweights::cli::kUsageError);
  CHECK(run({"check", "--kind", "4t", "--weights", "jones", "-n", "2"}).code ==
        chordweights::cli::kUsageError);
  CHECK(run({"quotient-dim", "-n", "6", "--space", "a"}).code == chordweights::cli::kUsageError);

  const std::vector<std::string> args{"quotient-dim", "-n", "4", "--space", "b", "--classes"};
  CHECK(run(args).out == run(args).out);
}
