#include <doctest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "qdeform/cli/commands.hpp"

using qdeform::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Outcome& o) { return nlohmann::json::parse(o.out); }

std::string strip_elapsed(const std::string& s) {
  return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9.eE+-]+"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST_CASE("identities: catalogue runs and unknown catalogue is a usage error") {
  auto o = call({"identities", "--catalog", "q-core", "--order", "1"});
  CHECK(o.code == 0);
  auto j = parsed(o);
  CHECK(j["tool"] == "qdeform");
  CHECK(j["command"] == "identities");
  CHECK(j["checks"].size() >= 5);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  CHECK(j["parameters"]["q"] == "symbolic");

  CHECK(call({"identities", "--catalog", "nope"}).code == 2);
  CHECK(call({"identities", "--catalog", "q-core", "--params", "q=0.5"}).code == 2);
  CHECK(call({"identities", "--catalog", "q-core", "--params", "zeta=2"}).code == 2);
}

TEST_CASE("identities: numeric parameters are echoed") {
  auto o = call({"identities", "--catalog", "q-core", "--order", "2", "--params", "q=2/3", "p=5"});
  REQUIRE(o.code == 0);
  auto j = parsed(o);
  CHECK(j["parameters"]["q"] == "2/3");
  CHECK(j["parameters"]["p"] == "5");
  CHECK(j["parameters"]["r"] == "symbolic");
}

TEST_CASE("rmatrix actions") {
  CHECK(call({"rmatrix", "--family", "trig", "--action", "ybe", "--mode", "sampled", "--trials", "20", "--seed",
              "42"})
            .code == 0);
  for (const char* f : {"trig", "rat", "yang"}) {
    CHECK(call({"rmatrix", "--family", f, "--action", "rzz"}).code == 0);
    CHECK(call({"rmatrix", "--family", f, "--action", "twist"}).code == 0);
  }
  auto b = call({"rmatrix", "--family", "yang", "--action", "build"});
  REQUIRE(b.code == 0);
  auto j = parsed(b);
  REQUIRE(j["data"]["matrix"].size() == 4);
  std::size_t n = 0;
  for (const auto& row : j["data"]["matrix"]) n += row.size();
  CHECK(n == 16);
  CHECK(j["data"]["matrix"][0][0] != "0");

  CHECK(call({"rmatrix", "--action", "cocycle", "--mode", "sampled", "--trials", "3"}).code == 0);
  CHECK(call({"rmatrix", "--family", "bogus"}).code == 2);
  CHECK(call({"rmatrix", "--trials", "0"}).code == 2);
}

TEST_CASE("classical actions") {
  CHECK(call({"classical", "--action", "cybe", "--kind", "ab"}).code == 0);
  CHECK(call({"classical", "--action", "cybe", "--kind", "bd"}).code == 0);
  auto all = call({"classical"});
  CHECK(all.code == 0);
  CHECK(parsed(all)["checks"].size() == 5);
  auto g = call({"classical", "--action", "gauge"});
  CHECK(g.code == 0);
  CHECK(parsed(g)["checks"][0]["detail"].get<std::string>().find("verdict") != std::string::npos);
}

TEST_CASE("chain actions") {
  CHECK(call({"chain", "--family", "rat", "--sites", "4", "--q", "1", "--eta", "1", "--xi", "1", "--u2", "2",
              "--action", "isospectral"})
            .code == 0);
  auto h = call({"chain", "--family", "trig", "--sites", "3", "--q", "3", "--a", "1", "--b", "1", "--z2", "2",
                 "--action", "hamiltonian"});
  REQUIRE(h.code == 0);
  auto j = parsed(h);
  CHECK(j["checks"][0]["id"] == "hamiltonian");
  CHECK(j["checks"][0]["detail"].get<std::string>().find("c = ") != std::string::npos);
  CHECK(j["data"]["delta"] == "5/6");

  // printed couplings are a documented mismatch
  CHECK(call({"chain", "--family", "trig", "--sites", "3", "--q", "3", "--a", "1", "--b", "1", "--z2", "2",
              "--action", "hamiltonian", "--form", "printed"})
            .code == 1);

  CHECK(call({"chain", "--family", "trig", "--sites", "3", "--q", "3", "--a", "1", "--b", "1", "--z2", "2",
              "--action", "commute", "--z1", "5", "--z2p", "7"})
            .code == 0);
  CHECK(call({"chain", "--family", "yang", "--sites", "3", "--eta", "1", "--xi", "2", "--u2", "3", "--action",
              "commute"})
            .code == 0);
  auto jr = call({"chain", "--family", "yang", "--sites", "3", "--eta", "1", "--xi", "2", "--u2", "3", "--action",
                  "jordan"});
  CHECK(jr.code == 0);
  CHECK(parsed(jr)["data"].contains("minpoly"));
  CHECK(call({"chain", "--family", "trig", "--sites", "4", "--q", "2", "--a", "1", "--b", "3", "--z2", "5",
              "--action", "spectrum"})
            .code == 0);
}

TEST_CASE("chain usage and singular errors") {
  auto s = call({"chain", "--family", "trig", "--sites", "3", "--q", "1", "--a", "1", "--b", "1", "--z2", "2"});
  CHECK(s.code == 2);
  CHECK(s.err.find("singular") != std::string::npos);
  CHECK(call({"chain", "--family", "rat", "--sites", "3", "--q", "0", "--eta", "1", "--xi", "1", "--u2", "2"}).code ==
        2);
  CHECK(call({"chain", "--family", "trig", "--sites", "3", "--q", "0.5", "--a", "1", "--b", "1", "--z2", "2"}).code ==
        2);
  CHECK(call({"chain", "--family", "trig", "--sites", "3", "--q", "3"}).code == 2);
  CHECK(call({"chain", "--family", "trig", "--sites", "11", "--q", "3", "--a", "1", "--b", "1", "--z2", "2"}).code ==
        2);
  CHECK(call({"chain", "--family", "trig", "--sites", "3", "--q", "3", "--a", "1", "--b", "1", "--z2", "2",
              "--action", "commute", "--z1", "5"})
            .code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json output is deterministic apart from timings") {
  const std::vector<std::string> args{"rmatrix", "--family", "rat", "--action", "ybe", "--mode", "sampled",
                                      "--trials", "5",       "--seed", "7"};
  auto a = call(args);
  auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
  auto j = parsed(a);
  CHECK(j["seed"] == 7);
}

TEST_CASE("text format") {
  auto o = call({"classical", "--action", "gauge", "--format", "text"});
  CHECK(o.code == 0);
  CHECK(o.out.find("1 checks, 0 failed") != std::string::npos);
}
