#include <doctest.h>

#include <sstream>

#include "flateta/cli.hpp"
#include "flateta/spec_io.hpp"

using namespace flateta;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eta --tetracosm") {
  Run r = cli({"eta", "--tetracosm"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta = -1\n") != std::string::npos);
}

TEST_CASE("eta json is deterministic") {
  Run a = cli({"eta", "--tetracosm", "--json", "--s", "0,1"});
  Run b = cli({"eta", "--tetracosm", "--json", "--s", "0,1"});
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["eta"] == -1);
  CHECK(j["bruteforce"] == -1);
  CHECK(j["closed_form"]["sigma"] == -1);
  CHECK(j["closed_form"]["f_B"] == 2);
  CHECK(j["eta_s"][0]["value"].get<double>() == doctest::Approx(-1.0));
  CHECK(j["eta_s"][1]["value"].get<double>() == doctest::Approx(-0.25));
}

TEST_CASE("unknown orientation") {
  Json both = Json::parse(cli({"eta", "--nonstandard-z8", "--json"}).out);
  CHECK(both["eta"].is_null());
  CHECK(both["eta_magnitude"] == 2);
  CHECK(both["sign_mode"] == "both");
  Json conv = Json::parse(cli({"eta", "--nonstandard-z8", "--json", "--sign", "convention"}).out);
  CHECK(std::abs(conv["eta"].get<int>()) == 2);
  CHECK(conv["bruteforce"] == conv["eta"]);
}

TEST_CASE("homology json") {
  Json j = Json::parse(cli({"homology", "--nonstandard-z8", "--json"}).out);
  CHECK(j["H1"]["rank"] == 1);
  CHECK(j["H1"]["torsion"] == Json::array({2, 2}));
  CHECK(j["spin_structures"] == 8);
}

TEST_CASE("tables") {
  Run t = cli({"table3", "--max", "15"});
  CHECK(t.code == 0);
  CHECK(t.out.find("Z_16") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"eta"}).code == 2);
  CHECK(cli({"eta", "--tetracosm", "--sign", "maybe"}).code == 2);
  CHECK(cli({"eta", "--spec", "/nonexistent.json"}).code != 0);
  Run usage = cli({"enumerate"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("block form") != std::string::npos);
  CHECK(cli({"enumerate", "--dim", "12"}).code == 1);
  CHECK(cli({"donnelly-compare", "--triscosm"}).code == 0);
}

}
