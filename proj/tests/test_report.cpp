#include <doctest.h>

#include "subhardy/report.hpp"

using namespace subhardy;

TEST_CASE("report schema is stable") {
  Report r;
  r.command = "gram";
  r.symbol = "poly:0,1";
  r.parameters["N"] = 16;
  r.caveats.push_back("sampled decision");
  const nlohmann::json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"caveats", "command", "parameters", "symbol", "verdicts",
                                         "version"});
}

TEST_CASE("floats serialize with 17 significant digits") {
  nlohmann::json j;
  j["x"] = 0.1;
  j["y"] = 1.0;
  j["z"] = 1e-300;
  const std::string s = dump_json_17(j);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("1e-300") != std::string::npos);
}

TEST_CASE("dump is deterministic and sorted") {
  nlohmann::json j;
  j["b"] = 1;
  j["a"] = nlohmann::json::array({true, nullptr, "text\n"});
  const std::string s = dump_json_17(j);
  CHECK(s == dump_json_17(j));
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(s.find("\\n") != std::string::npos);
}

TEST_CASE("verdict serialization carries the witness when present") {
  Verdict v;
  v.psd = false;
  v.min_eigenvalue = -0.5;
  v.witness = {cx(1, 0), cx(0, -1)};
  v.scale = 2.0;
  v.tolerance_used = 2e-10;
  const nlohmann::json j = verdict_to_json("sb", v);
  CHECK(j["witness"].size() == 2);
  CHECK(j["witness"][1]["im"] == -1.0);
  CHECK(j["psd"] == false);
}
