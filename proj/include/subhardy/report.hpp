#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subhardy/classify.hpp"
#include "subhardy/hermit.hpp"
#include "subhardy/version.hpp"

namespace subhardy {

// The single machine-readable output shape. Keys are emitted sorted and every
// floating value is serialized with 17 significant digits so golden files can
// be compared byte-exactly.
struct Report {
  std::string command;
  std::string symbol;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json verdicts = nlohmann::json::array();
  std::vector<std::string> caveats;
  std::string version = kVersion;

  nlohmann::json to_json() const;
  std::string dump() const;  // sorted keys, 2-space indent, %.17g floats
};

// Recursive serializer used by Report::dump; exposed for the CSV-free cases
// in tests.
std::string dump_json_17(const nlohmann::json& j, int indent = 2);

nlohmann::json complex_to_json(cx v);
nlohmann::json verdict_to_json(const std::string& name, const Verdict& v,
                               bool include_witness = true);
nlohmann::json class_label_to_json(const ClassLabel& label);

}  // namespace subhardy
