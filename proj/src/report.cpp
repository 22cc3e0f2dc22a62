#include "subhardy/report.hpp"

#include <cstdio>

namespace subhardy {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void escape_into(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_rec(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // keys already sorted
        if (!first) out += ",\n";
        first = false;
        out += pad;
        escape_into(it.key(), out);
        out += ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(v, indent, depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::json::value_t::string:
      escape_into(j.get<std::string>(), out);
      return;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case nlohmann::json::value_t::number_float:
      out += fmt_double(j.get<double>());
      return;
    case nlohmann::json::value_t::null:
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_json_17(const nlohmann::json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["symbol"] = symbol;
  j["parameters"] = parameters;
  j["verdicts"] = verdicts;
  j["caveats"] = caveats;
  j["version"] = version;
  return j;
}

std::string Report::dump() const { return dump_json_17(to_json()) + "\n"; }

nlohmann::json complex_to_json(cx v) {
  nlohmann::json j;
  j["re"] = v.real();
  j["im"] = v.imag();
  return j;
}

nlohmann::json verdict_to_json(const std::string& name, const Verdict& v, bool include_witness) {
  nlohmann::json j;
  j["name"] = name;
  j["psd"] = v.psd;
  j["min_eigenvalue"] = v.min_eigenvalue;
  j["tolerance_used"] = v.tolerance_used;
  j["scale"] = v.scale;
  if (include_witness && !v.witness.empty()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& c : v.witness) w.push_back(complex_to_json(c));
    j["witness"] = std::move(w);
  }
  return j;
}

nlohmann::json class_label_to_json(const ClassLabel& label) {
  nlohmann::json j;
  j["schur"] = tristate_name(label.modulus.schur);
  j["inverse_schur"] = tristate_name(label.modulus.inverse_schur);
  j["sqrt2_bounded"] = tristate_name(label.modulus.sqrt2_bounded);
  j["max_modulus"] = label.modulus.max_modulus;
  j["min_modulus"] = label.modulus.min_modulus;
  j["exact_constant"] = label.modulus.exact_constant;
  j["sb_member"] = verdict_to_json("sb_defect_gram", label.sb_member);
  j["sb1_member"] = nlohmann::json::array({verdict_to_json("sb1_lower_gram", label.sb1_member.first),
                                           verdict_to_json("sb1_upper_gram", label.sb1_member.second)});
  j["compression_order"] = label.compression_order;
  j["compression_sb"] = verdict_to_json("sb_defect_compression", label.compression_sb, false);
  j["compression_sb1_lower"] =
      verdict_to_json("sb1_lower_compression", label.compression_sb1_lower, false);
  j["compression_sb1_upper"] =
      verdict_to_json("sb1_upper_compression", label.compression_sb1_upper, false);
  j["consistent"] = label.consistent;
  j["margin"] = label.margin;
  if (!label.escalation_stage.empty()) j["escalation_stage"] = label.escalation_stage;
  return j;
}

}  // namespace subhardy
