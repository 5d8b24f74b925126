#include "ginv/cli/report.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "ginv/cli/matrix_io.hpp"

namespace ginv::cli {

bool Report::all_verdicts_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  if (!inputs_digest.empty()) out << "inputs:  " << inputs_digest << '\n';
  for (const auto& [name, m] : matrices) {
    out << '\n' << name << " (" << m.rows() << 'x' << m.cols() << "):\n" << pretty(m);
  }
  if (!values.empty()) out << '\n';
  for (const auto& [name, v] : values) out << name << ": " << v << '\n';
  if (!norms.empty()) out << "\nnorms (operator 2-norm unless noted):\n";
  for (const auto& [name, v] : norms) {
    out << "  " << std::left << std::setw(34) << name << std::setprecision(12) << v << '\n';
  }
  if (!verdicts.empty()) out << "\nchecks:\n";
  for (const auto& [name, ok] : verdicts) out << "  " << (ok ? "PASS " : "FAIL ") << name << '\n';
  if (!messages.empty()) out << '\n';
  for (const auto& m : messages) out << m << '\n';
  out << "\nexit: " << exit_status << '\n';
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["matrices"] = nlohmann::ordered_json::array();
  for (const auto& [name, m] : matrices) j["matrices"].push_back({{"name", name}, {"text", serialize(m)}});
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& [name, v] : values) j["values"].push_back({{"name", name}, {"value", v}});
  j["norms"] = nlohmann::ordered_json::array();
  for (const auto& [name, v] : norms) j["norms"].push_back({{"name", name}, {"value", v}});
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& [name, ok] : verdicts) j["verdicts"].push_back({{"name", name}, {"pass", ok}});
  j["messages"] = messages;
  j["exit_status"] = exit_status;
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs_digest = j.at("inputs_digest").get<std::string>();
  for (const auto& m : j.at("matrices")) {
    r.matrix(m.at("name").get<std::string>(), parse_matrix(m.at("text").get<std::string>()));
  }
  for (const auto& v : j.at("values")) r.value(v.at("name").get<std::string>(), v.at("value").get<std::string>());
  for (const auto& v : j.at("norms")) r.norm(v.at("name").get<std::string>(), v.at("value").get<double>());
  for (const auto& v : j.at("verdicts")) r.verdict(v.at("name").get<std::string>(), v.at("pass").get<bool>());
  r.messages = j.at("messages").get<std::vector<std::string>>();
  r.exit_status = j.at("exit_status").get<int>();
  return r;
}

std::string digest(const std::vector<std::string>& parts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : parts) {
    for (unsigned char c : p) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;  // part separator
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace ginv::cli
