#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ginv/matrix.hpp"

namespace ginv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,        // usage, file, parse or dimension errors
  kExitNonexistent = 2,  // inverse does not exist / singular resolvent
  kExitRejected = 3,     // a checked condition came out false
};

/// Result of one CLI invocation. The text rendering is produced from these
/// fields only, so the JSON form carries everything the text shows.
struct Report {
  std::string command;
  std::string inputs_digest;
  std::vector<std::pair<std::string, Matrix>> matrices;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, double>> norms;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::string> messages;
  int exit_status = kExitOk;

  void matrix(std::string name, Matrix m) { matrices.emplace_back(std::move(name), std::move(m)); }
  void value(std::string name, std::string v) { values.emplace_back(std::move(name), std::move(v)); }
  void norm(std::string name, double v) { norms.emplace_back(std::move(name), v); }
  void verdict(std::string name, bool ok) { verdicts.emplace_back(std::move(name), ok); }
  void message(std::string m) { messages.push_back(std::move(m)); }
  bool all_verdicts_pass() const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::json& j);

  friend bool operator==(const Report&, const Report&) = default;
};

/// 64-bit FNV-1a over the given strings, as 16 hex digits.
std::string digest(const std::vector<std::string>& parts);

}  // namespace ginv::cli
