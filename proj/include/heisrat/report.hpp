#pragma once

// Run reports: one result per named check, rendered as a human table or as a
// versioned JSON document. Timing fields are opt-in so that structured output
// is byte-identical across runs.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace heisrat {

inline constexpr int kReportVersion = 1;

enum class CheckStatus { pass, fail, inconclusive, cited };
const char* to_string(CheckStatus s);

struct ResultEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string summary;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::optional<double> seconds;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<ResultEntry> results;
  std::vector<std::string> notes;
  /// Additional top-level sections (e.g. a full certificate), in insertion order.
  nlohmann::ordered_json attachments = nlohmann::ordered_json::object();
  std::optional<double> seconds;

  ResultEntry& add(std::string name, CheckStatus status, std::string summary = {},
                   nlohmann::ordered_json witness = nlohmann::ordered_json::object());
  /// fail if any result failed, else inconclusive if any was, else pass.
  CheckStatus verdict() const;
};

/// 0 pass/cited, 1 fail, 3 inconclusive.
int exit_code(const Report& r);

nlohmann::ordered_json to_json(const Report& r, bool with_timing = false);
std::string render_structured(const Report& r, bool with_timing = false);
std::string render_human(const Report& r, bool with_timing = false);

}  // namespace heisrat
