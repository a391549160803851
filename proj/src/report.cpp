#include "heisrat/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace heisrat {

using nlohmann::ordered_json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inconclusive:
      return "inconclusive";
    case CheckStatus::cited:
      return "cited";
  }
  return "fail";
}

ResultEntry& Report::add(std::string name, CheckStatus status, std::string summary, ordered_json witness) {
  results.push_back({std::move(name), status, std::move(summary), std::move(witness), std::nullopt});
  return results.back();
}

CheckStatus Report::verdict() const {
  bool inconclusive = false;
  for (const auto& r : results) {
    if (r.status == CheckStatus::fail) return CheckStatus::fail;
    if (r.status == CheckStatus::inconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::inconclusive : CheckStatus::pass;
}

int exit_code(const Report& r) {
  switch (r.verdict()) {
    case CheckStatus::fail:
      return 1;
    case CheckStatus::inconclusive:
      return 3;
    default:
      return 0;
  }
}

namespace {

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

}  // namespace

ordered_json to_json(const Report& r, bool with_timing) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  ordered_json results = ordered_json::array();
  for (const auto& e : r.results) {
    ordered_json item;
    item["name"] = e.name;
    item["status"] = to_string(e.status);
    item["summary"] = e.summary;
    item["witness"] = e.witness;
    if (with_timing && e.seconds) item["seconds"] = *e.seconds;
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  j["verdict"] = to_string(r.verdict());
  j["notes"] = r.notes;
  for (const auto& [key, value] : r.attachments.items()) j[key] = value;
  if (with_timing && r.seconds) j["seconds"] = *r.seconds;
  return j;
}

std::string render_structured(const Report& r, bool with_timing) { return to_json(r, with_timing).dump(2) + "\n"; }

std::string render_human(const Report& r, bool with_timing) {
  std::size_t width = 4;
  for (const auto& e : r.results) width = std::max(width, e.name.size());
  std::ostringstream out;
  out << r.command;
  if (r.config.contains("n")) out << " (n = " << r.config["n"].dump() << ")";
  out << "\n";
  for (const auto& e : r.results) {
    std::string status = to_string(e.status);
    status.resize(12, ' ');
    std::string name = e.name;
    name.resize(width, ' ');
    out << "  " << status << " " << name;
    if (!e.summary.empty()) out << "  " << e.summary;
    if (with_timing && e.seconds) out << "  [" << format_seconds(*e.seconds) << "]";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << "verdict: " << to_string(r.verdict());
  if (with_timing && r.seconds) out << " [" << format_seconds(*r.seconds) << "]";
  out << "\n";
  return out.str();
}

}  // namespace heisrat
