#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "outerq/error.hpp"

namespace outerq {

enum class Status { Confirmed, Refuted, Tie, OutOfScope };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Confirmed: return "Confirmed";
    case Status::Refuted: return "Refuted";
    case Status::Tie: return "Tie";
    case Status::OutOfScope: return "OutOfScope";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "Confirmed") return Status::Confirmed;
  if (s == "Refuted") return Status::Refuted;
  if (s == "Tie") return Status::Tie;
  if (s == "OutOfScope") return Status::OutOfScope;
  throw error(errc::parse, "unknown status '" + s + "'");
}

/// Outcome of one verification check. `margin` is +inf when there is no
/// competitor to measure against; it is written to JSON as null.
struct VerificationReport {
  std::string check_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Status status = Status::Confirmed;
  std::vector<std::string> witness_graphs;
  std::vector<double> q_values;
  double margin = std::numeric_limits<double>::infinity();
  std::int64_t runtime_ms = 0;
  std::vector<std::string> notes;
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["parameters"] = r.parameters;
  j["status"] = to_string(r.status);
  j["witness_graphs"] = r.witness_graphs;
  j["q_values"] = r.q_values;
  j["margin"] = std::isfinite(r.margin) ? nlohmann::ordered_json(r.margin) : nlohmann::ordered_json(nullptr);
  j["runtime_ms"] = r.runtime_ms;
  j["notes"] = r.notes;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    VerificationReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.parameters = j.at("parameters");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.witness_graphs = j.at("witness_graphs").get<std::vector<std::string>>();
    r.q_values = j.at("q_values").get<std::vector<double>>();
    r.margin = j.at("margin").is_null() ? std::numeric_limits<double>::infinity() : j.at("margin").get<double>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse, std::string("malformed report: ") + e.what());
  }
}

inline VerificationReport report_from_json(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::parse, std::string("report is not JSON: ") + e.what());
  }
}

}  // namespace outerq
