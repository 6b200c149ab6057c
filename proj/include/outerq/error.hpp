#pragma once

#include <stdexcept>
#include <string>

namespace outerq {

enum class errc {
  invalid_order,
  capacity,
  edge_state,
  invalid_pattern,
  unsupported_pattern,
  undefined_eta,
  convergence,
  precondition,
  parameter_domain,
  construction,
  parse,
  io,
  domain,
  unknown_check,
};

inline const char* to_string(errc e) {
  switch (e) {
    case errc::invalid_order: return "invalid-order";
    case errc::capacity: return "capacity";
    case errc::edge_state: return "edge-state";
    case errc::invalid_pattern: return "invalid-pattern";
    case errc::unsupported_pattern: return "unsupported-pattern";
    case errc::undefined_eta: return "undefined-eta";
    case errc::convergence: return "convergence";
    case errc::precondition: return "precondition-not-met";
    case errc::parameter_domain: return "parameter-domain";
    case errc::construction: return "construction";
    case errc::parse: return "parse";
    case errc::io: return "io";
    case errc::domain: return "domain";
    case errc::unknown_check: return "unknown-check";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the `errc` kinds.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace outerq
