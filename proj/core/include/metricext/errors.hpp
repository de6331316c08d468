// errors.hpp - typed error conditions shared across the toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace metricext {

enum class Errc {
  duplicate_vertex,
  duplicate_edge,
  self_loop,
  negative_weight,
  unknown_endpoint,
  unknown_vertex,
  unknown_edge,
  cap_exceeded,
  disconnected,
  no_path,
  dimension_mismatch,
  adjacent_pair,
  not_metrizable,
  not_pseudometrizable,
  no_slack,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace metricext
