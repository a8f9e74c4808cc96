// SPDX-License-Identifier: BSD-2-Clause

#pragma once

#include <stdexcept>
#include <string>

namespace hierslam {

enum class MapErrorCode { duplicate_id, dangling_reference, unknown_id, invalid_entity };

class MapError : public std::runtime_error {
 public:
  MapError(MapErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  MapErrorCode code() const { return code_; }

 private:
  MapErrorCode code_;
};

enum class SimErrorCode {
  marker_off_wall,
  duplicate_marker_id,
  trajectory_collision,
  invalid_spec
};

class SimError : public std::runtime_error {
 public:
  SimError(SimErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  SimErrorCode code() const { return code_; }

 private:
  SimErrorCode code_;
};

/// File-format and config errors; carries the offending line when known.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hierslam
