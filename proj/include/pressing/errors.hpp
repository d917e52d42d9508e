#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pressing {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input line: carries the 1-based line number and the JSON
// field path ("home[2].x") of the offending value.
class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, std::string field, const std::string& message)
      : Error("line " + std::to_string(line_no) +
              (field.empty() ? "" : " (" + field + ")") + ": " + message),
        line_no_(line_no),
        field_(std::move(field)) {}

  std::size_t line_no() const { return line_no_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_no_;
  std::string field_;
};

// Frame-level contract violation (empty team, broken monotonicity, ...).
class ValidationError : public Error {
 public:
  ValidationError(std::int64_t frame_id, const std::string& message)
      : Error("frame " + std::to_string(frame_id) + ": " + message),
        frame_id_(frame_id) {}

  std::int64_t frame_id() const { return frame_id_; }

 private:
  std::int64_t frame_id_;
};

// Pass-lane computation requested on a frame with no identifiable carrier.
class NoCarrierError : public ValidationError {
 public:
  explicit NoCarrierError(std::int64_t frame_id)
      : ValidationError(frame_id, "no identifiable ball carrier") {}
};

// Non-fatal finding attached to a frame and entity ("BALL" for the ball).
struct Warning {
  std::int64_t frame_id = 0;
  std::string entity_id;
  std::string message;
  double value = 0.0;  // the offending quantity, when there is one
};

}  // namespace pressing
