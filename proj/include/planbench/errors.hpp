#pragma once

#include <stdexcept>
#include <string>

namespace planbench {

// Caller-supplied values that violate an operation's preconditions
// (dimension mismatches, non-finite actions, unknown link names).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Document content that fails schema or invariant checks. `field` is the
// dotted path of the offending entry, e.g. "goal.sub_goals[0].epsilon".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Bytes that cannot be parsed at all (malformed XML/YAML/CSV). `line` is
// 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_ = 0;
};

// Declared but intentionally unsupported input features (mesh collision
// geometry, planar/floating joints).
class UnsupportedFeatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A branched robot description without an explicit tip selection.
class AmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failed name lookups against a registry.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. stepping an environment past a terminal status.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rejection sampling could not place an obstacle within the attempt cap.
class InfeasibleRandomizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Persisted study data that cannot be loaded back.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A planner asked to act on an observation that is already in collision.
class CollisionStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planbench
