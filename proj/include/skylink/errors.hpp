// Copyright (c) 2026 Skylink Contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SKYLINK_ERRORS_HPP
#define SKYLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skylink {

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& field, const std::string& detail = "")
      : std::runtime_error("range error: " + field +
                           (detail.empty() ? "" : " (" + detail + ")")),
        field(field) {}
  std::string field;
};

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateLink : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownKeyError : std::runtime_error {
  explicit UnknownKeyError(const std::string& key)
      : std::runtime_error("unknown config key: " + key), key(key) {}
  std::string key;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skylink

#endif  // SKYLINK_ERRORS_HPP
