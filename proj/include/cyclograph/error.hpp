//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_ERROR_HPP_
#define CYCLOGRAPH_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cyclograph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A molfile/SDF record that cannot be read. For SDF input the 1-based record
// number is attached.
class MalformedRecord : public Error {
 public:
  explicit MalformedRecord(const std::string &what,
                           std::optional<std::size_t> record = std::nullopt)
      : Error(record ? "record " + std::to_string(*record) + ": " + what
                     : what),
        record_(record) {}

  std::optional<std::size_t> record() const noexcept { return record_; }

 private:
  std::optional<std::size_t> record_;
};

class UnsupportedVersion : public Error {
 public:
  using Error::Error;
};

class SchemaViolation : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotBiconnected : public Error {
 public:
  using Error::Error;
};

class CorpusMismatch : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration or an unresolvable target.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclograph

#endif  // CYCLOGRAPH_ERROR_HPP_
