// Copyright 2026 The PET Fabric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PETFABRIC_CORE_ERROR_H_
#define PETFABRIC_CORE_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace petfabric {

// Error categories. The numeric values are part of the C ABI (pf_status).
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kDomainInverted = 2,
  kOutOfDomain = 3,
  kOutOfRange = 4,
  kOverflow = 5,
  kAclDenied = 6,
  kUnknownClient = 7,
  kMalformedTopic = 8,
  kDecode = 9,
  kMissingShare = 10,
  kModulusMismatch = 11,
  kConfig = 12,
  kIo = 13,
  kBufferTooSmall = 14,
  kInternal = 15,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// One absent share, identified by the sensor and the 1-based channel index.
struct MissingShare {
  std::string sensor_id;
  std::uint32_t channel = 0;

  friend bool operator==(const MissingShare&, const MissingShare&) = default;
};

class MissingShareError : public Error {
 public:
  explicit MissingShareError(std::vector<MissingShare> missing);

  const std::vector<MissingShare>& missing() const { return missing_; }

 private:
  std::vector<MissingShare> missing_;
};

// Config validation failure tied to a JSON field path such as "pet.m".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(ErrorCode::kConfig, field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace petfabric

#endif  // PETFABRIC_CORE_ERROR_H_
