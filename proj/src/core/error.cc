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

#include "core/error.h"

namespace petfabric {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDomainInverted: return "domain-inverted";
    case ErrorCode::kOutOfDomain: return "out-of-domain";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kAclDenied: return "acl-denied";
    case ErrorCode::kUnknownClient: return "unknown-client";
    case ErrorCode::kMalformedTopic: return "malformed-topic";
    case ErrorCode::kDecode: return "decode";
    case ErrorCode::kMissingShare: return "missing-share";
    case ErrorCode::kModulusMismatch: return "modulus-mismatch";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kBufferTooSmall: return "buffer-too-small";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

std::string DescribeMissing(const std::vector<MissingShare>& missing) {
  std::string out = "missing " + std::to_string(missing.size()) + " share(s):";
  for (const auto& m : missing) {
    out += " (" + m.sensor_id + ", " + std::to_string(m.channel) + ")";
  }
  return out;
}

}  // namespace

MissingShareError::MissingShareError(std::vector<MissingShare> missing)
    : Error(ErrorCode::kMissingShare, DescribeMissing(missing)),
      missing_(std::move(missing)) {}

}  // namespace petfabric
