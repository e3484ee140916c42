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

#include "core/topic.h"

#include <algorithm>

#include "core/envelope.h"
#include "core/error.h"

namespace petfabric {

namespace {

std::vector<std::string_view> Levels(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t slash = s.find('/', start);
    if (slash == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, slash - start));
    start = slash + 1;
  }
}

void CheckCommon(std::string_view s, const char* what) {
  if (s.empty()) {
    throw Error(ErrorCode::kMalformedTopic, std::string(what) + " is empty");
  }
  if (s.find('\0') != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedTopic,
                std::string(what) + " contains NUL");
  }
  if (!IsValidUtf8(std::string(s))) {
    throw Error(ErrorCode::kMalformedTopic,
                std::string(what) + " is not valid UTF-8");
  }
}

}  // namespace

void ValidateTopicName(std::string_view topic) {
  CheckCommon(topic, "topic");
  if (topic.find_first_of("+#") != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedTopic,
                "topic '" + std::string(topic) + "' contains a wildcard");
  }
}

void ValidateTopicFilter(std::string_view filter) {
  CheckCommon(filter, "filter");
  const auto levels = Levels(filter);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string_view level = levels[i];
    const bool has_wild = level.find_first_of("+#") != std::string_view::npos;
    if (!has_wild) continue;
    if (level == "+") continue;
    if (level == "#" && i + 1 == levels.size()) continue;
    throw Error(ErrorCode::kMalformedTopic,
                "filter '" + std::string(filter) +
                    "' has a wildcard that is not a whole level or a "
                    "non-trailing '#'");
  }
}

bool TopicMatches(std::string_view filter, std::string_view topic) {
  const auto f = Levels(filter);
  const auto t = Levels(topic);
  std::size_t i = 0;
  for (; i < f.size(); ++i) {
    if (f[i] == "#") return true;
    if (i >= t.size()) return false;
    if (f[i] != "+" && f[i] != t[i]) return false;
  }
  return i == t.size();
}

bool FilterCovers(std::string_view outer, std::string_view inner) {
  const auto o = Levels(outer);
  const auto n = Levels(inner);
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] == "#") return true;
    if (i >= n.size()) return false;
    if (n[i] == "#") return false;
    if (o[i] == "+") continue;
    if (n[i] == "+" || o[i] != n[i]) return false;
  }
  return o.size() == n.size();
}

const char* PermissionName(Permission p) {
  return p == Permission::kPublish ? "publish" : "subscribe";
}

void AclTable::Allow(std::string client_id, std::string pattern,
                     Permission permission) {
  ValidateTopicFilter(pattern);
  entries_.push_back({std::move(client_id), std::move(pattern), permission});
}

void AclTable::Revoke(std::string_view client_id, std::string_view pattern,
                      Permission permission) {
  std::erase_if(entries_, [&](const AclEntry& e) {
    return e.client_id == client_id && e.pattern == pattern &&
           e.permission == permission;
  });
}

bool AclTable::MayPublish(std::string_view client_id,
                          std::string_view topic) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const AclEntry& e) {
    return e.permission == Permission::kPublish && e.client_id == client_id &&
           TopicMatches(e.pattern, topic);
  });
}

bool AclTable::MaySubscribe(std::string_view client_id,
                            std::string_view filter) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const AclEntry& e) {
    return e.permission == Permission::kSubscribe &&
           e.client_id == client_id && FilterCovers(e.pattern, filter);
  });
}

bool AclTable::MayReceive(std::string_view client_id,
                          std::string_view topic) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const AclEntry& e) {
    return e.permission == Permission::kSubscribe &&
           e.client_id == client_id && TopicMatches(e.pattern, topic);
  });
}

}  // namespace petfabric
