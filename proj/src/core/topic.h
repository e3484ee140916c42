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

// MQTT topic names and filters, plus the deny-by-default ACL table.
//
// Topics are '/'-separated levels. A filter may use '+' for exactly one level
// and a trailing '#' for zero or more remaining levels; each wildcard must
// occupy a whole level.

#ifndef PETFABRIC_CORE_TOPIC_H_
#define PETFABRIC_CORE_TOPIC_H_

#include <string>
#include <string_view>
#include <vector>

namespace petfabric {

// Throw kMalformedTopic on failure.
void ValidateTopicName(std::string_view topic);
void ValidateTopicFilter(std::string_view filter);

// True when the concrete topic name matches the filter.
bool TopicMatches(std::string_view filter, std::string_view topic);

// True when every topic matched by `inner` is also matched by `outer`.
bool FilterCovers(std::string_view outer, std::string_view inner);

enum class Permission { kPublish, kSubscribe };

const char* PermissionName(Permission p);

struct AclEntry {
  std::string client_id;
  std::string pattern;
  Permission permission = Permission::kPublish;
};

class AclTable {
 public:
  // Validates the pattern as a topic filter.
  void Allow(std::string client_id, std::string pattern, Permission permission);

  // Removes every entry of `client_id` with this exact pattern and permission.
  void Revoke(std::string_view client_id, std::string_view pattern,
              Permission permission);

  bool MayPublish(std::string_view client_id, std::string_view topic) const;

  // A subscription is granted when a single subscribe entry covers the whole
  // filter.
  bool MaySubscribe(std::string_view client_id, std::string_view filter) const;

  // Whether a concrete topic may be delivered to the client.
  bool MayReceive(std::string_view client_id, std::string_view topic) const;

  const std::vector<AclEntry>& entries() const { return entries_; }

 private:
  std::vector<AclEntry> entries_;
};

}  // namespace petfabric

#endif  // PETFABRIC_CORE_TOPIC_H_
