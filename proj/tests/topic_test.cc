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

#include <gtest/gtest.h>

#include "core/error.h"

namespace petfabric {
namespace {

TEST(TopicTest, Validation) {
  EXPECT_NO_THROW(ValidateTopicName("cabin/seat/12A/weight"));
  EXPECT_THROW(ValidateTopicName(""), Error);
  EXPECT_THROW(ValidateTopicName("cabin/+/x"), Error);
  EXPECT_THROW(ValidateTopicName("cabin/#"), Error);
  EXPECT_NO_THROW(ValidateTopicFilter("cabin/+/weight"));
  EXPECT_NO_THROW(ValidateTopicFilter("#"));
  EXPECT_THROW(ValidateTopicFilter("cabin/#/x"), Error);
  EXPECT_THROW(ValidateTopicFilter("cabin/a+"), Error);
  EXPECT_THROW(ValidateTopicFilter("cabin/a#"), Error);
}

TEST(TopicTest, SingleLevelWildcard) {
  EXPECT_TRUE(TopicMatches("cabin/seat/+/weight", "cabin/seat/12A/weight"));
  EXPECT_FALSE(TopicMatches("cabin/seat/+/weight", "cabin/seat/12A/b/weight"));
  EXPECT_FALSE(TopicMatches("cabin/seat/+/weight", "cabin/seat/weight"));
  EXPECT_TRUE(TopicMatches("+/+", "a/"));  // empty level is a level
}

TEST(TopicTest, MultiLevelWildcard) {
  EXPECT_TRUE(TopicMatches("cabin/#", "cabin/seat/12A/weight"));
  EXPECT_TRUE(TopicMatches("cabin/#", "cabin"));  // parent level included
  EXPECT_TRUE(TopicMatches("#", "anything/at/all"));
  EXPECT_FALSE(TopicMatches("cabin/#", "galley/oven"));
  EXPECT_FALSE(TopicMatches("cabin/seat", "cabin/seat/1"));
}

TEST(TopicTest, FilterCovers) {
  EXPECT_TRUE(FilterCovers("cabin/#", "cabin/+/weight"));
  EXPECT_TRUE(FilterCovers("cabin/+/weight", "cabin/12A/weight"));
  EXPECT_TRUE(FilterCovers("#", "#"));
  EXPECT_FALSE(FilterCovers("cabin/+/weight", "cabin/#"));
  EXPECT_FALSE(FilterCovers("cabin/12A/weight", "cabin/+/weight"));
  EXPECT_FALSE(FilterCovers("cabin/+", "cabin/#"));
}

TEST(AclTest, DenyByDefault) {
  AclTable acl;
  EXPECT_FALSE(acl.MayPublish("s1", "cabin/x"));
  acl.Allow("s1", "cabin/+", Permission::kPublish);
  EXPECT_TRUE(acl.MayPublish("s1", "cabin/x"));
  EXPECT_FALSE(acl.MayPublish("s2", "cabin/x"));
  EXPECT_FALSE(acl.MaySubscribe("s1", "cabin/x"));  // publish only
  acl.Revoke("s1", "cabin/+", Permission::kPublish);
  EXPECT_FALSE(acl.MayPublish("s1", "cabin/x"));
  EXPECT_THROW(acl.Allow("s1", "bad/#/x", Permission::kPublish), Error);
}

TEST(AclTest, SubscribeNeedsCoveringEntry) {
  AclTable acl;
  acl.Allow("srv", "cabin/vendor-a/#", Permission::kSubscribe);
  EXPECT_TRUE(acl.MaySubscribe("srv", "cabin/vendor-a/+/value"));
  EXPECT_FALSE(acl.MaySubscribe("srv", "cabin/#"));
  EXPECT_TRUE(acl.MayReceive("srv", "cabin/vendor-a/s1/value"));
  EXPECT_FALSE(acl.MayReceive("srv", "cabin/vendor-b/s1/value"));
}

}  // namespace
}  // namespace petfabric
