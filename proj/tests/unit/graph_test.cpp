// Copyright 2026 The vgame Authors
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


#include <gtest/gtest.h>

#include <vector>

#include "vgame/graph.hpp"

namespace vgame {
namespace {

const std::vector<Edge> kP3 = {{0, 1}, {1, 2}};

TEST(BuildInstanceTest, PathIsStandard) {
  auto g = build_instance(3, kP3, std::nullopt, std::nullopt, 2);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.player_count(), 2u);
  EXPECT_TRUE(g.is_standard());
  EXPECT_EQ(g.facilities(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(g.total_weight(), 3);
}

TEST(BuildInstanceTest, RejectsTooManyPlayers) {
  EXPECT_THROW(build_instance(3, kP3, std::nullopt, std::nullopt, 3), InputError);
  EXPECT_THROW(build_instance(3, kP3, std::nullopt, std::nullopt, 0), InputError);
}

TEST(BuildInstanceTest, RejectsZeroWeight) {
  EXPECT_THROW(build_instance(3, kP3, std::vector<std::int64_t>{1, 0, 1}),
               InputError);
  EXPECT_THROW(build_instance(3, kP3, std::vector<std::int64_t>{1, 1}),
               InputError);
}

TEST(BuildInstanceTest, RejectsMalformedGraphs) {
  EXPECT_THROW(build_instance(3, std::vector<Edge>{{0, 0}}), InputError);
  EXPECT_THROW(build_instance(3, std::vector<Edge>{{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(build_instance(3, std::vector<Edge>{{0, 3}}), InputError);
  EXPECT_THROW(build_instance(0, std::vector<Edge>{}), InputError);
}

TEST(BuildInstanceTest, RejectsBadFacilities) {
  EXPECT_THROW(build_instance(3, kP3, std::nullopt, std::vector<Vertex>{}),
               InputError);
  EXPECT_THROW(build_instance(3, kP3, std::nullopt, std::vector<Vertex>{1, 1}),
               InputError);
  EXPECT_THROW(build_instance(3, kP3, std::nullopt, std::vector<Vertex>{5}),
               InputError);
}

TEST(BuildInstanceTest, RestrictedFacilitiesAreNotStandard) {
  auto g = build_instance(3, kP3, std::nullopt, std::vector<Vertex>{2, 0});
  EXPECT_FALSE(g.is_standard());
  EXPECT_EQ(g.facilities(), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(g.is_facility(2));
  EXPECT_FALSE(g.is_facility(1));
}

TEST(DistanceMatrixTest, Examples) {
  DistanceMatrix p3(Graph(3, kP3));
  EXPECT_EQ(p3(0, 2), Distance(2));

  DistanceMatrix apart(Graph(2, std::vector<Edge>{}));
  EXPECT_FALSE(apart(0, 1).is_finite());

  auto c6 = all_pairs_distances(cycle_instance(6, 1));
  EXPECT_EQ(c6(0, 3), Distance(3));
}

TEST(DistanceMatrixTest, SymmetricZeroDiagonalBoundedOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 11;
    auto g = random_connected_instance(n, 1, seed);
    ASSERT_TRUE(is_connected(g));
    auto d = all_pairs_distances(g);
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), Distance(0));
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), d(v, u));
        ASSERT_TRUE(d(u, v).is_finite());
        EXPECT_LE(d(u, v).value(), n - 1);
      }
    }
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_connected(Graph(3, kP3)));
  EXPECT_FALSE(is_connected(Graph(4, kP3)));
  EXPECT_TRUE(is_connected(cycle_instance(12, 2)));
}

TEST(CycleInstanceTest, Shapes) {
  EXPECT_EQ(cycle_instance(3, 1).graph().edge_count(), 3u);
  EXPECT_TRUE(cycle_instance(3, 1).graph().has_edge(0, 2));
  EXPECT_EQ(cycle_instance(6, 1).graph().edge_count(), 6u);
  auto c8 = cycle_instance(8, 3);
  EXPECT_EQ(c8.player_count(), 3u);
  EXPECT_TRUE(c8.is_standard());
  EXPECT_THROW(cycle_instance(2, 1), InputError);
}

TEST(RandomInstanceTest, DeterministicInSeed) {
  EXPECT_EQ(random_connected_instance(7, 2, 42), random_connected_instance(7, 2, 42));
}

}  // namespace
}  // namespace vgame
