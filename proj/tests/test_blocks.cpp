#include "doctest.h"

#include "linematch/blocks.hpp"
#include "linematch/generator.hpp"
#include "support.hpp"

using namespace linematch;
using namespace testsupport;

TEST_CASE("partition splits the merged line into maximal alternating runs") {
  Instance inst = make_instance({1, 3, 4}, {1, 1, 1}, {2, 5}, {1, 1});
  BlockPartition part = partition(inst);
  REQUIRE(part.blocks.size() == 4);
  CHECK(part.blocks[0].side == Side::s);
  CHECK(part.blocks[0].points == std::vector<int>{0});
  CHECK(part.blocks[1].side == Side::t);
  CHECK(part.blocks[1].points == std::vector<int>{0});
  CHECK(part.blocks[2].side == Side::s);
  CHECK(part.blocks[2].points == std::vector<int>{1, 2});
  CHECK(part.blocks[3].side == Side::t);
  CHECK(part.blocks[3].points == std::vector<int>{1});
}

TEST_CASE("partition handles single-block and one-sided shapes") {
  Instance two = make_instance({1, 2}, {1, 1}, {5}, {1});
  BlockPartition part = partition(two);
  REQUIRE(part.blocks.size() == 2);
  CHECK(part.blocks[0].points == std::vector<int>{0, 1});

  Instance lone;  // one point, side t empty: built directly, demands allowed to dangle
  lone.s_coords = {1};
  lone.s_demands = {1};
  BlockPartition single = partition(lone);
  REQUIRE(single.blocks.size() == 1);
  CHECK(single.blocks[0].side == Side::s);

  Instance empty;
  CHECK_THROWS_AS(partition(empty), Error);
}

TEST_CASE("boundary_point returns the largest point of the previous block") {
  Instance inst = make_instance({1, 3, 4}, {1, 1, 1}, {2, 5}, {1, 1});
  BlockPartition part = partition(inst);
  CHECK_FALSE(boundary_point(part, 0).has_value());
  auto w2 = boundary_point(part, 2);
  REQUIRE(w2.has_value());
  CHECK(w2->side == Side::t);
  CHECK(inst.t_coords[w2->index] == 2);
  auto w3 = boundary_point(part, 3);
  REQUIRE(w3.has_value());
  CHECK(w3->side == Side::s);
  CHECK(inst.s_coords[w3->index] == 4);
  CHECK_THROWS_AS(boundary_point(part, 9), Error);
}

TEST_CASE("partition round-trips and alternates on random instances") {
  SplitMix64 rng(77);
  for (int k = 0; k < 200; ++k) {
    Instance inst = random_small_instance(rng, 12, MatchMode::demand_only);
    BlockPartition part = partition(inst);
    auto pts = merged_points(inst);
    std::size_t at = 0;
    int s_seen = 0, t_seen = 0;
    for (std::size_t w = 0; w < part.blocks.size(); ++w) {
      const Block& blk = part.blocks[w];
      CHECK_FALSE(blk.points.empty());
      if (w > 0) CHECK(blk.side != part.blocks[w - 1].side);
      for (int idx : blk.points) {
        REQUIRE(at < pts.size());
        CHECK(pts[at].side == blk.side);
        CHECK(pts[at].index == idx);
        ++at;
        (blk.side == Side::s ? s_seen : t_seen)++;
      }
    }
    CHECK(at == pts.size());
    CHECK(s_seen == inst.s_size());
    CHECK(t_seen == inst.t_size());
    CHECK(part.blocks.size() <= static_cast<std::size_t>(inst.total_size()));
  }
}
