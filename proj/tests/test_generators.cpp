#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "hgs/generators.hpp"
#include "hgs/hypergraph.hpp"
#include "oracles.hpp"

namespace hgs {
namespace {

TEST(SplitMix64, ReferenceVectors) {
  // Published outputs of the reference splitmix64.c.
  SplitMix64 a(1234567);
  EXPECT_EQ(a.next(), 6457827717110365317ULL);
  EXPECT_EQ(a.next(), 3203168211198807973ULL);
  EXPECT_EQ(a.next(), 9817491932198370423ULL);
  EXPECT_EQ(a.next(), 4593380528125082431ULL);
  EXPECT_EQ(a.next(), 16408922859458223821ULL);
  EXPECT_EQ(SplitMix64(0).next(), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix64, BoundedDrawsStayInRangeAndCoverIt) {
  SplitMix64 rng(9);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 6000; ++i) {
    auto v = rng.uniform_between(3, 8);
    ASSERT_GE(v, 3u);
    ASSERT_LE(v, 8u);
    ++seen[v];
  }
  EXPECT_EQ(seen.size(), 6u);
  for (auto [v, c] : seen) EXPECT_GT(c, 800) << v;
  EXPECT_EQ(rng.uniform(1), 0u);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial_capped(5, 2), 10u);
  EXPECT_EQ(binomial_capped(6, 3), 20u);
  EXPECT_EQ(binomial_capped(3, 5), 0u);
  EXPECT_EQ(binomial_capped(60, 30), 118264581564861424ULL);
  EXPECT_EQ(binomial_capped(100, 50, 1000000), 1000001u);
}

TEST(Generators, SingleEdge) {
  for (std::size_t k = 2; k <= kMaxUniformity; ++k) {
    auto h = single_edge(k);
    EXPECT_EQ(h.num_vertices(), k);
    EXPECT_EQ(h.num_edges(), 1u);
    EXPECT_TRUE(is_regular(h));
  }
  EXPECT_THROW(single_edge(1), DomainError);
  EXPECT_THROW(single_edge(kMaxUniformity + 1), DomainError);
}

TEST(Generators, Complete) {
  auto k4 = complete_hypergraph(4, 2);
  EXPECT_EQ(serialize_hypergraph(k4), "2 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  auto k63 = complete_hypergraph(6, 3);
  EXPECT_EQ(k63.num_edges(), 20u);
  EXPECT_EQ(k63.max_degree(), 10u);
  EXPECT_TRUE(is_regular(k63));
  EXPECT_THROW(complete_hypergraph(3, 3), DomainError);
  EXPECT_THROW(complete_hypergraph(60, 6), DomainError);
}

TEST(Generators, LoosePath) {
  EXPECT_EQ(serialize_hypergraph(loose_path(3, 2)), "3 5 2\n1 2 3\n3 4 5\n");
  auto h = loose_path(4, 3);
  EXPECT_EQ(h.num_vertices(), 10u);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(diameter(h), 3u);
  EXPECT_THROW(loose_path(2, 3), DomainError);
  EXPECT_THROW(loose_path(3, 0), DomainError);
}

TEST(Generators, Hyperstar) {
  EXPECT_EQ(serialize_hypergraph(hyperstar(3, 2)), "3 5 2\n1 2 3\n1 4 5\n");
  auto h = hyperstar(2, 5);
  EXPECT_EQ(h.num_vertices(), 6u);
  EXPECT_EQ(h.max_degree(), 5u);
  EXPECT_EQ(h.min_degree(), 1u);
  EXPECT_THROW(hyperstar(3, 0), DomainError);
}

TEST(RandomConnected, Validation) {
  EXPECT_THROW(random_connected(3, 4, 1, 0), DomainError);
  EXPECT_THROW(random_connected(7, 3, 2, 0), DomainError);   // below ceil(6/2)
  EXPECT_THROW(random_connected(5, 2, 11, 0), DomainError);  // above C(5,2)
  EXPECT_NO_THROW(random_connected(5, 2, 10, 0));
  EXPECT_NO_THROW(random_connected(7, 3, 3, 0));
}

TEST(RandomConnected, ByteIdenticalAcrossCalls) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    EXPECT_EQ(serialize_hypergraph(random_connected(10, 3, 12, seed)),
              serialize_hypergraph(random_connected(10, 3, 12, seed)));
  }
  EXPECT_NE(serialize_hypergraph(random_connected(10, 3, 12, 1)),
            serialize_hypergraph(random_connected(10, 3, 12, 2)));
}

TEST(RandomConnected, ShapeOverManySeeds) {
  SplitMix64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 2 + rng.uniform(4);
    const std::size_t n = k + rng.uniform(10);
    const std::size_t lo = std::max<std::size_t>(1, min_connected_edges(n, k));
    const std::size_t hi = std::min<std::uint64_t>(binomial_capped(n, k, 40), 40);
    const std::size_t m = rng.uniform_between(lo, std::max(lo, hi));
    auto h = random_connected(n, k, m, rng.next());
    EXPECT_EQ(h.uniformity(), k);
    EXPECT_EQ(h.num_vertices(), n);
    EXPECT_EQ(h.num_edges(), m);
    EXPECT_TRUE(testing::union_find_connected(h));
    std::set<std::vector<Vertex>> distinct;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      auto edge = h.edge(e);
      distinct.emplace(edge.begin(), edge.end());
    }
    EXPECT_EQ(distinct.size(), m);
  }
}

TEST(RandomConnected, DenseRequestHitsEveryEdge) {
  auto h = random_connected(6, 3, 20, 11);
  EXPECT_EQ(h, complete_hypergraph(6, 3));
}

TEST(Family, NamesRoundTrip) {
  for (Family f : {Family::SingleEdge, Family::Complete, Family::LoosePath,
                   Family::Hyperstar, Family::RandomConnected}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_FALSE(family_from_string("cycle").has_value());
}

TEST(GeneratorSpec, Dispatch) {
  GeneratorSpec g;
  g.family = Family::LoosePath;
  g.k = 3;
  g.length = 2;
  EXPECT_EQ(generate(g), loose_path(3, 2));
  g = {};
  g.family = Family::RandomConnected;
  g.n = 8;
  g.k = 2;
  g.m = 9;
  g.seed = 3;
  EXPECT_EQ(generate(g), random_connected(8, 2, 9, 3));
  g = {};
  g.family = Family::Hyperstar;
  g.k = 3;
  EXPECT_THROW(generate(g), DomainError);
}

}  // namespace
}  // namespace hgs
