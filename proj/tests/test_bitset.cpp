#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zdk/bitset.hpp"

using zdk::Bitset;

TEST(Bitset, BasicOps) {
    Bitset b(130);
    EXPECT_EQ(b.width(), 130u);
    EXPECT_TRUE(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_EQ(b.count(), 3u);
    EXPECT_TRUE(b.test(64));
    EXPECT_FALSE(b.test(63));
    b.reset(64);
    EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 129}));
    EXPECT_EQ(b.next(1), 129u);
    EXPECT_EQ(b.next(130), 130u);
}

TEST(Bitset, FullAndComplementRespectWidth) {
    const Bitset f = Bitset::full(70);
    EXPECT_EQ(f.count(), 70u);
    EXPECT_TRUE(f.complement().none());
    Bitset b(70);
    b.set(3);
    EXPECT_EQ(b.complement().count(), 69u);
}

TEST(Bitset, MatchesStdSetOnRandomOps) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const std::size_t w = 1 + rng() % 200;
        Bitset a(w), b(w);
        std::set<std::size_t> sa, sb;
        for (int i = 0; i < 40; ++i) {
            const std::size_t x = rng() % w, y = rng() % w;
            a.set(x);
            sa.insert(x);
            b.set(y);
            sb.insert(y);
        }
        std::set<std::size_t> inter, uni;
        for (auto x : sa)
            if (sb.count(x)) inter.insert(x);
        uni = sa;
        uni.insert(sb.begin(), sb.end());

        EXPECT_EQ(a.count_and(b), inter.size());
        EXPECT_EQ((a & b).count(), inter.size());
        EXPECT_EQ((a | b).count(), uni.size());
        EXPECT_EQ(a.intersects(b), !inter.empty());
        EXPECT_EQ(a.is_subset_of(a | b), true);
        EXPECT_EQ(a.is_subset_of(b), inter.size() == sa.size());
        Bitset d = a;
        d.subtract(b);
        EXPECT_EQ(d.count(), sa.size() - inter.size());
        std::vector<std::size_t> got;
        a.for_each([&](std::size_t i) { got.push_back(i); });
        EXPECT_EQ(got, std::vector<std::size_t>(sa.begin(), sa.end()));
    }
}
