#include <doctest.h>

#include <algorithm>
#include <set>

#include "interclust/errors.hpp"
#include "interclust/partition.hpp"

using namespace interclust;

TEST_SUITE("partition") {

TEST_CASE("canonical form renumbers blocks by first appearance") {
    Partition p({5, 5, 2, 5});
    CHECK(p.labels() == std::vector<int>{0, 0, 1, 0});
    CHECK(p.num_blocks() == 2);
    CHECK(p.same_block(0, 3));
    CHECK(!p.same_block(0, 2));

    CHECK(Partition({3, 1, 4, 1, 5}) == Partition({0, 1, 2, 1, 3}));
}

TEST_CASE("text format round trip and normalization") {
    Partition p = Partition::parse("0,0,1,0");
    CHECK(p.to_string() == "0,0,1,0");
    CHECK(Partition::parse("7, 7, 3 ,7").to_string() == "0,0,1,0");
    CHECK_THROWS_AS(Partition::parse(""), data_error);
    CHECK_THROWS_AS(Partition::parse("0,x,1"), data_error);
}

TEST_CASE("factories") {
    CHECK(Partition::single_block(4).num_blocks() == 1);
    CHECK(Partition::singletons(4).num_blocks() == 4);
    auto blocks = Partition::parse("0,1,0,2").blocks();
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>{0, 2});
    CHECK(blocks[1] == std::vector<int>{1});
    CHECK(blocks[2] == std::vector<int>{3});
}

TEST_CASE("restriction drops empty blocks and re-canonicalizes") {
    // {{0,1},{2}} restricted to {0,1} is the single block {{0,1}}
    std::vector<int> keep01{0, 1};
    CHECK(Partition::parse("0,0,1").restrict_to(keep01) == Partition::parse("0,0"));

    // {{0,2},{1}} restricted to {1,2} splits into singletons after relabeling
    std::vector<int> keep12{1, 2};
    CHECK(Partition::parse("0,1,0").restrict_to(keep12) == Partition::parse("0,1"));

    CHECK_THROWS_AS(Partition::parse("0,1").restrict_to(std::vector<int>{}), data_error);
}

TEST_CASE("permutation relabels entities") {
    Partition p = Partition::parse("0,0,1");
    std::vector<int> rot{1, 2, 0};  // entity i becomes rot[i]
    CHECK(p.permuted(rot) == Partition::parse("0,1,1"));

    std::vector<int> ident{0, 1, 2};
    CHECK(p.permuted(ident) == p);
}

TEST_CASE("enumeration counts match Stirling and Bell numbers") {
    CHECK(enumerate_partitions(2, 2).size() == 2);
    CHECK(enumerate_partitions(4, 2).size() == 8);    // S(4,1)+S(4,2) = 1+7
    CHECK(enumerate_partitions(4, 4).size() == 15);   // Bell(4)
    CHECK(enumerate_partitions(5, 5).size() == 52);   // Bell(5)
    CHECK(enumerate_partitions(6, 3).size() == 122);  // 1+31+90

    CHECK_THROWS_AS(enumerate_partitions(13, 3), data_error);
    CHECK_THROWS_AS(enumerate_partitions(0, 2), data_error);
}

TEST_CASE("enumeration yields distinct canonical partitions within the bound") {
    auto all = enumerate_partitions(5, 3);
    std::set<std::string> seen;
    for (const auto& p : all) {
        CHECK(p.num_blocks() <= 3);
        CHECK(Partition(p.labels()) == p);  // already canonical
        seen.insert(p.to_string());
    }
    CHECK(seen.size() == all.size());
}

}  // TEST_SUITE
