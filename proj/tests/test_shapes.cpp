#include <catch2/catch_amalgamated.hpp>

#include <domino/domino.hpp>

#include "support/oracles.hpp"

using namespace domino;

TEST_CASE("partition parsing and canonical form") {
    Partition p = Partition::parse("4,3,1");
    CHECK(p.str() == "4,3,1");
    CHECK(p.size() == 8);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(7) == 0);

    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("0").empty());
    CHECK(Partition{}.str() == "0");
    CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));

    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,a"), std::invalid_argument);
}

TEST_CASE("partition cell geometry") {
    Partition p{2, 1};
    CHECK(p.contains_cell({1, 2}));
    CHECK_FALSE(p.contains_cell({2, 2}));
    CHECK(p.col_height(1) == 2);
    CHECK(p.col_height(2) == 1);
    CHECK(p.col_height(3) == 0);

    std::vector<Cell> addable = p.addable_cells();
    CHECK(addable == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(p.with_cell({2, 2}) == Partition{2, 2});
    CHECK_THROWS_AS(p.with_cell({1, 2}), std::invalid_argument);

    CHECK(diff_cells(Partition{2, 2}, Partition{1, 1}) == std::vector<Cell>{{1, 2}, {2, 2}});
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
}

TEST_CASE("partition enumeration counts") {
    // Number of partitions of n for n = 0..10.
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));

    // Containment-constrained enumerations agree with direct filters.
    auto containing = partitions_containing(Partition{2, 1}, 6);
    for (const Partition& la : partitions_of(6)) {
        bool expect = la.contains(Partition{2, 1});
        bool found = std::find(containing.begin(), containing.end(), la) != containing.end();
        CHECK(found == expect);
    }
    for (int total = 0; total <= 5; ++total) {
        auto inside = partitions_inside(Partition{3, 2}, total);
        for (const Partition& mu : partitions_of(total)) {
            bool expect = Partition{3, 2}.contains(mu);
            bool found = std::find(inside.begin(), inside.end(), mu) != inside.end();
            CHECK(found == expect);
        }
    }
}

TEST_CASE("two_core matches the beta-number computation") {
    CHECK(two_core(Partition{}) == Partition{});
    CHECK(two_core(Partition{1}) == Partition{1});
    CHECK(two_core(Partition{3, 2}) == Partition{1});
    CHECK(two_core(Partition{2, 1}) == Partition{2, 1});
    CHECK(two_core(Partition{4, 3, 1}) == Partition{});

    for (int n = 0; n <= 10; ++n)
        for (const Partition& la : partitions_of(n)) {
            INFO(la.str());
            CHECK(two_core(la) == oracles::beta_two_core(la));
        }
}

TEST_CASE("domino tileability matches brute-force placement") {
    // Balanced but untileable.
    CHECK_FALSE(is_domino_tileable(SkewShape(Partition{3, 1}, Partition{2})));
    CHECK(is_domino_tileable(SkewShape(Partition{2, 2})));
    CHECK(is_domino_tileable(SkewShape(Partition{3, 1})));

    for (int n = 2; n <= 8; ++n)
        for (const Partition& big : partitions_of(n))
            for (int k = 0; k < n; ++k)
                for (const Partition& small : partitions_inside(big, k)) {
                    SkewShape s(big, small);
                    INFO(s.str());
                    CHECK(is_domino_tileable(s) == oracles::brute_tileable(big, small));
                }
}

TEST_CASE("skew shape orientation and parsing") {
    SkewShape s = SkewShape::parse("4,3,1/2");
    CHECK(s.outer() == Partition{4, 3, 1});
    CHECK(s.inner() == Partition{2});
    CHECK_FALSE(s.reversed());
    CHECK(s.str() == "4,3,1/2");
    CHECK(s.size() == 6);

    SkewShape r = SkewShape::parse("1,1/2,2");
    CHECK(r.reversed());
    CHECK(r.big() == Partition{2, 2});
    CHECK(r.small() == Partition{1, 1});
    CHECK(r.size() == -2);
    CHECK(r.flipped().outer() == Partition{2, 2});
    CHECK_FALSE(r.flipped().reversed());

    CHECK(SkewShape::parse("3,1").inner().empty());
    CHECK_THROWS_AS(SkewShape::parse("3,1/2,2"), std::invalid_argument);  // incomparable
}

TEST_CASE("skew shape statistics") {
    // Cells in even rows / even columns / both, negated on reversed shapes.
    CHECK(SkewShape::parse("2,2").stats() == ShapeStats{4, 2, 2, 1});
    CHECK(SkewShape::parse("2,2/2").stats() == ShapeStats{2, 2, 1, 1});
    CHECK(SkewShape::parse("2,2/1,1").stats() == ShapeStats{2, 1, 2, 1});
    CHECK(SkewShape::parse("2,2/2,2").stats() == ShapeStats{0, 0, 0, 0});
    CHECK(SkewShape::parse("1,1/2,2").stats() == ShapeStats{-2, -1, -2, -1});
    CHECK(SkewShape::parse("0/2,2").stats() == ShapeStats{-4, -2, -2, -1});

    // Stats of a flip differ only in sign.
    for (const Partition& big : partitions_of(5))
        for (int k = 0; k <= 3; ++k)
            for (const Partition& small : partitions_inside(big, k)) {
                ShapeStats a = SkewShape(big, small).stats();
                ShapeStats b = SkewShape(small, big).stats();
                CHECK(b == ShapeStats{-a.size, -a.v, -a.h, -a.d});
            }
}

TEST_CASE("staircases and their one-cell extensions") {
    CHECK(staircase(0) == Partition{});
    CHECK(staircase(3) == Partition{3, 2, 1});

    CHECK(staircase_with_cell(2, 0) == Partition{2, 1, 1});
    CHECK(staircase_with_cell(2, 1) == Partition{2, 2});
    CHECK(staircase_with_cell(2, 2) == Partition{3, 1});
    CHECK_THROWS_AS(staircase_with_cell(2, 3), std::invalid_argument);

    for (int k = 0; k <= 5; ++k)
        for (int i = 0; i <= k; ++i) {
            Partition p = staircase_with_cell(k, i);
            CHECK(p.size() == staircase(k).size() + 1);
            CHECK(p.contains(staircase(k)));
        }
}

TEST_CASE("covers lists one-cell extensions with row weights") {
    auto cov = covers(Partition{2, 1});
    REQUIRE(cov.size() == 3);
    CHECK(cov[0].first == Partition{3, 1});
    CHECK(cov[0].second == 1);
    CHECK(cov[1].first == Partition{2, 2});
    CHECK(cov[1].second == 0);
    CHECK(cov[2].first == Partition{2, 1, 1});
    CHECK(cov[2].second == 0);

    // The weight is the number of cells strictly below the added cell.
    for (const Partition& a : partitions_of(6))
        for (const auto& [b, u] : covers(a)) {
            CHECK(b.size() == a.size() + 1);
            Cell added = diff_cells(b, a).at(0);
            int below = 0;
            for (int r = added.row + 1; r <= a.length(); ++r) below += a.part(r);
            CHECK(u == below);
        }
}

TEST_CASE("partition chains parse and print") {
    std::vector<Partition> chain = parse_partition_chain("0:1:2:2,1");
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].empty());
    CHECK(chain[3] == Partition{2, 1});
    CHECK(partition_chain_str(chain) == "0:1:2:2,1");
}
