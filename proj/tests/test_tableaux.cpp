#include <catch2/catch_amalgamated.hpp>

#include <domino/domino.hpp>

#include "support/oracles.hpp"

using namespace domino;

namespace {

// Independent SDT count: remove the domino holding the largest entry.
domino::BigInt sdt_count_recursive(const Partition& big, const Partition& small) {
    if (big == small) return 1;
    BigInt acc = 0;
    for (const Domino& d : small.addable_dominoes()) {
        // Count by the smallest entry instead: every SDT starts with some
        // domino added to the inner shape.
        if (!big.contains_cell(d.anchor) || !big.contains_cell(d.second())) continue;
        acc += sdt_count_recursive(big, small.with_domino(d));
    }
    return acc;
}

}  // namespace

TEST_CASE("chain tableau parsing and entries") {
    ChainTableau t = ChainTableau::parse(TableauKind::sdt, "0:2:2,2");
    CHECK(t.kind() == TableauKind::sdt);
    CHECK(t.size() == 2);
    CHECK(t.base().empty());
    CHECK(t.outer() == Partition{2, 2});
    CHECK(t.chain_str() == "0:2:2,2");

    std::map<Cell, int> e = t.entries();
    CHECK(e == std::map<Cell, int>{{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 2}, {{2, 2}, 2}});
    CHECK(t.domino_of(1) == Domino{{1, 1}, Orientation::horizontal});
    CHECK(t.domino_of(2) == Domino{{2, 1}, Orientation::horizontal});

    ChainTableau s = ChainTableau::parse(TableauKind::syt, "1:1,1:2,1");
    CHECK(s.size() == 2);
    CHECK(s.base() == Partition{1});
    CHECK(s.entries() == std::map<Cell, int>{{{1, 2}, 2}, {{2, 1}, 1}});

    CHECK(ChainTableau::empty(TableauKind::syt, Partition{2, 1}).size() == 0);

    // Steps must add one cell (syt) or one domino (sdt).
    CHECK_THROWS_AS(ChainTableau::parse(TableauKind::syt, "0:2"), std::invalid_argument);
    CHECK_THROWS_AS(ChainTableau::parse(TableauKind::sdt, "0:1"), std::invalid_argument);
    CHECK_THROWS_AS(ChainTableau::parse(TableauKind::sdt, "0:1,1:2,1"), std::invalid_argument);  // one-cell step
    CHECK_THROWS_AS(ChainTableau::parse(TableauKind::sdt, "0:3"), std::invalid_argument);        // three-cell step
    CHECK_THROWS_AS(ChainTableau::parse(TableauKind::sdt, "1:2,1"), std::invalid_argument);      // disconnected pair
}

TEST_CASE("standard tableau counts match the hook length formula") {
    for (int n = 0; n <= 9; ++n)
        for (const Partition& la : partitions_of(n)) {
            INFO(la.str());
            CHECK(BigInt(syt_count(SkewShape(la))) == oracles::hook_length_count(la));
        }
}

TEST_CASE("skew tableau counts match brute enumeration") {
    for (int n = 0; n <= 7; ++n)
        for (const Partition& big : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& small : partitions_inside(big, k)) {
                    SkewShape s(big, small);
                    INFO(s.str());
                    long long fillings = 0;
                    oracles::enumerate_fillings(big, small, [&](const std::vector<int>&) { ++fillings; });
                    CHECK(syt_count(s) == fillings);
                    CHECK(syt_count(s) == static_cast<long long>(enumerate_tableaux(s, TableauKind::syt).size()));
                    CHECK(BigInt(sdt_count(s)) == sdt_count_recursive(big, small));
                    CHECK(sdt_count(s) == static_cast<long long>(enumerate_tableaux(s, TableauKind::sdt).size()));
                }
}

TEST_CASE("domino statistics and spin") {
    ChainTableau hh = ChainTableau::parse(TableauKind::sdt, "0:2:2,2");
    CHECK(sdt_stats(hh) == SdtStats{1, 1, 0, 0});
    ChainTableau vv = ChainTableau::parse(TableauKind::sdt, "0:1,1:2,2");
    CHECK(sdt_stats(vv) == SdtStats{0, 0, 1, 1});
    CHECK(sdt_stats(vv).sp2() == 2);
    CHECK_THROWS_AS(sdt_stats(ChainTableau::parse(TableauKind::syt, "0:1")), std::invalid_argument);

    CHECK(spin_polynomial(SkewShape(Partition{2, 2})).str() == "1 + q");
    CHECK(spin_polynomial(SkewShape(Partition{1, 1})).str() == "q^1/2");
    CHECK(spin_polynomial(SkewShape(Partition{3, 1})).str() == "q^1/2");
    CHECK(spin_polynomial(SkewShape(Partition{2})).str() == "1");

    // The polynomial tallies q^spin over all SDTs, and q = 1 counts them.
    for (int n = 0; n <= 8; n += 2)
        for (const Partition& big : partitions_of(n))
            for (int k = 0; k <= n; k += 2)
                for (const Partition& small : partitions_inside(big, k)) {
                    SkewShape s(big, small);
                    LaurentPoly expect;
                    for (const ChainTableau& t : enumerate_tableaux(s, TableauKind::sdt)) {
                        SdtStats st = sdt_stats(t);
                        CHECK(st.oh + st.eh + st.ov + st.ev == s.size() / 2);
                        expect = expect + LaurentPoly::var_pow(kVarQ, st.sp2(), 2);
                    }
                    LaurentPoly got = spin_polynomial(s);
                    INFO(s.str());
                    CHECK(got.str() == expect.str());
                    CHECK(got.eval(GaussInt{1}, GaussInt{1}, GaussInt{1}, GaussInt{1}) ==
                          GaussInt{BigInt(sdt_count(s))});
                }
}

TEST_CASE("tableau signs under both conventions") {
    // One domino tableau of shape 2,2/1,1: a vertical domino in column 2.
    ChainTableau v = ChainTableau::parse(TableauKind::sdt, "1,1:2,2");
    CHECK(tableau_sign(v, SignConvention::book) == 1);
    CHECK(tableau_sign(v, SignConvention::relative) == -1);

    CHECK(sign_shift_exponent(Partition{2, 2}, Partition{1, 1}) == 1);
    CHECK(sign_shift_exponent(Partition{4, 3, 1}, Partition{2}) == 0);
    CHECK(sign_shift_exponent(Partition{3, 3, 3}, Partition{2, 2}) == 2);

    // Straight shapes: both conventions coincide.
    for (const Partition& la : partitions_of(5))
        for (const ChainTableau& t : enumerate_tableaux(SkewShape(la), TableauKind::syt))
            CHECK(tableau_sign(t, SignConvention::book) == tableau_sign(t, SignConvention::relative));

    // Signed sums against reading-word and definitional oracles.
    for (int n = 0; n <= 7; ++n)
        for (const Partition& big : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& small : partitions_inside(big, k)) {
                    SkewShape s(big, small);
                    BigInt book = 0, rel = 0;
                    for (const ChainTableau& t : enumerate_tableaux(s, TableauKind::syt)) {
                        book += tableau_sign(t, SignConvention::book);
                        rel += tableau_sign(t, SignConvention::relative);
                    }
                    INFO(s.str());
                    CHECK(book == oracles::brute_book_sign_sum(big, small));
                    CHECK(rel == oracles::brute_relative_sign_sum(big, small));
                }
}

TEST_CASE("signed tableau counts agree between cells and dominoes") {
    // For every even skew shape the signed count of standard tableaux
    // equals the domino tableau sum weighted by vertical dominoes in
    // even columns.
    for (int n = 0; n <= 8; n += 2)
        for (const Partition& big : partitions_of(n))
            for (int k = 0; k <= n; k += 2)
                for (const Partition& small : partitions_inside(big, k)) {
                    SkewShape s(big, small);
                    BigInt syt_sum = 0;
                    for (const ChainTableau& t : enumerate_tableaux(s, TableauKind::syt))
                        syt_sum += tableau_sign(t, SignConvention::relative);
                    BigInt sdt_sum = 0;
                    for (const ChainTableau& t : enumerate_tableaux(s, TableauKind::sdt))
                        sdt_sum += sdt_stats(t).ev % 2 == 0 ? 1 : -1;
                    INFO(s.str());
                    CHECK(syt_sum == sdt_sum);
                }
}

TEST_CASE("tableau concatenation") {
    ChainTableau a = ChainTableau::parse(TableauKind::syt, "0:1:2");
    ChainTableau b = ChainTableau::parse(TableauKind::syt, "2:2,1:2,2");
    ChainTableau c = concat(a, b);
    CHECK(c.size() == 4);
    CHECK(c.base().empty());
    CHECK(c.outer() == Partition{2, 2});
    CHECK(c.entries() == std::map<Cell, int>{{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 3}, {{2, 2}, 4}});

    CHECK_THROWS_AS(concat(b, a), std::invalid_argument);  // shapes do not meet
    ChainTableau d = ChainTableau::parse(TableauKind::sdt, "2:2,2");
    CHECK_THROWS_AS(concat(a, d), std::invalid_argument);  // mixed kinds
}
