#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "qgverify/counting.hpp"
#include "qgverify/enumerate.hpp"
#include "qgverify/partition.hpp"

using qgv::FamilyKind;
using qgv::Partition;

namespace {

std::vector<std::string> encodings(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.encode());
    return out;
}

}  // namespace

TEST_CASE("counting recursions match frozen reference values") {
    const long catalan_ref[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int m = 0; m <= 8; ++m) REQUIRE(qgv::catalan(m) == catalan_ref[m]);

    const long motzkin_ref[] = {1,    1,    2,     4,     9,     21,    51,   127,
                                323,  835,  2188,  5798,  15511, 41835, 113634};
    for (int n = 0; n <= 14; ++n) REQUIRE(qgv::motzkin(n) == motzkin_ref[n]);

    const long bell_ref[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 0; n <= 10; ++n) REQUIRE(qgv::bell(n) == bell_ref[n]);

    const long df_ref[] = {1, 1, 3, 15, 105, 945, 10395};
    for (int m = 0; m <= 6; ++m) REQUIRE(qgv::double_factorial_odd(m) == df_ref[m]);

    REQUIRE(qgv::factorial(6) == 720);
}

TEST_CASE("enumerate: spec examples") {
    auto nc2_0 = qgv::enumerate(FamilyKind::nc2(), 0);
    REQUIRE(nc2_0.size() == 1);
    REQUIRE(nc2_0[0].encode() == "");

    auto nc2_4 = qgv::enumerate(FamilyKind::nc2(), 4);
    REQUIRE(encodings(nc2_4) == std::vector<std::string>{"12|34", "14|23"});

    REQUIRE(qgv::enumerate(FamilyKind::p2(), 6).size() == 15);
    REQUIRE(qgv::enumerate(FamilyKind::nc21(), 4).size() == 9);
    REQUIRE(qgv::enumerate(FamilyKind::set_partitions(), 4).size() == 15);
    REQUIRE(qgv::enumerate(FamilyKind::evenodd_all(), 6).size() == 6);

    REQUIRE(qgv::enumerate(FamilyKind::nc2(), 3).empty());
    REQUIRE(qgv::enumerate(FamilyKind::p2(), 5).empty());
}

TEST_CASE("enumerate matches brute-force filters elementwise") {
    for (int k = 0; k <= 8; ++k) {
        auto nc2 = encodings(qgv::enumerate(FamilyKind::nc2(), k));
        auto nc2_ref = oracle::filtered_encodings(k, oracle::all_blocks_pairs, true);
        REQUIRE(std::set<std::string>(nc2.begin(), nc2.end()) == nc2_ref);
        REQUIRE(nc2.size() == nc2_ref.size());

        auto p2 = encodings(qgv::enumerate(FamilyKind::p2(), k));
        auto p2_ref = oracle::filtered_encodings(k, oracle::all_blocks_pairs, false);
        REQUIRE(std::set<std::string>(p2.begin(), p2.end()) == p2_ref);
        REQUIRE(p2.size() == p2_ref.size());

        auto nc21 = encodings(qgv::enumerate(FamilyKind::nc21(), k));
        auto nc21_ref = oracle::filtered_encodings(k, oracle::blocks_at_most_pairs, true);
        REQUIRE(std::set<std::string>(nc21.begin(), nc21.end()) == nc21_ref);
        REQUIRE(nc21.size() == nc21_ref.size());

        auto eo = encodings(qgv::enumerate(FamilyKind::evenodd_all(), k));
        auto eo_ref = oracle::filtered_encodings(
            k,
            [](const oracle::Blocks& b) {
                return oracle::all_blocks_pairs(b) && oracle::even_odd_only(b);
            },
            false);
        REQUIRE(std::set<std::string>(eo.begin(), eo.end()) == eo_ref);
        REQUIRE(eo.size() == eo_ref.size());

        auto sp = qgv::enumerate(FamilyKind::set_partitions(), k);
        REQUIRE(sp.size() == oracle::all_set_partitions(k).size());
    }
}

TEST_CASE("enumeration counts match counting recursions") {
    for (int m = 0; 2 * m <= 16; ++m)
        REQUIRE(qgv::enumerate(FamilyKind::nc2(), 2 * m).size() == qgv::catalan(m));
    for (int k = 0; k <= 12; ++k)
        REQUIRE(qgv::enumerate(FamilyKind::nc21(), k).size() == qgv::motzkin(k));
    for (int m = 0; 2 * m <= 10; ++m)
        REQUIRE(qgv::enumerate(FamilyKind::p2(), 2 * m).size() == qgv::double_factorial_odd(m));
    for (int k = 0; k <= 8; ++k)
        REQUIRE(qgv::enumerate(FamilyKind::set_partitions(), k).size() == qgv::bell(k));
    for (int m = 0; 2 * m <= 10; ++m)
        REQUIRE(qgv::enumerate(FamilyKind::evenodd_all(), 2 * m).size() == qgv::factorial(m));
}

TEST_CASE("NC21_S slices: sum property and s=0 slice") {
    for (int k = 0; k <= 10; ++k) {
        size_t total = 0;
        for (int s = k % 2; s <= k; s += 2)
            total += qgv::enumerate(FamilyKind::nc21_s(s), k).size();
        REQUIRE(total == qgv::enumerate(FamilyKind::nc21(), k).size());
        if (k % 2 == 0) {
            auto s0 = encodings(qgv::enumerate(FamilyKind::nc21_s(0), k));
            auto nc2 = encodings(qgv::enumerate(FamilyKind::nc2(), k));
            REQUIRE(s0 == nc2);
        }
    }
}

TEST_CASE("even-odd non-crossing pairings coincide with NC2") {
    for (int k = 0; k <= 12; k += 2) {
        auto eo = encodings(qgv::enumerate(FamilyKind::evenodd_nc(), k));
        auto nc2 = encodings(qgv::enumerate(FamilyKind::nc2(), k));
        REQUIRE(eo == nc2);
    }
}

TEST_CASE("colored enumeration") {
    auto one_pair = qgv::colorings(Partition::parse(2, "12"), 2);
    REQUIRE(one_pair.size() == 2);
    REQUIRE(one_pair[0].encode() == "12:1");
    REQUIRE(one_pair[1].encode() == "12:2");
    REQUIRE(qgv::colorings(Partition::parse(4, "12|34"), 2).size() == 4);
    REQUIRE(qgv::colorings(Partition::parse(6, "12|34|56"), 2).size() == 8);

    auto colored = qgv::enumerate(FamilyKind::colored_nc2(2), 4);
    REQUIRE(colored.size() == 8);
    REQUIRE(colored[0].encode() == "12:1|34:1");
    for (const auto& p : colored) REQUIRE(p.colored());
}

TEST_CASE("is_noncrossing: examples and brute-force agreement") {
    REQUIRE(qgv::is_noncrossing(Partition::parse(4, "12|34")));
    REQUIRE_FALSE(qgv::is_noncrossing(Partition::parse(4, "13|24")));
    REQUIRE(qgv::is_noncrossing(Partition::parse(3, "13|2")));

    for (int k = 0; k <= 7; ++k) {
        for (const auto& blocks : oracle::all_set_partitions(k)) {
            auto p = Partition::of_blocks(k, blocks);
            REQUIRE(qgv::is_noncrossing(p) == !oracle::crossing_free(blocks, k));
        }
    }
}

TEST_CASE("join_block_count: examples, symmetry, self-join") {
    auto p12 = Partition::parse(2, "12");
    REQUIRE(qgv::join_block_count(p12, p12) == 1);

    auto a = Partition::parse(4, "12|34");
    auto b = Partition::parse(4, "14|23");
    REQUIRE(qgv::join_block_count(a, b) == 1);
    REQUIRE(qgv::join_block_count(b, b) == 2);

    auto sp6 = qgv::enumerate(FamilyKind::set_partitions(), 6);
    for (size_t i = 0; i < sp6.size(); i += 7)
        for (size_t j = 0; j < sp6.size(); j += 11)
            REQUIRE(qgv::join_block_count(sp6[i], sp6[j]) ==
                    qgv::join_block_count(sp6[j], sp6[i]));

    for (const auto& p : qgv::enumerate(FamilyKind::p2(), 8))
        REQUIRE(qgv::join_block_count(p, p) == static_cast<int>(p.block_count()));
}

TEST_CASE("enumeration is deterministic") {
    for (auto kind : {FamilyKind::nc2(), FamilyKind::nc21(), FamilyKind::p2(),
                      FamilyKind::set_partitions(), FamilyKind::colored_nc2(2)}) {
        auto a = encodings(qgv::enumerate(kind, 6));
        auto b = encodings(qgv::enumerate(kind, 6));
        REQUIRE(a == b);
        REQUIRE(std::set<std::string>(a.begin(), a.end()).size() == a.size());
    }
}

TEST_CASE("encode/parse round trip, including k > 9 and colors") {
    for (int k : {0, 5, 9, 12}) {
        for (const auto& p : qgv::enumerate(FamilyKind::nc21(), std::min(k, 9))) {
            auto q = Partition::parse(p.points(), p.encode());
            REQUIRE(q == p);
        }
    }
    auto big = Partition::of_blocks(12, {{1, 10}, {2, 3}, {4, 9}, {5, 6}, {7, 8}, {11, 12}});
    REQUIRE(big.encode() == "1,10|2,3|4,9|5,6|7,8|11,12");
    REQUIRE(Partition::parse(12, big.encode()) == big);

    auto col = Partition::of_blocks(4, {{1, 2}, {3, 4}}, {2, 1});
    REQUIRE(col.encode() == "12:2|34:1");
    REQUIRE(Partition::parse(4, col.encode()) == col);
}

TEST_CASE("parameter errors") {
    REQUIRE_THROWS_AS(qgv::enumerate(FamilyKind::nc21_s(5), 4), std::invalid_argument);
    REQUIRE_THROWS_AS(qgv::enumerate(FamilyKind::nc21_s(1), 4), std::invalid_argument);
    REQUIRE_THROWS_AS(qgv::enumerate(FamilyKind::colored_nc2(0), 4), std::invalid_argument);
    REQUIRE_THROWS_AS(qgv::enumerate(FamilyKind::nc2(), -1), std::invalid_argument);
    REQUIRE_THROWS_AS(qgv::colorings(Partition::parse(2, "12"), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(
        qgv::join_block_count(Partition::parse(2, "12"), Partition::parse(4, "12|34")),
        std::invalid_argument);
    REQUIRE_THROWS_AS(Partition::of_blocks(3, {{1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Partition::of_blocks(2, {{1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("family kind names parse back") {
    for (auto kind :
         {FamilyKind::nc2(), FamilyKind::p2(), FamilyKind::nc21(), FamilyKind::nc21_s(2),
          FamilyKind::set_partitions(), FamilyKind::evenodd_nc(), FamilyKind::evenodd_all(),
          FamilyKind::colored_nc2(3)})
        REQUIRE(FamilyKind::parse(kind.name()) == kind);
    REQUIRE_THROWS_AS(FamilyKind::parse("nope"), std::invalid_argument);
}
