#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "radixecon/tree.hpp"

using radixecon::BigInt;
using radixecon::TreeSpec;
using radixecon::capacity;

namespace {

// Loop-summation oracle for the closed form used by capacity().
BigInt loop_capacity(const BigInt& node_size, unsigned depth, bool include_root) {
    BigInt sum = include_root ? 1 : 0;
    BigInt level = 1;
    for (unsigned k = 1; k <= depth; ++k) {
        level *= node_size;
        sum += level;
    }
    return sum;
}

}  // namespace

TEST_CASE("capacity of the 39-item example tree") {
    CHECK(capacity({3, 3}, false) == 39);
    CHECK(capacity({3, 3}, true) == 40);
    CHECK(capacity({2, 0}, true) == 1);
    CHECK(capacity({5, 0}, false) == 0);  // empty sum
}

TEST_CASE("capacity rejects node sizes below 2") {
    CHECK_THROWS_AS(capacity({1, 3}, true), std::domain_error);
    CHECK_THROWS_AS(capacity({0, 3}, true), std::domain_error);
    CHECK_THROWS_AS(capacity({3, std::numeric_limits<unsigned>::max()}, true),
                    std::domain_error);
}

TEST_CASE("closed form equals loop summation") {
    for (int m = 2; m <= 10; ++m)
        for (unsigned d = 0; d <= 12; ++d) {
            CHECK(capacity({m, d}, true) == loop_capacity(m, d, true));
            CHECK(capacity({m, d}, false) == loop_capacity(m, d, false));
        }
}

TEST_CASE("root flag changes the count by exactly one") {
    for (int m = 2; m <= 10; ++m)
        for (unsigned d = 0; d <= 12; ++d)
            CHECK(capacity({m, d}, true) - capacity({m, d}, false) == 1);
}

TEST_CASE("capacity stays exact far beyond machine words") {
    CHECK(capacity({2, 200}, true) == radixecon::BigInt(pow(BigInt(2), 201) - 1));
}

TEST_CASE("depth_for inverts capacity") {
    CHECK(radixecon::depth_for(40, 3) == 3);
    for (int m : {2, 3, 7, 10})
        CHECK(radixecon::depth_for(1, m) == 0);

    // brute force: 41 items no longer fit at depth 3, but do at depth 4
    CHECK(capacity({3, 3}, true) == 40);
    CHECK(capacity({3, 4}, true) == 121);
    CHECK(radixecon::depth_for(41, 3) == 4);
}

TEST_CASE("depth_for returns minimal sufficient depth on every boundary") {
    for (int m = 2; m <= 10; ++m)
        for (unsigned d = 0; d <= 12; ++d) {
            BigInt packed = capacity({m, d}, true);
            CHECK(radixecon::depth_for(packed, m) == d);
            CHECK(radixecon::depth_for(packed + 1, m) == d + 1);
        }
}

TEST_CASE("depth_for rejects empty collections and bad node sizes") {
    CHECK_THROWS_AS(radixecon::depth_for(0, 3), std::domain_error);
    CHECK_THROWS_AS(radixecon::depth_for(-7, 3), std::domain_error);
    CHECK_THROWS_AS(radixecon::depth_for(40, 1), std::domain_error);
}
