#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "ordpath/tower.hpp"

using namespace ordpath;

TEST_CASE("ramsey_upper_k3 hand-evaluated towers") {
    // q * q * (2q(N-3)+1), right-nested exponentiation
    CHECK(ramsey_upper_k3(1, 4).value == 1);
    CHECK(ramsey_upper_k3(2, 3).value == 4);          // 2^(2^1)
    CHECK(ramsey_upper_k3(2, 4).value == BigInt("4294967296"));  // 2^(2^5)
    CHECK(ramsey_upper_k3(3, 3).value == 27);  // levels 3,3,1: 3^(3^1)
}

TEST_CASE("ramsey_upper general form") {
    // k=3: q * (q^2) * (q(N-3)+1)
    CHECK(ramsey_upper(1, 4, 3).value == 1);
    CHECK(ramsey_upper(2, 3, 3).value == 16);  // 2^(4^1)
    // k=4, q=2, N=4: levels 2, 8, 4, 1 -> 2^(8^(4^1)) = 2^4096
    TowerValue v = ramsey_upper(2, 4, 4);
    REQUIRE(v.exact);
    CHECK(bit_length(v.value) == 4097);
    CHECK_THROWS_AS(ramsey_upper(0, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_upper(2, 2, 3), std::invalid_argument);
}

TEST_CASE("tower monotonicity in q and N") {
    BigInt prev = 0;
    for (long long q = 1; q <= 4; ++q) {
        BigInt v = ramsey_upper_k3(q, 4).value;
        CHECK(v >= prev);
        prev = v;
    }
    prev = 0;
    for (long long n = 3; n <= 6; ++n) {
        BigInt v = ramsey_upper_k3(2, n).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("budget exhaustion flags an estimate") {
    TowerBudget tiny{64};
    TowerValue v = ramsey_upper_k3(2, 10, tiny);  // 2^(2^29)
    CHECK_FALSE(v.exact);
    REQUIRE(v.bit_length.has_value());
    // value < 2^(2^29 * bitlen(2)); the estimate is that exponent bound
    CHECK(*v.bit_length == BigInt(1ll << 29) * 2);
}

TEST_CASE("s_from_n exact evaluation and monotonicity") {
    CHECK(s_from_n(BigInt(2), 1) == 0);
    CHECK(s_from_n(BigInt("100000000000000000000"), 1) == 0);
    // monotone in n
    int prev = 0;
    for (long long bits : {1, 64, 1024, 100000}) {
        int s = s_from_bitlength(bits, 1);
        CHECK(s >= prev);
        prev = s;
    }
    // non-increasing in t
    CHECK(s_from_bitlength(1024, 1) >= s_from_bitlength(1024, 5));
    CHECK_THROWS_AS(s_from_n(BigInt(0), 1), std::invalid_argument);
}

TEST_CASE("s_from_n at bit-length one million runs in under a second") {
    auto t0 = std::chrono::steady_clock::now();
    int s = s_from_bitlength(1000000, 2);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(s == 0);  // the tower at s = 1 already has ~10^42000 bits
    CHECK(ms < 1000);
}

TEST_CASE("eval_tower conventions") {
    CHECK(eval_tower({BigInt(5)}).value == 5);
    CHECK(eval_tower({BigInt(0), BigInt(0)}).value == 1);  // 0^0 = 1
    CHECK(eval_tower({BigInt(0), BigInt(3)}).value == 0);
    CHECK(eval_tower({BigInt(1), BigInt(100)}).value == 1);
    CHECK(eval_tower({BigInt(7), BigInt(0)}).value == 1);  // 7^0
    CHECK(eval_tower({BigInt(2), BigInt(3), BigInt(2)}).value == 512);  // 2^(3^2)
}
