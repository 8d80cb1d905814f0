#include "mexp/fpcore.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace mexp;

namespace {

// Pascal's triangle with exact 64-bit entries; C(64, 32) still fits.
std::vector<std::vector<unsigned __int128>> pascal(std::size_t n) {
    std::vector<std::vector<unsigned __int128>> rows(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        rows[m].assign(m + 1, 1);
        for (std::size_t j = 1; j < m; ++j) rows[m][j] = rows[m - 1][j - 1] + rows[m - 1][j];
    }
    return rows;
}

}  // namespace

TEST_CASE("digits") {
    CHECK(digits(16, Prime(3)) == DigitVector{1, 2, 1});
    CHECK(digits(0, Prime(5)).empty());
    CHECK(digits(41, Prime(3)) == DigitVector{2, 1, 1, 1});
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t m = 0; m < 500; ++m) CHECK(from_digits(digits(m, Prime(p)), Prime(p)) == m);
    }
}

TEST_CASE("s_index") {
    CHECK(s_index(16, Prime(3)) == 0);
    CHECK(s_index(12, Prime(3)) == 1);
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t k = 0; k < 10; ++k) CHECK(s_index(*checked_pow(p, k), Prime(p)) == k);
    }
}

TEST_CASE("binom_mod_p matches exact binomials") {
    CHECK(binom_mod_p(16, 3, Prime(3)).value() == 2);
    CHECK(binom_mod_p(16, 2, Prime(3)).value() == 0);
    CHECK(binom_mod_p(5, -1, Prime(3)).value() == 0);
    CHECK(binom_mod_p(5, 6, Prime(3)).value() == 0);
    const auto rows = pascal(64);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t m = 0; m <= 64; ++m) {
            CHECK(binom_mod_p(m, 0, Prime(p)).value() == 1);
            for (std::uint64_t j = 0; j <= m; ++j) {
                REQUIRE(binom_mod_p(m, static_cast<std::int64_t>(j), Prime(p)).value() ==
                        static_cast<std::uint32_t>(rows[m][j] % p));
            }
        }
    }
}

TEST_CASE("g_set") {
    CHECK(g_set(16, Prime(3)) == std::vector<std::uint64_t>{0, 1, 3, 4, 6, 7, 9, 10, 12, 13, 15, 16});
    CHECK(g_set(4, Prime(2)) == std::vector<std::uint64_t>{0, 4});
    CHECK(g_set(4, Prime(3)) == std::vector<std::uint64_t>{0, 1, 3, 4});
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t m = 0; m <= 60; ++m) {
            const auto g = g_set(m, Prime(p));
            std::vector<std::uint64_t> want;
            for (std::uint64_t j = 0; j <= m; ++j) {
                if (!binom_mod_p(m, static_cast<std::int64_t>(j), Prime(p)).is_zero()) want.push_back(j);
            }
            CHECK(g == want);
            // Symmetric under g -> m - g.
            for (std::uint64_t x : g) CHECK(std::binary_search(g.begin(), g.end(), m - x));
        }
    }
}

TEST_CASE("Fp arithmetic") {
    const Prime p(7);
    CHECK(Fp::from_signed(-1, p).value() == 6);
    CHECK((Fp(3, p) * Fp(5, p)).value() == 1);
    CHECK(Fp(3, p).inverse() == Fp(5, p));
    CHECK_THROWS_AS(Fp(0, p).inverse(), std::domain_error);
    CHECK(Fp(2, p).pow(6).value() == 1);
    CHECK_THROWS(Prime(4));
    CHECK_THROWS(Prime(1));
}

TEST_CASE("checked_pow and log_of_power") {
    CHECK(checked_pow(3, 3) == 27u);
    CHECK_FALSE(checked_pow(2, 64).has_value());
    CHECK(log_of_power(27, Prime(3)) == 3u);
    CHECK_FALSE(log_of_power(12, Prime(3)).has_value());
}
