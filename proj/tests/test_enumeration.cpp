#include <doctest.h>

#include <cmath>
#include <map>

#include "kbox/enumeration.hpp"
#include "kbox/generate.hpp"
#include "oracles.hpp"

using namespace kbox;

namespace {

ExactRational q(long a, long b)
{
    return make_rational(a, b);
}

} // namespace

TEST_CASE("binomial convention")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    for (long a = 0; a <= 40; ++a) {
        for (long b = -1; b <= a + 1; ++b) {
            CHECK(binomial(a, b) == oracle::binomial(a, b));
        }
    }
    CHECK_THROWS(exact_div(7, 2));
    CHECK(to_string(make_rational(6, 4)) == "3/2");
}

TEST_CASE("Fuss-Catalan numbers")
{
    CHECK(fuss_catalan(2, 1, 3) == 5);
    CHECK(fuss_catalan(3, 2, 2) == 7);
    CHECK(fuss_catalan(3, 1, 2) == 3);
    for (int k = 1; k <= 5; ++k) {
        for (int n = 0; n <= 12; ++n) {
            CHECK(fuss_catalan(k, 1, n) == oracle::tree_count(k, n));
        }
    }
    CHECK_THROWS_AS(fuss_catalan(0, 1, 1), std::invalid_argument);
}

TEST_CASE("box counts")
{
    CHECK(count_box(1, 3) == 7);
    const long row_sums[] = {1, 2, 7, 30, 143};
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_box(1, n) == row_sums[n - 1]);
    }
    CHECK(count_box(2, 3) == 15);
    CHECK(count_box(0, 1) == 1);
    for (long k = 0; k <= 5; ++k) {
        for (long n = 1; n <= 20; ++n) {
            CHECK(count_box(k, n) == fuss_catalan(k + 2, k + 1, n - 1));
            if (n >= 2) {
                CHECK(count_box(k, n) == *count_box_alt(k, n));
            }
        }
    }
    CHECK(!count_box_alt(1, 1));
    // Large values stay exact.
    CHECK(to_string(count_box(5, 60)) == to_string(exact_div(binomial(419, 60), 419)));
    CHECK_THROWS(count_box(1, 0));
    CHECK_THROWS(count_box(-1, 3));
}

TEST_CASE("tailed paths")
{
    CHECK(count_tailed(1, 3) == 3);
    CHECK(tailed_proportion(1, 3) == q(3, 7));
    for (long n = 1; n <= 10; ++n) {
        CHECK(tailed_proportion(0, n) == 1);
    }
    CHECK(tailed_proportion_limit(1) == q(1, 3));
    CHECK(tailed_proportion_limit(0) == 1);
    CHECK(tailed_proportion_limit(2) == q(3, 16));

    for (int k = 1; k <= 2; ++k) {
        for (int n = 1; n <= 4; ++n) {
            long tailed = 0;
            for (const auto& p : generate_k_box(k, static_cast<std::size_t>(n))) {
                tailed += classify(p, k).tailed ? 1 : 0;
            }
            CHECK(count_tailed(k, n) == tailed);
        }
    }
    for (long k = 0; k <= 5; ++k) {
        for (long n = 1; n <= 20; ++n) {
            CHECK(tailed_proportion(k, n) == tailed_proportion_falling(k, n));
        }
        // The proportion approaches the limit.
        const double gap = std::abs(ExactRational(tailed_proportion(k, 2000) - tailed_proportion_limit(k)).get_d());
        CHECK(gap < 1e-3);
    }
}

TEST_CASE("returns")
{
    CHECK(count_box_by_returns(1, 4, 3) == 5);
    CHECK(count_box_by_returns(2, 5, 2) == 200);
    CHECK(count_box_by_returns(1, 3, 0) == 0);
    CHECK(count_box_by_returns(1, 3, 4) == 0);
    CHECK(count_box_by_returns(0, 1, 1) == 1);

    // k = 0 against Dyck paths by returns.
    for (int n = 1; n <= 6; ++n) {
        std::map<std::size_t, long> hist;
        for (const auto& w : oracle::skew_dyck_dfs(n)) {
            if (oracle::is_dyck(w)) {
                ++hist[oracle::returns(w)];
            }
        }
        for (int j = 1; j <= n; ++j) {
            const ExactInt want = exact_div(ExactInt(j) * oracle::binomial(2 * n - j, n), 2 * n - j);
            CHECK(want == hist[static_cast<std::size_t>(j)]);
            CHECK(count_box_by_returns(0, n + 1, j + 1) == want);
        }
    }

    for (long k = 0; k <= 5; ++k) {
        for (long n = 1; n <= 20; ++n) {
            ExactInt sum = 0;
            for (long j = 1; j <= n; ++j) {
                sum += count_box_by_returns(k, n, j);
                if (j < n) {
                    CHECK(count_box_by_returns(k, n, j) == *count_box_by_returns_alt(k, n, j));
                }
            }
            CHECK(sum == count_box(k, n));
        }
    }
}

TEST_CASE("returns mean and variance")
{
    CHECK(returns_mean(1, 3) == q(12, 7));
    CHECK(returns_variance(1, 3) == q(24, 49));
    CHECK(returns_variance(2, 1) == 0);
    CHECK(std::abs(returns_mean(1, 10000).get_d() - 9.0 / 4.0) < 1e-3);
}

TEST_CASE("long ascents")
{
    CHECK(count_box_by_long_ascents(1, 5, 3) == 56);
    CHECK(count_box_by_long_ascents(2, 4, 3) == 45);
    for (long n = 1; n <= 20; ++n) {
        CHECK(count_box_by_long_ascents(1, n + 1, 2) == n * n);
    }
    for (long n = 2; n <= 20; ++n) {
        for (long j = 1; j <= n; ++j) {
            CHECK(count_box_by_long_ascents(0, n, j) == narayana(n - 1, j));
        }
    }
    CHECK(narayana(3, 2) == 3);
    const long pentagonal[] = {2, 7, 15, 26, 40, 57, 77};
    for (long n = 1; n <= 7; ++n) {
        CHECK(second_gonal(5, n) == pentagonal[n - 1]);
        CHECK(second_gonal(4, n) == n * n);
    }
    for (long k = 3; k <= 8; ++k) {
        for (long n = 1; n <= 20; ++n) {
            CHECK(second_gonal(k, n) == count_box_by_long_ascents(k - 3, n + 1, 2));
        }
    }
}

TEST_CASE("long ascent moments, including n = 1")
{
    const auto [s1, s2] = lasc_moment_sums(1, 3);
    CHECK(s1 == 15);
    CHECK(s2 == 35);
    CHECK(lasc_mean(1, 3) == q(15, 7));
    CHECK(lasc_variance(1, 3) == q(20, 49));

    // n = 1: one path with a single long ascent when k >= 1.
    for (long k = 1; k <= 5; ++k) {
        const auto [a, b] = lasc_moment_sums(k, 1);
        CHECK(a == 1);
        CHECK(b == 1);
        CHECK(lasc_mean(k, 1) == 1);
        CHECK(lasc_variance(k, 1) == 0);
    }
    CHECK(lasc_mean(0, 1) == 0);

    for (long k = 0; k <= 3; ++k) {
        for (long n = (k == 0 ? 2 : 1); n <= 10; ++n) {
            ExactInt m1 = 0;
            ExactInt m2 = 0;
            for (long j = 1; j <= n; ++j) {
                m1 += count_box_by_long_ascents(k, n, j) * j;
                m2 += count_box_by_long_ascents(k, n, j) * (j * j);
            }
            const auto [a, b] = lasc_moment_sums(k, n);
            CHECK(a == m1);
            CHECK(b == m2);
            const ExactRational mean = make_rational(m1, count_box(k, n));
            CHECK(lasc_mean(k, n) == mean);
            CHECK(lasc_variance(k, n) == make_rational(m2, count_box(k, n)) - mean * mean);
        }
    }
    CHECK(std::abs(ExactRational(lasc_mean(2, 10000) * 4 / 30000).get_d() - 1.0) < 1e-3);
}

TEST_CASE("Selkirk counts")
{
    CHECK(selkirk_count(2, 1, 2) == 7);
    for (long n = 0; n <= 10; ++n) {
        CHECK(selkirk_count(1, 0, n) == fuss_catalan(2, 1, n));
    }
    for (long k = 0; k <= 4; ++k) {
        for (long n = 1; n <= 10; ++n) {
            CHECK(selkirk_count(k + 1, k, n - 1) == count_box(k, n));
            if (k >= 1) {
                CHECK(selkirk_count(k, k - 1, n) == fuss_catalan(k + 1, k, n));
            }
        }
    }
    for (int n = 0; n <= 5; ++n) {
        CHECK(selkirk_count(3, 2, n) == static_cast<long>(oracle::kt_dyck_count(3, 2, n)));
    }
    CHECK_THROWS(selkirk_count(2, 2, 1));
}

TEST_CASE("row shapes")
{
    for (long k = 0; k <= 5; ++k) {
        for (long n = 3; n <= 20; ++n) {
            for (long j = 2; j < n; ++j) {
                const ExactInt m = count_box_by_long_ascents(k, n, j);
                CHECK(m * m > count_box_by_long_ascents(k, n, j - 1) * count_box_by_long_ascents(k, n, j + 1));
            }
        }
    }
    for (long k = 1; k <= 5; ++k) {
        for (long n = 2; n <= 20; ++n) {
            for (long j = 1; j < n; ++j) {
                CHECK(count_box_by_returns(k, n, j) >= count_box_by_returns(k, n, j + 1));
            }
            if (k == 1) {
                CHECK(count_box_by_returns(1, n, 1) == count_box_by_returns(1, n, 2));
            }
        }
    }
    for (long k = 0; k <= 4; ++k) {
        for (long i = 1; i <= 4; ++i) {
            const long n = (k + 2) * i - 1;
            const long j = (k + 1) * i - 1;
            if (j >= 1) {
                CHECK(count_box_by_long_ascents(k, n, j) == count_box_by_long_ascents(k, n, j + 1));
            }
        }
    }
    for (long k = 0; k <= 3; ++k) {
        for (long n = 1; n <= 10; ++n) {
            CHECK(count_box_by_long_ascents(k + 1, n, n) == count_box(k, n));
        }
    }
}
