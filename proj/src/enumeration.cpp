#include "kbox/enumeration.hpp"

#include <stdexcept>
#include <string>

namespace kbox {

namespace {

void require(bool ok, const char* op, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(std::string(op) + ": requires " + what);
    }
}

ExactInt z(long v)
{
    return ExactInt(v);
}

} // namespace

ExactInt fuss_catalan(long k, long r, long n)
{
    require(k >= 1 && r >= 1 && n >= 0, "fuss_catalan", "k >= 1, r >= 1, n >= 0");
    const long top = k * n + r;
    return exact_div(z(r) * binomial(top, n), z(top));
}

ExactInt count_box(long k, long n)
{
    require(k >= 0 && n >= 1, "count_box", "k >= 0, n >= 1");
    const long top = (k + 2) * n - 1;
    return exact_div(binomial(top, n), z(top));
}

std::optional<ExactInt> count_box_alt(long k, long n)
{
    require(k >= 0 && n >= 1, "count_box_alt", "k >= 0, n >= 1");
    if (n == 1) {
        return std::nullopt;
    }
    return exact_div(z(k + 1) * binomial((k + 2) * n - 2, n - 2), z(n - 1));
}

ExactInt count_tailed(long k, long n)
{
    require(k >= 0 && n >= 1, "count_tailed", "k >= 0, n >= 1");
    return fuss_catalan(k + 2, 1, n - 1);
}

std::optional<ExactInt> count_tailed_alt(long k, long n)
{
    require(k >= 0 && n >= 1, "count_tailed_alt", "k >= 0, n >= 1");
    if (n == 1) {
        return std::nullopt;
    }
    return exact_div(binomial((k + 2) * (n - 1), n - 2), z(n - 1));
}

ExactRational tailed_proportion(long k, long n)
{
    return make_rational(count_tailed(k, n), count_box(k, n));
}

ExactInt falling_factorial(long x, long j)
{
    ExactInt out = 1;
    for (long i = 0; i < j; ++i) {
        out *= x - i;
    }
    return out;
}

ExactRational tailed_proportion_falling(long k, long n)
{
    require(k >= 0 && n >= 1, "tailed_proportion_falling", "k >= 0, n >= 1");
    return make_rational(falling_factorial((k + 1) * n, k), z(k + 1) * falling_factorial((k + 2) * n - 2, k));
}

ExactRational tailed_proportion_limit(long k)
{
    require(k >= 0, "tailed_proportion_limit", "k >= 0");
    ExactInt num;
    ExactInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k + 2), static_cast<unsigned long>(k));
    if (k >= 1) {
        mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k - 1));
        return make_rational(num, den);
    }
    // (k+1)^{-1} at k = 0.
    return make_rational(1, den * (k + 1));
}

ExactInt count_box_by_returns(long k, long n, long j)
{
    require(k >= 0 && n >= 1, "count_box_by_returns", "k >= 0, n >= 1");
    if (j < 1 || j > n) {
        return 0;
    }
    const long top = (k + 2) * n - j - 1;
    if (top == 0) {
        // k = 0, n = 1: the empty Dyck path, one return by convention.
        return 1;
    }
    return exact_div(z(j * (k + 1) - 1) * binomial(top, n - j), z(top));
}

std::optional<ExactInt> count_box_by_returns_alt(long k, long n, long j)
{
    require(k >= 0 && n >= 1, "count_box_by_returns_alt", "k >= 0, n >= 1");
    if (j < 1 || j > n) {
        return ExactInt(0);
    }
    if (j == n) {
        return std::nullopt;
    }
    return exact_div(z(j * (k + 1) - 1) * binomial((k + 2) * n - j - 2, n - j - 1), z(n - j));
}

ExactRational returns_mean(long k, long n)
{
    require(k >= 0 && n >= 1, "returns_mean", "k >= 0, n >= 1");
    return make_rational(z(k + 2) * ((k + 2) * n - 1), z(k + 1) * ((k + 1) * n + 1));
}

ExactRational returns_variance(long k, long n)
{
    require(k >= 0 && n >= 1, "returns_variance", "k >= 0, n >= 1");
    const ExactInt num = z(k + 2) * ((k + 2) * n - 1) * ((2 * k + 1) * (k + 1) * n - 2) * (n - 1);
    const ExactInt a = z((k + 1) * n + 1);
    const ExactInt den = z(k + 1) * (k + 1) * a * a * ((k + 1) * n + 2);
    return make_rational(num, den);
}

ExactInt count_box_by_long_ascents(long k, long n, long j)
{
    require(k >= 0 && n >= 1, "count_box_by_long_ascents", "k >= 0, n >= 1");
    if (j < 1 || j > n) {
        return 0;
    }
    return exact_div(binomial((k + 1) * n - 2, j - 1) * binomial(n - 1, j - 1), z(j));
}

ExactInt narayana(long n, long j)
{
    if (n < 1 || j < 1 || j > n) {
        return 0;
    }
    return exact_div(binomial(n, j) * binomial(n, j - 1), z(n));
}

ExactInt second_gonal(long k, long n)
{
    return exact_div(z(n) * ((k - 2) * n + (k - 4)), z(2));
}

std::pair<ExactInt, ExactInt> lasc_moment_sums(long k, long n)
{
    require(k >= 0 && n >= 1, "lasc_moment_sums", "k >= 0, n >= 1");
    const long top = (k + 2) * n - 3;
    const ExactInt first = binomial(top, n - 1);
    if (top == 0) {
        // k = 1, n = 1: the ratio form is 0/0; use the split form it came from.
        const ExactInt second = z((k + 1) * n - 2) * binomial((k + 2) * n - 4, n - 2) + first;
        return {first, second};
    }
    return {first, exact_div(z((k + 1) * n * n - n - 1) * first, z(top))};
}

ExactRational lasc_mean(long k, long n)
{
    require(k >= 0 && n >= 1, "lasc_mean", "k >= 0, n >= 1");
    const long den = (k + 2) * n - 2;
    if (den == 0) {
        // k = 0, n = 1: the single path is empty and has no long ascents.
        return 0;
    }
    return make_rational(z(n) * ((k + 1) * n - 1), z(den));
}

ExactRational lasc_variance(long k, long n)
{
    require(k >= 0 && n >= 1, "lasc_variance", "k >= 0, n >= 1");
    if (n == 1) {
        return 0;
    }
    const ExactInt num = z((k + 1) * n - 1) * ((k + 1) * n - 2) * n * (n - 1);
    const ExactInt b = z((k + 2) * n - 2);
    return make_rational(num, b * b * ((k + 2) * n - 3));
}

ExactInt selkirk_count(long k, long t, long n)
{
    require(k >= 1 && t >= 0 && t <= k - 1 && n >= 0, "selkirk_count", "k >= 1, 0 <= t <= k-1, n >= 0");
    const long top = (k + 1) * n + t + 1;
    return exact_div(z(t + 1) * binomial(top, n), z(top));
}

ExactInt augmented_lasc_power_coeff(long k, long r, long n, long j)
{
    require(k >= 1 && r >= 0 && n >= 0, "augmented_lasc_power_coeff", "k >= 1, r >= 0, n >= 0");
    if (n == 0) {
        return j == 0 ? 1 : 0;
    }
    return exact_div(z(r) * binomial(k * n + r - 1, j - 1) * binomial(n, j), z(n));
}

} // namespace kbox
