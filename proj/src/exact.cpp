#include "kbox/exact.hpp"

#include <stdexcept>

namespace kbox {

ExactInt binomial(std::int64_t a, std::int64_t b)
{
    if (b < 0 || b > a) {
        return 0;
    }
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

ExactInt exact_div(const ExactInt& num, const ExactInt& den)
{
    if (den == 0) {
        throw std::logic_error("exact_div: division by zero");
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " + den.get_str());
    }
    ExactInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

ExactRational make_rational(const ExactInt& num, const ExactInt& den)
{
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const ExactInt& v)
{
    return v.get_str();
}

std::string to_string(const ExactRational& v)
{
    return v.get_str();
}

} // namespace kbox
