#include "kbox/series.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace kbox {

BiSeries::BiSeries(int t_order, int x_order)
    : t_order_(t_order), x_order_(x_order)
{
    if (t_order < 0 || x_order < 0) {
        throw std::invalid_argument("BiSeries: orders must be non-negative");
    }
    c_.assign(static_cast<std::size_t>(t_order + 1) * static_cast<std::size_t>(x_order + 1), ExactRational(0));
}

BiSeries BiSeries::constant(int t_order, int x_order, const ExactRational& c)
{
    BiSeries s(t_order, x_order);
    s.set(0, 0, c);
    return s;
}

BiSeries BiSeries::monomial(int t_order, int x_order, int j, int n, const ExactRational& c)
{
    BiSeries s(t_order, x_order);
    if (j <= t_order && n <= x_order) {
        s.set(j, n, c);
    }
    return s;
}

const ExactRational& BiSeries::coeff(int j, int n) const
{
    if (j < 0 || n < 0 || j > t_order_ || n > x_order_) {
        throw std::out_of_range("BiSeries: coefficient t^" + std::to_string(j) + " x^" + std::to_string(n) +
                                " lies beyond the truncation");
    }
    return c_[index(j, n)];
}

void BiSeries::set(int j, int n, const ExactRational& c)
{
    if (j < 0 || n < 0 || j > t_order_ || n > x_order_) {
        throw std::out_of_range("BiSeries: cannot set a coefficient beyond the truncation");
    }
    c_[index(j, n)] = c;
}

bool BiSeries::is_zero() const
{
    for (const auto& v : c_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

void BiSeries::check_compatible(const BiSeries& o) const
{
    if (t_order_ != o.t_order_ || x_order_ != o.x_order_) {
        throw std::invalid_argument("BiSeries: truncation orders differ");
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

BiSeries& BiSeries::operator*=(const ExactRational& c)
{
    for (auto& v : c_) {
        v *= c;
    }
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
    a.check_compatible(b);
    const int T = a.t_order_;
    const int X = a.x_order_;
    BiSeries out(T, X);
    ExactRational term;
    for (int j1 = 0; j1 <= T; ++j1) {
        for (int n1 = 0; n1 <= X; ++n1) {
            const ExactRational& av = a.c_[a.index(j1, n1)];
            if (av == 0) {
                continue;
            }
            for (int j2 = 0; j1 + j2 <= T; ++j2) {
                for (int n2 = 0; n1 + n2 <= X; ++n2) {
                    const ExactRational& bv = b.c_[b.index(j2, n2)];
                    if (bv == 0) {
                        continue;
                    }
                    term = av * bv;
                    out.c_[out.index(j1 + j2, n1 + n2)] += term;
                }
            }
        }
    }
    return out;
}

BiSeries BiSeries::pow(unsigned e) const
{
    BiSeries result = constant(t_order_, x_order_, 1);
    BiSeries base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

BiSeries BiSeries::inverse() const
{
    const ExactRational& c0 = coeff(0, 0);
    if (c0 == 0) {
        throw std::domain_error("BiSeries::inverse: constant term is zero");
    }
    const ExactRational inv0 = 1 / c0;
    BiSeries out(t_order_, x_order_);
    // (j, n) only depends on cells that are componentwise smaller.
    for (int n = 0; n <= x_order_; ++n) {
        for (int j = 0; j <= t_order_; ++j) {
            if (j == 0 && n == 0) {
                out.set(0, 0, inv0);
                continue;
            }
            ExactRational acc = 0;
            for (int j1 = 0; j1 <= j; ++j1) {
                for (int n1 = 0; n1 <= n; ++n1) {
                    if (j1 == 0 && n1 == 0) {
                        continue;
                    }
                    const ExactRational& av = c_[index(j1, n1)];
                    if (av != 0) {
                        acc += av * out.c_[index(j - j1, n - n1)];
                    }
                }
            }
            out.c_[index(j, n)] = -acc * inv0;
        }
    }
    return out;
}

BiSeries BiSeries::shifted(int j, int n) const
{
    BiSeries out(t_order_, x_order_);
    for (int a = 0; a + j <= t_order_; ++a) {
        for (int b = 0; b + n <= x_order_; ++b) {
            out.c_[index(a + j, b + n)] = c_[index(a, b)];
        }
    }
    return out;
}

std::vector<ExactRational> BiSeries::at_t_one() const
{
    std::vector<ExactRational> out(static_cast<std::size_t>(x_order_) + 1, ExactRational(0));
    for (int j = 0; j <= t_order_; ++j) {
        for (int n = 0; n <= x_order_; ++n) {
            out[static_cast<std::size_t>(n)] += c_[index(j, n)];
        }
    }
    return out;
}

bool BiSeries::operator==(const BiSeries& o) const
{
    return t_order_ == o.t_order_ && x_order_ == o.x_order_ && c_ == o.c_;
}

void dump_coefficients(const BiSeries& s, std::ostream& out)
{
    for (int n = 0; n <= s.x_order(); ++n) {
        for (int j = 0; j <= s.t_order(); ++j) {
            out << j << '\t' << n << '\t' << to_string(s.coeff(j, n)) << '\n';
        }
    }
}

namespace {

BiSeries one(int T, int X)
{
    return BiSeries::constant(T, X, 1);
}

BiSeries t_mono(int T, int X)
{
    return BiSeries::monomial(T, X, 1, 0, 1);
}

void require_k(int k, int min, const char* op)
{
    if (k < min) {
        throw std::invalid_argument(std::string(op) + ": k must be >= " + std::to_string(min));
    }
}

} // namespace

BiSeries solve_prodinger(int t_order, int x_order)
{
    const int T = t_order;
    const int X = x_order;
    // R = (1 - x - x^2 + t x^2 + x(2-x) R^2 - x^2 R^3) / (1 - x^2)
    BiSeries base = one(T, X) - BiSeries::monomial(T, X, 0, 1, 1) - BiSeries::monomial(T, X, 0, 2, 1) +
                    BiSeries::monomial(T, X, 1, 2, 1);
    const BiSeries two_minus_x_times_x = BiSeries::monomial(T, X, 0, 1, 2) - BiSeries::monomial(T, X, 0, 2, 1);
    const BiSeries divisor_inv = (one(T, X) - BiSeries::monomial(T, X, 0, 2, 1)).inverse();

    BiSeries r = one(T, X);
    for (int it = 0; it <= X; ++it) {
        const BiSeries r2 = r * r;
        const BiSeries r3 = r2 * r;
        r = (base + two_minus_x_times_x * r2 - r3.shifted(0, 2)) * divisor_inv;
    }
    return r;
}

BiSeries prodinger_residual(const BiSeries& r)
{
    const int T = r.t_order();
    const int X = r.x_order();
    const BiSeries r2 = r * r;
    const BiSeries r3 = r2 * r;
    const BiSeries two_minus_x_times_x = BiSeries::monomial(T, X, 0, 1, 2) - BiSeries::monomial(T, X, 0, 2, 1);
    return r3.shifted(0, 2) - two_minus_x_times_x * r2 + (one(T, X) - BiSeries::monomial(T, X, 0, 2, 1)) * r -
           one(T, X) + BiSeries::monomial(T, X, 0, 1, 1) + BiSeries::monomial(T, X, 0, 2, 1) -
           BiSeries::monomial(T, X, 1, 2, 1);
}

BiSeries series_C(int k, int x_order)
{
    require_k(k, 1, "series_C");
    BiSeries c = one(0, x_order);
    for (int it = 0; it <= x_order; ++it) {
        c = one(0, x_order) + c.pow(static_cast<unsigned>(k)).shifted(0, 1);
    }
    return c;
}

BiSeries tree_residual(const BiSeries& c, int k)
{
    return c - one(c.t_order(), c.x_order()) - c.pow(static_cast<unsigned>(k)).shifted(0, 1);
}

BiSeries series_G(int k, int t_order, int x_order)
{
    require_k(k, 1, "series_G");
    const BiSeries c = series_C(k + 1, x_order);
    BiSeries g(t_order, x_order);
    for (int n = 0; n <= x_order; ++n) {
        g.set(0, n, c.coeff(0, n));
    }
    return g;
}

BiSeries series_G_acute(int k, int t_order, int x_order)
{
    require_k(k, 1, "series_G_acute");
    const int T = t_order;
    const int X = x_order;
    const BiSeries shift = t_mono(T, X) - one(T, X);
    BiSeries g = one(T, X);
    for (int it = 0; it <= X; ++it) {
        g = one(T, X) + (g.pow(static_cast<unsigned>(k)) * (g + shift)).shifted(0, 1);
    }
    return g;
}

BiSeries g_acute_residual(const BiSeries& g, int k)
{
    const int T = g.t_order();
    const int X = g.x_order();
    return g - one(T, X) - (g.pow(static_cast<unsigned>(k)) * (g - one(T, X) + t_mono(T, X))).shifted(0, 1);
}

BiSeries series_F_acute(int k, int t_order, int x_order)
{
    require_k(k, 0, "series_F_acute");
    const BiSeries g = series_G_acute(k + 1, t_order, x_order);
    const int T = t_order;
    const int X = x_order;
    return (g.pow(static_cast<unsigned>(k)) * (g - one(T, X) + t_mono(T, X))).shifted(0, 1);
}

BiSeries f_acute_residual(const BiSeries& f, const BiSeries& g_next, int k)
{
    const int T = f.t_order();
    const int X = f.x_order();
    return f - (g_next.pow(static_cast<unsigned>(k)) * (g_next - one(T, X) + t_mono(T, X))).shifted(0, 1);
}

BiSeries series_G_grave(int k, int t_order, int x_order)
{
    require_k(k, 1, "series_G_grave");
    const BiSeries g = series_G(k, t_order, x_order);
    return (one(t_order, x_order) - g.pow(static_cast<unsigned>(k)).shifted(1, 1)).inverse();
}

BiSeries g_grave_residual(const BiSeries& g_grave, const BiSeries& g, int k)
{
    // G_grave = 1 + t x G^k G_grave
    return g_grave - one(g.t_order(), g.x_order()) - (g.pow(static_cast<unsigned>(k)) * g_grave).shifted(1, 1);
}

BiSeries series_F_grave(int k, int t_order, int x_order)
{
    require_k(k, 0, "series_F_grave");
    const BiSeries g = series_G(k + 1, t_order, x_order);
    const BiSeries gk = g.pow(static_cast<unsigned>(k));
    const BiSeries denom = one(t_order, x_order) - (gk * g).shifted(1, 1);
    return gk.shifted(1, 1) * denom.inverse();
}

BiSeries f_grave_residual(const BiSeries& f, const BiSeries& g_next, int k)
{
    const BiSeries gk = g_next.pow(static_cast<unsigned>(k));
    const BiSeries denom = one(f.t_order(), f.x_order()) - (gk * g_next).shifted(1, 1);
    return f * denom - gk.shifted(1, 1);
}

} // namespace kbox
