#pragma once

#include <iosfwd>
#include <vector>

#include "kbox/exact.hpp"

namespace kbox {

/// Power series in (t, x) with exact rational coefficients, truncated to
/// t-degree <= t_order and x-degree <= x_order. Arithmetic is exact modulo
/// the truncation ideal; both operands of a binary operation must share
/// the same orders.
class BiSeries {
public:
    BiSeries(int t_order, int x_order);

    static BiSeries constant(int t_order, int x_order, const ExactRational& c);
    static BiSeries monomial(int t_order, int x_order, int j, int n, const ExactRational& c);

    int t_order() const { return t_order_; }
    int x_order() const { return x_order_; }

    /// Coefficient of t^j x^n; throws std::out_of_range beyond the truncation.
    const ExactRational& coeff(int j, int n) const;
    void set(int j, int n, const ExactRational& c);

    bool is_zero() const;

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const ExactRational& c);

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const ExactRational& c) { return a *= c; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    BiSeries pow(unsigned e) const;
    /// Multiplicative inverse; requires a non-zero constant term.
    BiSeries inverse() const;

    /// Multiplies by t^j x^n (dropping what falls past the truncation).
    BiSeries shifted(int j, int n) const;

    /// Sum over j of the coefficients of x^n, i.e. the series at t = 1.
    std::vector<ExactRational> at_t_one() const;

    bool operator==(const BiSeries& o) const;

private:
    void check_compatible(const BiSeries& o) const;
    std::size_t index(int j, int n) const { return static_cast<std::size_t>(j) * (x_order_ + 1) + n; }

    int t_order_;
    int x_order_;
    std::vector<ExactRational> c_;
};

/// Writes "j<TAB>n<TAB>value" for every in-range cell, n outer and j inner.
void dump_coefficients(const BiSeries& s, std::ostream& out);

/// Solution R with R(0,0) = 1 of
///     x^2 R^3 - x(2-x) R^2 + (1-x^2) R - 1 + x + x^2 - t x^2 = 0,
/// counting skew Dyck paths by semilength (x) and UDL factors (t).
BiSeries solve_prodinger(int t_order, int x_order);
BiSeries prodinger_residual(const BiSeries& r);

/// C_k = 1 + x C_k^k, the k-ary tree series (t-order 0).
BiSeries series_C(int k, int x_order);
BiSeries tree_residual(const BiSeries& c, int k);

/// Augmented k-Dyck paths by size: G_k = C_{k+1} (t-order as given, t-free).
BiSeries series_G(int k, int t_order, int x_order);

/// Augmented k-Dyck paths by size and long ascents:
///     G = 1 + x G^k (G - 1 + t).
BiSeries series_G_acute(int k, int t_order, int x_order);
BiSeries g_acute_residual(const BiSeries& g, int k);

/// k-box paths by size and long ascents: F = x G^k (G - 1 + t), G = G_acute(k+1).
BiSeries series_F_acute(int k, int t_order, int x_order);
BiSeries f_acute_residual(const BiSeries& f, const BiSeries& g_next, int k);

/// Augmented k-Dyck paths by size and returns: 1 / (1 - t x G_k^k).
BiSeries series_G_grave(int k, int t_order, int x_order);
BiSeries g_grave_residual(const BiSeries& g_grave, const BiSeries& g, int k);

/// k-box paths by size and returns: t x G^k / (1 - t x G^{k+1}), G = G_{k+1}.
BiSeries series_F_grave(int k, int t_order, int x_order);
BiSeries f_grave_residual(const BiSeries& f, const BiSeries& g_next, int k);

} // namespace kbox
