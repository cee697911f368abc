#pragma once

#include <optional>
#include <utility>

#include "kbox/exact.hpp"

namespace kbox {

// Closed-form counts for k-box paths and their companion families. Every
// count is evaluated with the division last and checked to be exact.
// Arguments outside a formula's domain give 0 rather than an error.

/// r-tuples of k-ary trees with n nodes in total: r/(kn+r) C(kn+r, n).
ExactInt fuss_catalan(long k, long r, long n);

/// k-box paths of size n: C((k+2)n-1, n) / ((k+2)n-1).
ExactInt count_box(long k, long n);
/// The other displayed form (k+1)/(n-1) C((k+2)n-2, n-2); undefined at n = 1.
std::optional<ExactInt> count_box_alt(long k, long n);

/// Tailed k-box paths of size n, i.e. (k+2)-ary trees with n-1 nodes.
ExactInt count_tailed(long k, long n);
/// 1/(n-1) C((k+2)(n-1), n-2); undefined at n = 1.
std::optional<ExactInt> count_tailed_alt(long k, long n);

/// count_tailed / count_box.
ExactRational tailed_proportion(long k, long n);
/// ((k+1)n)_k / ((k+1) ((k+2)n-2)_k) with falling factorials.
ExactRational tailed_proportion_falling(long k, long n);
/// (k+1)^{k-1} / (k+2)^k.
ExactRational tailed_proportion_limit(long k);

/// Falling factorial x (x-1) ... (x-j+1).
ExactInt falling_factorial(long x, long j);

/// k-box paths of size n with exactly j returns:
/// (j(k+1)-1)/((k+2)n-j-1) C((k+2)n-j-1, n-j).
ExactInt count_box_by_returns(long k, long n, long j);
/// (j(k+1)-1)/(n-j) C((k+2)n-j-2, n-j-1); undefined at j = n.
std::optional<ExactInt> count_box_by_returns_alt(long k, long n, long j);

ExactRational returns_mean(long k, long n);
ExactRational returns_variance(long k, long n);

/// k-box paths of size n with exactly j long ascents:
/// 1/j C((k+1)n-2, j-1) C(n-1, j-1).
ExactInt count_box_by_long_ascents(long k, long n, long j);

/// N_{n,j} = 1/n C(n,j) C(n,j-1); 0 unless 1 <= j <= n.
ExactInt narayana(long n, long j);

/// n((k-2)n + (k-4))/2.
ExactInt second_gonal(long k, long n);

/// (sum_j j f, sum_j j^2 f) over the long-ascent distribution, from the
/// Vandermonde closed forms.
std::pair<ExactInt, ExactInt> lasc_moment_sums(long k, long n);
ExactRational lasc_mean(long k, long n);
ExactRational lasc_variance(long k, long n);

/// k_t-Dyck paths of size n (0 <= t <= k-1):
/// (t+1)/((k+1)n+t+1) C((k+1)n+t+1, n).
ExactInt selkirk_count(long k, long t, long n);

/// [t^j x^n] of the r-th power of the long-ascent series for augmented
/// k-Dyck paths: r/n C(kn+r-1, j-1) C(n, j) for n >= 1.
ExactInt augmented_lasc_power_coeff(long k, long r, long n, long j);

} // namespace kbox
