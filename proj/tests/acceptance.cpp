// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "kbox/bijections.hpp"
#include "kbox/commands.hpp"
#include "kbox/enumeration.hpp"
#include "kbox/generate.hpp"
#include "kbox/series.hpp"
#include "oracles.hpp"

using namespace kbox;

namespace {

struct Result {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

std::string kn(long k, long n)
{
    return " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

Result motzkin_diagonal()
{
    Result r;
    const BiSeries R = solve_prodinger(6, 17);
    for (long n = 1; n <= 6; ++n) {
        const ExactInt want = exact_div(oracle::binomial(3 * n - 1, n), 3 * n - 1);
        r.expect(R.coeff(static_cast<int>(n), static_cast<int>(3 * n - 1)) == want, "diagonal at n=" + std::to_string(n));
    }
    const long literal[] = {1, 2, 7, 30, 143, 728};
    for (int n = 1; n <= 6; ++n) {
        r.expect(R.coeff(n, 3 * n - 1) == literal[n - 1], "listed value at n=" + std::to_string(n));
    }
    return r;
}

Result size_three_paths()
{
    Result r;
    const auto fig = oracle::read_lines(std::string(KBOX_FIXTURES) + "/box_paths_k1_n3.txt");
    std::set<std::string> want(fig.begin(), fig.end());
    std::set<std::string> got;
    std::size_t count = 0;
    for (const auto& p : generate_k_box(1, 3)) {
        got.insert(to_string(p));
        ++count;
    }
    r.expect(fig.size() == 7 && want.size() == 7, "fixture does not hold 7 paths");
    r.expect(count == 7, "generator yields " + std::to_string(count) + " paths");
    r.expect(got == want, "word sets differ");
    return r;
}

Result tables()
{
    Result r;
    const std::pair<const char*, std::pair<Stat, long>> cases[] = {
        {"table_returns_k1.txt", {Stat::Returns, 1}},
        {"table_returns_k2.txt", {Stat::Returns, 2}},
        {"table_long_ascents_k1.txt", {Stat::LongAscents, 1}},
        {"table_long_ascents_k2.txt", {Stat::LongAscents, 2}},
    };
    for (const auto& [file, what] : cases) {
        const std::string golden = oracle::read_file(std::string(KBOX_FIXTURES) + "/" + file);
        r.expect(!golden.empty() && cmd_table(what.first, what.second, 8) == golden, std::string("mismatch in ") + file);
    }
    return r;
}

Result oracle_histograms()
{
    Result r;
    const std::pair<long, long> cases[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 2}, {2, 3}, {2, 4}};
    for (const auto& [k, n] : cases) {
        std::map<std::size_t, long> ret;
        std::map<std::size_t, long> lasc;
        for (const auto& p : generate_k_box(static_cast<int>(k), static_cast<std::size_t>(n))) {
            const std::string w = to_string(p);
            ++ret[oracle::returns(w)];
            ++lasc[oracle::long_ascents(w)];
        }
        for (long j = 0; j <= n + 1; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            r.expect(count_box_by_returns(k, n, j) == (ret.count(jj) ? ret[jj] : 0), "returns" + kn(k, n));
            r.expect(count_box_by_long_ascents(k, n, j) == (lasc.count(jj) ? lasc[jj] : 0), "long ascents" + kn(k, n));
        }
    }
    return r;
}

Result minimal_semilength()
{
    Result r;
    // k = 0 has no skew Dyck model (UL is forbidden), so the scan starts at k = 1.
    for (int k = 1; k <= 2; ++k) {
        for (int n = 1; n <= 3; ++n) {
            const int top = (k + 2) * n - 1;
            const std::string factor = oracle::box_factor(k);
            for (int m = 0; m <= top; ++m) {
                long hits = 0;
                for (const auto& p : generate_skew_dyck(static_cast<std::size_t>(m))) {
                    const std::string w = to_string(p);
                    r.expect(oracle::is_skew_dyck(w), "generator produced " + w);
                    hits += oracle::count_factor(w, factor) == static_cast<std::size_t>(n) ? 1 : 0;
                }
                if (m < top) {
                    r.expect(hits == 0, "path with n factors below the bound at" + kn(k, n));
                } else {
                    r.expect(count_box(k, n) == hits, "count at the bound" + kn(k, n));
                }
            }
        }
    }
    return r;
}

Result round_trips()
{
    Result r;
    for (int k = 0; k <= 2; ++k) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& p : generate_k_box(k, static_cast<std::size_t>(n))) {
                const std::string at = " for " + to_string(p) + kn(k, n);

                const TreeTuple t = box_to_tree_tuple(p, k);
                bool arity = true;
                for (const auto& tr : t.trees) {
                    arity = arity && tr.arity() == k + 2;
                }
                r.expect(t.trees.size() == static_cast<std::size_t>(k + 1) && arity &&
                             t.total_nodes() == static_cast<std::size_t>(n - 1),
                         "tree tuple shape" + at);
                r.expect(tree_tuple_to_box(t, k) == p, "tree round trip" + at);

                const KtDyckPath q = box_to_kt_dyck(p, k);
                r.expect(is_valid(q) && q.size() == static_cast<std::size_t>(n - 1), "k_t-Dyck shape" + at);
                r.expect(kt_dyck_to_box(q) == p, "k_t-Dyck round trip" + at);

                const ThresholdSequence s = box_to_threshold(p, k);
                bool valid = true;
                try {
                    validate(s);
                } catch (const ThresholdError&) {
                    valid = false;
                }
                r.expect(valid && s.entries.size() == static_cast<std::size_t>(n - 1), "threshold shape" + at);
                r.expect(threshold_to_box(s) == p, "threshold round trip" + at);

                const BoxDecomposition d = decompose_box(p, k);
                bool parts_ok = true;
                for (const auto& mu : d.parts) {
                    parts_ok = parts_ok && oracle::is_skew_dyck(to_string(mu));
                }
                r.expect(parts_ok && d.parts.size() == static_cast<std::size_t>(k == 0 ? 1 : k + 1),
                         "decomposition shape" + at);
                r.expect(compose_box(d) == p, "decomposition round trip" + at);
            }
        }
    }
    return r;
}

Result return_injection_check()
{
    Result r;
    for (int n = 1; n <= 5; ++n) {
        std::map<std::size_t, std::vector<PathWord>> by_j;
        for (const auto& p : generate_k_box(1, static_cast<std::size_t>(n))) {
            by_j[oracle::returns(to_string(p))].push_back(p);
        }
        for (const auto& [j, ps] : by_j) {
            if (j < 2) {
                continue;
            }
            std::set<PathWord> images;
            for (const auto& p : ps) {
                const PathWord q = return_injection(p, 1);
                r.expect(oracle::returns(to_string(q)) == j - 1 && classify(q, 1).box_size == static_cast<std::size_t>(n),
                         "image has the wrong shape");
                images.insert(q);
            }
            r.expect(images.size() == ps.size(), "not injective at n=" + std::to_string(n));
            if (j == 2) {
                r.expect(images.size() == by_j[1].size(), "not onto at j=1, n=" + std::to_string(n));
                r.expect(count_box_by_returns(1, n, 1) == count_box_by_returns(1, n, 2), "f(1,n,1) != f(1,n,2)");
            }
        }
    }
    return r;
}

Result statistics()
{
    Result r;
    r.expect(returns_mean(1, 3) == make_rational(12, 7), "returns mean");
    r.expect(returns_variance(1, 3) == make_rational(24, 49), "returns variance");
    r.expect(lasc_mean(1, 3) == make_rational(15, 7), "long ascent mean");
    r.expect(lasc_variance(1, 3) == make_rational(20, 49), "long ascent variance");

    // Table rows n = 3 for k = 1.
    const long ret_row[] = {3, 3, 1};
    const long lasc_row[] = {1, 4, 2};
    ExactInt r1 = 0, r2 = 0, l1 = 0, l2 = 0;
    for (long j = 1; j <= 3; ++j) {
        r1 += ret_row[j - 1] * j;
        r2 += ret_row[j - 1] * j * j;
        l1 += lasc_row[j - 1] * j;
        l2 += lasc_row[j - 1] * j * j;
    }
    const ExactRational rm = make_rational(r1, 7);
    const ExactRational lm = make_rational(l1, 7);
    r.expect(rm == returns_mean(1, 3) && make_rational(r2, 7) - rm * rm == returns_variance(1, 3), "returns row moments");
    r.expect(lm == lasc_mean(1, 3) && make_rational(l2, 7) - lm * lm == lasc_variance(1, 3), "long ascent row moments");

    for (long k = 0; k <= 3; ++k) {
        for (long n = 1; n <= 10; ++n) {
            if (k == 0 && n == 1) {
                continue;
            }
            ExactInt m1 = 0;
            ExactInt m2 = 0;
            for (long j = 1; j <= n; ++j) {
                m1 += count_box_by_long_ascents(k, n, j) * j;
                m2 += count_box_by_long_ascents(k, n, j) * (j * j);
            }
            const long top = (k + 2) * n - 3;
            const ExactInt first = oracle::binomial(top, n - 1);
            r.expect(m1 == first, "first moment sum" + kn(k, n));
            // Second sum times ((k+2)n - 3) is ((k+1)n^2 - n - 1) C((k+2)n-3, n-1), except where that factor vanishes.
            if (top != 0) {
                r.expect(m2 * top == first * ((k + 1) * n * n - n - 1), "second moment sum" + kn(k, n));
            }
            const auto [s1, s2] = lasc_moment_sums(k, n);
            r.expect(s1 == m1 && s2 == m2, "moment sums" + kn(k, n));
        }
    }
    return r;
}

Result identities()
{
    Result r;
    for (long n = 2; n <= 20; ++n) {
        for (long j = 1; j <= n; ++j) {
            const ExactInt nar = exact_div(oracle::binomial(n - 1, j) * oracle::binomial(n - 1, j - 1), n - 1);
            r.expect(count_box_by_long_ascents(0, n, j) == nar, "narayana at n=" + std::to_string(n));
        }
    }
    for (long k = 3; k <= 8; ++k) {
        for (long n = 1; n <= 20; ++n) {
            r.expect(second_gonal(k, n) == count_box_by_long_ascents(k - 3, n + 1, 2), "second gonal" + kn(k, n));
        }
    }
    const long pentagonal[] = {2, 7, 15, 26, 40, 57, 77};
    for (long n = 1; n <= 7; ++n) {
        r.expect(count_box_by_long_ascents(1, n + 1, 2) == n * n, "squares");
        r.expect(count_box_by_long_ascents(2, n + 1, 2) == pentagonal[n - 1], "pentagonal");
    }
    for (long k = 0; k <= 5; ++k) {
        for (long n = 1; n <= 20; ++n) {
            if (k <= 4) {
                r.expect(count_box_by_long_ascents(k + 1, n, n) == count_box(k, n), "diagonal" + kn(k, n));
            }
            for (long j = 2; j < n; ++j) {
                const ExactInt m = count_box_by_long_ascents(k, n, j);
                r.expect(m * m > count_box_by_long_ascents(k, n, j - 1) * count_box_by_long_ascents(k, n, j + 1),
                         "log-concavity" + kn(k, n));
            }
            if (k >= 1) {
                for (long j = 1; j < n; ++j) {
                    r.expect(count_box_by_returns(k, n, j) >= count_box_by_returns(k, n, j + 1), "monotone" + kn(k, n));
                }
            }
        }
    }
    for (long k = 0; k <= 4; ++k) {
        for (long i = 1; i <= 4; ++i) {
            const long n = (k + 2) * i - 1;
            const long j = (k + 1) * i - 1;
            if (j >= 1) {
                r.expect(count_box_by_long_ascents(k, n, j) == count_box_by_long_ascents(k, n, j + 1), "repeated pair" + kn(k, n));
            }
        }
    }
    return r;
}

Result selkirk()
{
    Result r;
    for (long k = 0; k <= 4; ++k) {
        for (long n = 1; n <= 10; ++n) {
            r.expect(selkirk_count(k + 1, k, n - 1) == count_box(k, n), "selkirk count" + kn(k, n));
        }
    }
    const PathWord sample = path_of_composition({2, {5, 3, 3}});
    r.expect(to_string(box_to_kt_dyck(sample, 2)) == "UUDUUDUU", "sample pair forward");
    r.expect(kt_dyck_to_box(parse_kt_dyck("UUDUUDUU", 3, 2)) == sample, "sample pair inverse");
    return r;
}

Result series_residuals()
{
    Result r;
    const int T = 6;
    const int X = 14;
    auto integral = [&](const BiSeries& s, const std::string& what) {
        for (int n = 0; n <= X; ++n) {
            for (int j = 0; j <= s.t_order(); ++j) {
                r.expect(s.coeff(j, n).get_den() == 1, what + " has a non-integral coefficient");
            }
        }
    };

    const BiSeries R = solve_prodinger(T, X);
    r.expect(prodinger_residual(R).is_zero(), "cubic residual");
    integral(R, "cubic solution");
    for (int n = 1; 3 * n - 1 <= X; ++n) {
        r.expect(R.coeff(n, 3 * n - 1) == count_box(1, n), "cubic diagonal");
    }

    for (int k = 1; k <= 4; ++k) {
        const BiSeries c = series_C(k, X);
        r.expect(tree_residual(c, k).is_zero(), "tree residual");
        integral(c, "tree series");
        for (int n = 0; n <= X; ++n) {
            r.expect(c.coeff(0, n) == fuss_catalan(k, 1, n), "tree coefficient");
        }
    }

    for (int k = 1; k <= 3; ++k) {
        const BiSeries g = series_G_acute(k + 1, T, X);
        r.expect(g_acute_residual(g, k + 1).is_zero(), "augmented long-ascent residual");
        integral(g, "augmented long-ascent series");
        const BiSeries fa = series_F_acute(k, T, X);
        r.expect(f_acute_residual(fa, g, k).is_zero(), "box long-ascent residual");
        integral(fa, "box long-ascent series");

        const BiSeries gn = series_G(k + 1, T, X);
        const BiSeries fg = series_F_grave(k, T, X);
        r.expect(f_grave_residual(fg, gn, k).is_zero(), "box returns residual");
        integral(fg, "box returns series");
        const BiSeries gg = series_G_grave(k + 1, T, X);
        r.expect(g_grave_residual(gg, gn, k + 1).is_zero(), "augmented returns residual");

        for (int n = 0; n <= X; ++n) {
            for (int j = 0; j <= T; ++j) {
                const ExactInt lasc = n >= 1 ? count_box_by_long_ascents(k, n, j) : ExactInt(0);
                const ExactInt ret = n >= 1 ? count_box_by_returns(k, n, j) : ExactInt(0);
                r.expect(fa.coeff(j, n) == lasc, "long-ascent coefficient" + kn(k, n));
                r.expect(fg.coeff(j, n) == ret, "returns coefficient" + kn(k, n));
                r.expect(g.coeff(j, n) == augmented_lasc_power_coeff(k + 1, 1, n, j), "augmented coefficient" + kn(k, n));
            }
        }
    }
    return r;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Result()>> criteria[] = {
        {"AC1 cubic diagonal", motzkin_diagonal},
        {"AC2 box paths of size 3", size_three_paths},
        {"AC3 tables", tables},
        {"AC4 oracle histograms", oracle_histograms},
        {"AC5 minimal semilength", minimal_semilength},
        {"AC6 bijection round trips", round_trips},
        {"AC7 return injection", return_injection_check},
        {"AC8 statistics", statistics},
        {"AC9 identity battery", identities},
        {"AC10 Selkirk consistency", selkirk},
        {"AC11 series residuals", series_residuals},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Result res;
        try {
            res = run();
        } catch (const std::exception& e) {
            res.ok = false;
            res.why = std::string("exception: ") + e.what();
        }
        if (res.ok) {
            std::printf("PASS %s\n", name);
        } else {
            std::printf("FAIL %s: %s\n", name, res.why.c_str());
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
