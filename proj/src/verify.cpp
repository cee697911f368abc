#include "kbox/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "kbox/bijections.hpp"
#include "kbox/enumeration.hpp"
#include "kbox/generate.hpp"
#include "kbox/series.hpp"

namespace kbox {

bool VerificationReport::passed() const
{
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

std::string VerificationReport::to_text() const
{
    std::vector<CheckRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::ostringstream out;
    for (const auto& r : sorted) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.range << "]";
        if (!r.passed) {
            out << ": " << r.detail;
            if (!r.counterexample.empty()) {
                out << "; replay: " << r.counterexample;
            }
        }
        out << '\n';
    }
    out << (passed() ? "overall: PASS" : "overall: FAIL") << " (" << sorted.size() << " checks)\n";
    return out.str();
}

Suite parse_suite(const std::string& s)
{
    if (s == "all") {
        return Suite::All;
    }
    if (s == "formulas") {
        return Suite::Formulas;
    }
    if (s == "bijections") {
        return Suite::Bijections;
    }
    if (s == "series") {
        return Suite::Series;
    }
    throw std::invalid_argument("unknown suite '" + s + "' (expected all, formulas, bijections or series)");
}

FormulaSet default_formulas()
{
    return FormulaSet{count_box, count_box_by_returns, count_box_by_long_ascents};
}

FormulaSet faulty_formulas()
{
    FormulaSet f = default_formulas();
    f.returns = [](long k, long n, long j) {
        ExactInt v = count_box_by_returns(k, n, j);
        if (k == 1 && n == 3 && j == 2) {
            v += 1;
        }
        return v;
    };
    return f;
}

namespace {

struct Failure {
    std::string counterexample;
    std::string detail;
};

using Check = std::function<std::optional<Failure>()>;

class Runner {
public:
    void run(const std::string& name, const std::string& range, const Check& check)
    {
        CheckRecord r{name, range, true, "", ""};
        try {
            if (auto f = check()) {
                r.passed = false;
                r.counterexample = f->counterexample;
                r.detail = f->detail;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report.records.push_back(std::move(r));
    }

    VerificationReport report;
};

constexpr long kIdK = 5;
constexpr long kIdN = 20;

std::string kn(long k, long n)
{
    return "--k " + std::to_string(k) + " --n " + std::to_string(n);
}

std::string range_kn(long max_k, long max_n, long min_k = 0)
{
    return std::to_string(min_k) + "<=k<=" + std::to_string(max_k) + ", n<=" + std::to_string(max_n);
}

std::string mismatch(const std::string& what, const auto& got, const auto& want)
{
    return what + ": got " + to_string(got) + ", expected " + to_string(want);
}

std::vector<PathWord> boxes(long k, long n)
{
    return generate_k_box(static_cast<int>(k), static_cast<std::size_t>(n)).collect();
}

void formula_checks(Runner& r, int max_k, int max_n, const FormulaSet& f)
{
    const std::string brute = range_kn(max_k, max_n);

    r.run("brute.box-count", brute, [&]() -> std::optional<Failure> {
        for (long k = 0; k <= max_k; ++k) {
            for (long n = 1; n <= max_n; ++n) {
                const ExactInt got = static_cast<long>(boxes(k, n).size());
                const ExactInt want = f.box(k, n);
                if (got != want) {
                    return Failure{"kbox count " + kn(k, n), mismatch("generated vs formula", got, want)};
                }
            }
        }
        return std::nullopt;
    });

    auto histogram_check = [&](bool returns) -> std::optional<Failure> {
        for (long k = 0; k <= max_k; ++k) {
            for (long n = 1; n <= max_n; ++n) {
                std::map<long, long> hist;
                for (const auto& p : boxes(k, n)) {
                    const PathStats s = box_stats(p, static_cast<int>(k));
                    ++hist[static_cast<long>(returns ? s.returns : s.long_ascents)];
                }
                for (long j = 0; j <= n + 1; ++j) {
                    if (!returns && k == 0 && n == 1) {
                        break; // the empty path sits at j = 0, outside the formula's range
                    }
                    const ExactInt got = hist.count(j) ? hist[j] : 0;
                    const ExactInt want = returns ? f.returns(k, n, j) : f.long_ascents(k, n, j);
                    if (got != want) {
                        const std::string stat = returns ? "returns" : "long-ascents";
                        return Failure{"kbox count " + kn(k, n) + " --stat " + stat + " --j " + std::to_string(j),
                                       mismatch("histogram cell j=" + std::to_string(j), got, want)};
                    }
                }
            }
        }
        return std::nullopt;
    };
    r.run("brute.returns-histogram", brute, [&] { return histogram_check(true); });
    r.run("brute.long-ascents-histogram", brute + " except k=0,n=1", [&] { return histogram_check(false); });

    r.run("brute.tailed-count", range_kn(max_k, max_n), [&]() -> std::optional<Failure> {
        for (long k = 0; k <= max_k; ++k) {
            for (long n = 1; n <= max_n; ++n) {
                long tailed = 0;
                for (const auto& p : boxes(k, n)) {
                    tailed += classify(p, static_cast<int>(k)).tailed ? 1 : 0;
                }
                if (ExactInt(tailed) != count_tailed(k, n)) {
                    return Failure{"kbox enumerate --family tailed " + kn(k, n),
                                   mismatch("tailed paths", ExactInt(tailed), count_tailed(k, n))};
                }
            }
        }
        return std::nullopt;
    });

    const std::string ids = range_kn(kIdK, kIdN);

    r.run("identity.box-forms", ids, [&]() -> std::optional<Failure> {
        for (long k = 0; k <= kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                const ExactInt a = f.box(k, n);
                if (a != fuss_catalan(k + 2, k + 1, n - 1)) {
                    return Failure{"kbox count " + kn(k, n), mismatch("fuss-catalan form", a, fuss_catalan(k + 2, k + 1, n - 1))};
                }
                if (auto b = count_box_alt(k, n); b && a != *b) {
                    return Failure{"kbox count " + kn(k, n), mismatch("second form", a, *b)};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.returns-forms", ids, [&]() -> std::optional<Failure> {
        for (long k = 0; k <= kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                for (long j = 1; j <= n; ++j) {
                    const ExactInt a = f.returns(k, n, j);
                    if (auto b = count_box_by_returns_alt(k, n, j); b && a != *b) {
                        return Failure{"kbox count " + kn(k, n) + " --stat returns --j " + std::to_string(j),
                                       mismatch("second form", a, *b)};
                    }
                }
            }
        }
        return std::nullopt;
    });

    auto row_sum = [&](bool returns) -> std::optional<Failure> {
        for (long k = 0; k <= kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                if (k == 0 && n == 1 && !returns) {
                    continue; // only the empty path, with no long ascent
                }
                ExactInt sum = 0;
                for (long j = 1; j <= n; ++j) {
                    sum += returns ? f.returns(k, n, j) : f.long_ascents(k, n, j);
                }
                if (sum != f.box(k, n)) {
                    return Failure{"kbox count " + kn(k, n) + " --stat " + (returns ? "returns" : "long-ascents"),
                                   mismatch("row sum", sum, f.box(k, n))};
                }
            }
        }
        return std::nullopt;
    };
    r.run("identity.returns-row-sums", ids, [&] { return row_sum(true); });
    r.run("identity.long-ascents-row-sums", ids + " except k=0,n=1", [&] { return row_sum(false); });

    r.run("identity.returns-monotone", range_kn(kIdK, kIdN, 1), [&]() -> std::optional<Failure> {
        for (long k = 1; k <= kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                for (long j = 1; j < n; ++j) {
                    const ExactInt a = f.returns(k, n, j);
                    const ExactInt b = f.returns(k, n, j + 1);
                    if (a < b || (k == 1 && j == 1 && a != b)) {
                        return Failure{"kbox count " + kn(k, n) + " --stat returns",
                                       "row not decreasing at j=" + std::to_string(j)};
                    }
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.long-ascents-log-concave", ids, [&]() -> std::optional<Failure> {
        for (long k = 0; k <= kIdK; ++k) {
            for (long n = 3; n <= kIdN; ++n) {
                for (long j = 2; j < n; ++j) {
                    const ExactInt m = f.long_ascents(k, n, j);
                    if (m * m - f.long_ascents(k, n, j - 1) * f.long_ascents(k, n, j + 1) <= 0) {
                        return Failure{"kbox count " + kn(k, n) + " --stat long-ascents",
                                       "not strictly log-concave at j=" + std::to_string(j)};
                    }
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.narayana", "k=0, n<=20", [&]() -> std::optional<Failure> {
        for (long n = 2; n <= kIdN; ++n) {
            for (long j = 1; j <= n; ++j) {
                if (f.long_ascents(0, n, j) != narayana(n - 1, j)) {
                    return Failure{"kbox count " + kn(0, n) + " --stat long-ascents --j " + std::to_string(j),
                                   mismatch("narayana", f.long_ascents(0, n, j), narayana(n - 1, j))};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.second-gonal", "3<=k<=8, n<=20", [&]() -> std::optional<Failure> {
        for (long k = 3; k <= 8; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                if (second_gonal(k, n) != f.long_ascents(k - 3, n + 1, 2)) {
                    return Failure{"kbox count " + kn(k - 3, n + 1) + " --stat long-ascents --j 2",
                                   mismatch("second gonal", f.long_ascents(k - 3, n + 1, 2), second_gonal(k, n))};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.long-ascents-diagonal", range_kn(kIdK - 1, kIdN), [&]() -> std::optional<Failure> {
        for (long k = 0; k < kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                if (f.long_ascents(k + 1, n, n) != f.box(k, n)) {
                    return Failure{"kbox count " + kn(k + 1, n) + " --stat long-ascents --j " + std::to_string(n),
                                   mismatch("diagonal", f.long_ascents(k + 1, n, n), f.box(k, n))};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.long-ascents-repeated-pairs", "k<=4, i<=4", [&]() -> std::optional<Failure> {
        for (long k = 0; k <= 4; ++k) {
            for (long i = 1; i <= 4; ++i) {
                const long n = (k + 2) * i - 1;
                const long j = (k + 1) * i - 1;
                if (j >= 1 && f.long_ascents(k, n, j) != f.long_ascents(k, n, j + 1)) {
                    return Failure{"kbox count " + kn(k, n) + " --stat long-ascents",
                                   "entries j=" + std::to_string(j) + " and j+1 differ"};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.selkirk", "k<=4, n<=10", [&]() -> std::optional<Failure> {
        for (long k = 0; k <= 4; ++k) {
            for (long n = 1; n <= 10; ++n) {
                if (selkirk_count(k + 1, k, n - 1) != f.box(k, n)) {
                    return Failure{"kbox count " + kn(k, n), mismatch("selkirk", f.box(k, n), selkirk_count(k + 1, k, n - 1))};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.tailed", ids, [&]() -> std::optional<Failure> {
        for (long k = 0; k <= kIdK; ++k) {
            for (long n = 1; n <= kIdN; ++n) {
                if (tailed_proportion(k, n) != tailed_proportion_falling(k, n)) {
                    return Failure{"kbox count " + kn(k, n), mismatch("tailed proportion", tailed_proportion(k, n),
                                                                      tailed_proportion_falling(k, n))};
                }
                if (auto alt = count_tailed_alt(k, n); alt && *alt != count_tailed(k, n)) {
                    return Failure{"kbox count " + kn(k, n), mismatch("tailed second form", *alt, count_tailed(k, n))};
                }
            }
        }
        return std::nullopt;
    });

    r.run("identity.moments", "k<=3, n<=10", [&]() -> std::optional<Failure> {
        for (long k = 0; k <= 3; ++k) {
            for (long n = 1; n <= 10; ++n) {
                ExactInt r1 = 0, r2 = 0, l1 = 0, l2 = 0;
                for (long j = 1; j <= n; ++j) {
                    const ExactInt fr = f.returns(k, n, j);
                    const ExactInt fl = f.long_ascents(k, n, j);
                    r1 += fr * j;
                    r2 += fr * (j * j);
                    l1 += fl * j;
                    l2 += fl * (j * j);
                }
                const ExactInt total = f.box(k, n);
                const ExactRational rm = make_rational(r1, total);
                const ExactRational rv = make_rational(r2, total) - rm * rm;
                const std::string cmd = "kbox count " + kn(k, n);
                if (rm != returns_mean(k, n)) {
                    return Failure{cmd + " --stat returns", mismatch("returns mean", rm, returns_mean(k, n))};
                }
                if (rv != returns_variance(k, n)) {
                    return Failure{cmd + " --stat returns", mismatch("returns variance", rv, returns_variance(k, n))};
                }
                if (k == 0 && n == 1) {
                    continue;
                }
                const auto [s1, s2] = lasc_moment_sums(k, n);
                if (l1 != s1 || l2 != s2) {
                    return Failure{cmd + " --stat long-ascents", mismatch("long-ascent moment sum", l1, s1)};
                }
                const ExactRational lm = make_rational(l1, total);
                const ExactRational lv = make_rational(l2, total) - lm * lm;
                if (lm != lasc_mean(k, n) || lv != lasc_variance(k, n)) {
                    return Failure{cmd + " --stat long-ascents", mismatch("long-ascent mean", lm, lasc_mean(k, n))};
                }
            }
        }
        return std::nullopt;
    });
}

template <typename Forward, typename Inverse>
std::optional<Failure> round_trip(int max_k, int max_n, const std::string& target, Forward fwd, Inverse inv)
{
    for (int k = 0; k <= max_k; ++k) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& p : boxes(k, n)) {
                const std::string cmd =
                    "kbox biject --to " + target + " --k " + std::to_string(k) + " --path '" + to_string(p) + "'";
                auto image = fwd(p, k, n);
                if (!image) {
                    return Failure{cmd, "image outside the codomain"};
                }
                if (inv(*image) != p) {
                    return Failure{cmd, "inverse does not return the input"};
                }
            }
        }
    }
    return std::nullopt;
}

void bijection_checks(Runner& r, int max_k, int max_n)
{
    const std::string range = range_kn(max_k, max_n);

    r.run("bijection.trees", range, [&] {
        return round_trip(
            max_k, max_n, "trees",
            [](const PathWord& p, int k, int n) -> std::optional<TreeTuple> {
                TreeTuple t = box_to_tree_tuple(p, k);
                const bool ok = t.trees.size() == static_cast<std::size_t>(k + 1) &&
                                t.total_nodes() == static_cast<std::size_t>(n - 1) &&
                                std::all_of(t.trees.begin(), t.trees.end(),
                                            [k](const KAryTree& tr) { return tr.arity() == k + 2; });
                return ok ? std::optional(t) : std::nullopt;
            },
            [k = 0](const TreeTuple& t) mutable {
                k = t.trees.front().arity() - 2;
                return tree_tuple_to_box(t, k);
            });
    });

    r.run("bijection.ktdyck", range, [&] {
        return round_trip(
            max_k, max_n, "ktdyck",
            [](const PathWord& p, int k, int n) -> std::optional<KtDyckPath> {
                KtDyckPath q = box_to_kt_dyck(p, k);
                const bool ok = is_valid(q) && q.k == k + 1 && q.t == k && q.size() == static_cast<std::size_t>(n - 1);
                return ok ? std::optional(q) : std::nullopt;
            },
            [](const KtDyckPath& q) { return kt_dyck_to_box(q); });
    });

    r.run("bijection.threshold", range, [&] {
        return round_trip(
            max_k, max_n, "threshold",
            [](const PathWord& p, int k, int n) -> std::optional<ThresholdSequence> {
                ThresholdSequence s = box_to_threshold(p, k);
                validate(s);
                const bool ok = s.k == k + 2 && s.l == k && s.entries.size() == static_cast<std::size_t>(n - 1);
                return ok ? std::optional(s) : std::nullopt;
            },
            [](const ThresholdSequence& s) { return threshold_to_box(s); });
    });

    r.run("bijection.decomposition", range, [&] {
        return round_trip(
            max_k, max_n, "decomposition",
            [](const PathWord& p, int k, int) -> std::optional<BoxDecomposition> {
                BoxDecomposition d = decompose_box(p, k);
                const std::size_t want = k == 0 ? 1 : static_cast<std::size_t>(k + 1);
                return d.parts.size() == want ? std::optional(d) : std::nullopt;
            },
            [](const BoxDecomposition& d) { return compose_box(d); });
    });

    r.run("bijection.composition", range, [&] {
        return round_trip(
            max_k, max_n, "composition",
            [](const PathWord& p, int k, int n) -> std::optional<std::pair<int, std::vector<long>>> {
                auto parts = box_parts(p, k);
                if (parts.size() != static_cast<std::size_t>(n)) {
                    return std::nullopt;
                }
                return std::pair{k, parts};
            },
            [](const std::pair<int, std::vector<long>>& c) { return box_from_parts(c.second, c.first); });
    });

    r.run("bijection.threshold-count", range_kn(max_k, max_n), [&]() -> std::optional<Failure> {
        // Every threshold sequence is hit: count them independently of the paths.
        for (int k = 0; k <= max_k; ++k) {
            for (int n = 1; n <= max_n; ++n) {
                std::set<std::vector<long>> images;
                for (const auto& p : boxes(k, n)) {
                    images.insert(box_to_threshold(p, k).entries);
                }
                const long m = n - 1;
                const long hi = (k + 2) * m + k;
                long total = 0;
                std::vector<long> s;
                std::function<void(long)> rec = [&](long i) {
                    if (i > m) {
                        ++total;
                        return;
                    }
                    const long lo = std::max<long>((k + 2) * i, s.empty() ? 0 : s.back() + 1);
                    for (long v = lo; v <= hi; ++v) {
                        s.push_back(v);
                        rec(i + 1);
                        s.pop_back();
                    }
                };
                rec(1);
                if (static_cast<long>(images.size()) != total) {
                    return Failure{"kbox enumerate --family box " + kn(k, n),
                                   "threshold images " + std::to_string(images.size()) + " vs sequences " +
                                       std::to_string(total)};
                }
            }
        }
        return std::nullopt;
    });

    r.run("bijection.return-injection", "k=1, n<=" + std::to_string(std::max(max_n, 5)), [&]() -> std::optional<Failure> {
        const int k = 1;
        for (int n = 1; n <= std::max(max_n, 5); ++n) {
            std::map<std::size_t, std::set<PathWord>> by_returns;
            for (const auto& p : boxes(k, n)) {
                by_returns[stats(p).returns].insert(p);
            }
            for (auto& [j, paths] : by_returns) {
                if (j < 2) {
                    continue;
                }
                std::set<PathWord> images;
                for (const auto& p : paths) {
                    const PathWord q = return_injection(p, k);
                    const std::string cmd = "kbox biject --to composition --k 1 --path '" + to_string(q) + "'";
                    if (stats(q).returns != j - 1 || !classify(q, k).is_box()) {
                        return Failure{cmd, "image of " + to_string(p) + " is not a box path with one return fewer"};
                    }
                    if (!images.insert(q).second) {
                        return Failure{cmd, "two paths map to " + to_string(q)};
                    }
                    const auto back = return_injection_inverse(q, k);
                    if (!std::holds_alternative<PathWord>(back) || std::get<PathWord>(back) != p) {
                        return Failure{cmd, "inverse does not recover " + to_string(p)};
                    }
                }
                if (j == 2 && images.size() != by_returns[1].size()) {
                    return Failure{"kbox count --k 1 --n " + std::to_string(n) + " --stat returns",
                                   "not onto the one-return paths"};
                }
            }
        }
        return std::nullopt;
    });

    r.run("bijection.embed-all-long", range, [&]() -> std::optional<Failure> {
        for (int k = 0; k <= max_k; ++k) {
            for (int n = 1; n <= max_n; ++n) {
                for (const auto& p : boxes(k, n)) {
                    const PathWord q = embed_all_long(p, k);
                    const PathStats s = box_stats(q, k + 1);
                    if (!classify(q, k + 1).is_box() || s.long_ascents != static_cast<std::size_t>(n) ||
                        embed_all_long_inverse(q, k) != p) {
                        return Failure{"kbox biject --to composition --k " + std::to_string(k + 1) + " --path '" +
                                           to_string(q) + "'",
                                       "embedding of " + to_string(p) + " fails"};
                    }
                }
            }
        }
        return std::nullopt;
    });
}

std::optional<Failure> zero_residual(const BiSeries& res, const std::string& cmd, const std::string& what)
{
    if (!res.is_zero()) {
        return Failure{cmd, what + " residual is not zero"};
    }
    return std::nullopt;
}

std::optional<Failure> integral(const ExactRational& v, const std::string& cmd)
{
    if (v.get_den() != 1) {
        return Failure{cmd, "non-integral coefficient " + to_string(v)};
    }
    return std::nullopt;
}

void series_checks(Runner& r, int max_k, int max_n)
{
    const int N = std::max(max_n, 1);
    const int X = 3 * N - 1;
    const std::string replay = "kbox verify --suite series --max-k " + std::to_string(max_k) + " --max-n " + std::to_string(N);

    r.run("series.prodinger", "t<=" + std::to_string(N) + ", x<=" + std::to_string(X), [&]() -> std::optional<Failure> {
        const BiSeries R = solve_prodinger(N, X);
        if (auto f = zero_residual(prodinger_residual(R), replay, "cubic")) {
            return f;
        }
        for (int n = 1; n <= N; ++n) {
            if (R.coeff(n, 3 * n - 1) != count_box(1, n)) {
                return Failure{"kbox count --k 1 --n " + std::to_string(n),
                               mismatch("diagonal coefficient", R.coeff(n, 3 * n - 1), ExactRational(count_box(1, n)))};
            }
        }
        return std::nullopt;
    });

    const int T = std::max(N, 1);
    const int XS = std::max(X, 2);
    const std::string range = "1<=k<=" + std::to_string(std::max(max_k, 1)) + ", t<=" + std::to_string(T) +
                              ", x<=" + std::to_string(XS);

    r.run("series.trees", range, [&]() -> std::optional<Failure> {
        for (int k = 1; k <= std::max(max_k, 1) + 1; ++k) {
            const BiSeries c = series_C(k, XS);
            if (auto f = zero_residual(tree_residual(c, k), replay, "tree")) {
                return f;
            }
            for (int rr = 1; rr <= 3; ++rr) {
                const BiSeries cr = c.pow(static_cast<unsigned>(rr));
                for (int n = 0; n <= XS; ++n) {
                    if (cr.coeff(0, n) != fuss_catalan(k, rr, n)) {
                        return Failure{replay, "coefficient of C_k^r differs at k=" + std::to_string(k) +
                                                   " r=" + std::to_string(rr) + " n=" + std::to_string(n)};
                    }
                }
            }
        }
        return std::nullopt;
    });

    r.run("series.long-ascents", range, [&]() -> std::optional<Failure> {
        for (int k = 0; k <= std::max(max_k, 1); ++k) {
            const BiSeries g = series_G_acute(k + 1, T, XS);
            if (auto f = zero_residual(g_acute_residual(g, k + 1), replay, "augmented long-ascent")) {
                return f;
            }
            for (int n = 1; n <= XS; ++n) {
                for (int j = 0; j <= T; ++j) {
                    if (auto f = integral(g.coeff(j, n), replay)) {
                        return f;
                    }
                    if (g.coeff(j, n) != augmented_lasc_power_coeff(k + 1, 1, n, j)) {
                        return Failure{replay, "augmented long-ascent coefficient differs at k=" + std::to_string(k + 1) +
                                                   " n=" + std::to_string(n) + " j=" + std::to_string(j)};
                    }
                }
            }
            const BiSeries fa = series_F_acute(k, T, XS);
            if (auto f = zero_residual(f_acute_residual(fa, g, k), replay, "box long-ascent")) {
                return f;
            }
            for (int n = 1; n <= XS; ++n) {
                for (int j = 0; j <= T; ++j) {
                    ExactRational want = count_box_by_long_ascents(k, n, j);
                    if (k == 0 && n == 1) {
                        // The series puts the lone size-1 path at t^1; the formula has no j for it.
                        want = j == 1 ? 1 : 0;
                    }
                    if (fa.coeff(j, n) != want) {
                        return Failure{"kbox count " + kn(k, n) + " --stat long-ascents --j " + std::to_string(j),
                                       mismatch("series coefficient", fa.coeff(j, n), want)};
                    }
                }
            }
        }
        return std::nullopt;
    });

    r.run("series.returns", range, [&]() -> std::optional<Failure> {
        for (int k = 0; k <= std::max(max_k, 1); ++k) {
            const BiSeries g = series_G(k + 1, T, XS);
            const BiSeries gg = series_G_grave(k + 1, T, XS);
            if (auto f = zero_residual(g_grave_residual(gg, g, k + 1), replay, "augmented returns")) {
                return f;
            }
            const BiSeries fg = series_F_grave(k, T, XS);
            if (auto f = zero_residual(f_grave_residual(fg, g, k), replay, "box returns")) {
                return f;
            }
            for (int n = 0; n <= XS; ++n) {
                for (int j = 0; j <= T; ++j) {
                    const ExactRational want = n >= 1 ? ExactRational(count_box_by_returns(k, n, j)) : ExactRational(0);
                    if (fg.coeff(j, n) != want) {
                        return Failure{"kbox count " + kn(k, std::max(n, 1)) + " --stat returns --j " + std::to_string(j),
                                       mismatch("series coefficient", fg.coeff(j, n), want)};
                    }
                }
            }
        }
        return std::nullopt;
    });
}

} // namespace

VerificationReport run_verification(Suite suite, int max_k, int max_n, const FormulaSet& f)
{
    if (max_k < 0 || max_n < 1) {
        throw std::invalid_argument("verification needs max_k >= 0 and max_n >= 1");
    }
    Runner r;
    if (suite == Suite::All || suite == Suite::Formulas) {
        formula_checks(r, max_k, max_n, f);
    }
    if (suite == Suite::All || suite == Suite::Bijections) {
        bijection_checks(r, max_k, max_n);
    }
    if (suite == Suite::All || suite == Suite::Series) {
        series_checks(r, max_k, max_n);
    }
    std::sort(r.report.records.begin(), r.report.records.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    return std::move(r.report);
}

} // namespace kbox
