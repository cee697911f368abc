#include "kbox/path.hpp"

#include <algorithm>

namespace kbox {

char to_char(Step s)
{
    switch (s) {
    case Step::U:
        return 'U';
    case Step::D:
        return 'D';
    case Step::L:
        return 'L';
    }
    return '?';
}

std::size_t PathWord::count(Step s) const
{
    return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s));
}

std::vector<long> PathWord::heights() const
{
    std::vector<long> h;
    h.reserve(steps_.size());
    long y = 0;
    for (Step s : steps_) {
        y += (s == Step::U) ? 1 : -1;
        h.push_back(y);
    }
    return h;
}

void PathWord::append(const PathWord& other)
{
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

void PathWord::append(Step s, std::size_t times)
{
    steps_.insert(steps_.end(), times, s);
}

std::string to_string(const PathWord& p)
{
    std::string out;
    out.reserve(p.size());
    for (Step s : p.steps()) {
        out.push_back(to_char(s));
    }
    return out;
}

PathWord parse_path(std::string_view text)
{
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'U':
            steps.push_back(Step::U);
            break;
        case 'D':
            steps.push_back(Step::D);
            break;
        case 'L':
            steps.push_back(Step::L);
            break;
        default:
            throw ParseError("invalid step character '" + std::string(1, text[i]) + "' at index " +
                                 std::to_string(i),
                             i);
        }
    }
    return PathWord(std::move(steps));
}

namespace {

// Checks the skew Dyck conditions, appending the first violation found.
bool check_skew_dyck(const PathWord& p, std::vector<std::string>& diag)
{
    long y = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            Step a = p[i - 1];
            Step b = p[i];
            if ((a == Step::U && b == Step::L) || (a == Step::L && b == Step::U)) {
                diag.push_back(std::string("forbidden factor ") + to_char(a) + to_char(b) +
                               " at index " + std::to_string(i - 1));
                return false;
            }
        }
        y += (p[i] == Step::U) ? 1 : -1;
        if (y < 0) {
            diag.push_back("prefix of length " + std::to_string(i + 1) + " goes below the x-axis");
            return false;
        }
    }
    if (y != 0) {
        diag.push_back("path ends at height " + std::to_string(y));
        return false;
    }
    return true;
}

bool ends_with(const PathWord& p, const PathWord& suffix)
{
    if (suffix.size() > p.size()) {
        return false;
    }
    return std::equal(suffix.steps().begin(), suffix.steps().end(), p.steps().end() - static_cast<long>(suffix.size()));
}

// U^{b_1} D^{k-1} L D ... U^{b_m} D^{k-1} L D with every b_i >= 1.
std::optional<std::size_t> augmented_shape(const PathWord& p, int k)
{
    std::size_t i = 0;
    std::size_t blocks = 0;
    const std::size_t n = p.size();
    while (i < n) {
        std::size_t run = 0;
        while (i < n && p[i] == Step::U) {
            ++i;
            ++run;
        }
        if (run == 0) {
            return std::nullopt;
        }
        for (int d = 0; d < k - 1; ++d, ++i) {
            if (i >= n || p[i] != Step::D) {
                return std::nullopt;
            }
        }
        if (i + 1 >= n || p[i] != Step::L || p[i + 1] != Step::D) {
            return std::nullopt;
        }
        i += 2;
        ++blocks;
    }
    return blocks;
}

} // namespace

std::size_t factor_count(const PathWord& p, int k)
{
    const std::size_t len = static_cast<std::size_t>(k) + 2;
    std::size_t c = 0;
    for (std::size_t i = 0; i + len <= p.size(); ++i) {
        if (p[i] != Step::U || p[i + len - 1] != Step::L) {
            continue;
        }
        bool ok = true;
        for (std::size_t j = 1; j + 1 < len; ++j) {
            if (p[i + j] != Step::D) {
                ok = false;
                break;
            }
        }
        c += ok ? 1 : 0;
    }
    return c;
}

std::size_t augmented_factor_count(const PathWord& p, int k)
{
    const std::size_t len = static_cast<std::size_t>(k) + 2;
    std::size_t c = 0;
    for (std::size_t i = 0; i + len <= p.size(); ++i) {
        bool ok = p[i] == Step::U && p[i + len - 2] == Step::L && p[i + len - 1] == Step::D;
        for (std::size_t j = 1; ok && j + 2 < len; ++j) {
            ok = p[i + j] == Step::D;
        }
        c += ok ? 1 : 0;
    }
    return c;
}

PathClass classify(const PathWord& p, std::optional<int> k)
{
    PathClass out;
    out.skew_dyck = check_skew_dyck(p, out.diagnostics);
    out.dyck = out.skew_dyck && p.count(Step::L) == 0;
    if (!k) {
        return out;
    }
    if (*k < 0) {
        out.diagnostics.push_back("k must be non-negative");
        return out;
    }
    if (!out.skew_dyck) {
        return out;
    }
    const auto kk = static_cast<std::size_t>(*k);
    if (kk == 0) {
        if (out.dyck) {
            out.box_size = p.semilength() + 1;
            out.tailed = true;
        } else {
            out.diagnostics.push_back("0-box paths are Dyck paths; word contains L");
        }
        return out;
    }

    const std::size_t factors = factor_count(p, *k);
    if (factors == 0) {
        out.diagnostics.push_back("no UD^" + std::to_string(kk) + "L factor");
    } else if (p.semilength() != (kk + 2) * factors - 1) {
        out.diagnostics.push_back("semilength " + std::to_string(p.semilength()) + " differs from (k+2)n-1 = " +
                                  std::to_string((kk + 2) * factors - 1) + " for n = " + std::to_string(factors));
    } else {
        out.box_size = factors;
        PathWord tail;
        tail.append(Step::U, kk + 1);
        tail.append(Step::D, kk);
        tail.push_back(Step::L);
        out.tailed = ends_with(p, tail);
    }

    if (kk >= 2) {
        if (auto m = augmented_shape(p, *k)) {
            out.augmented_size = *m;
        } else {
            out.diagnostics.push_back("not of the augmented " + std::to_string(kk) + "-Dyck form");
        }
    }
    return out;
}

PathStats stats(const PathWord& p)
{
    std::vector<std::string> diag;
    if (!check_skew_dyck(p, diag)) {
        throw InvalidPath("stats: not a skew Dyck path: " + diag.front());
    }
    PathStats s;
    long y = 0;
    std::size_t run = 0;
    auto close_run = [&] {
        if (run > 0) {
            ++s.ascents;
            if (run >= 2) {
                ++s.long_ascents;
            }
        }
        run = 0;
    };
    for (Step st : p.steps()) {
        if (st == Step::U) {
            ++s.semilength;
            ++run;
            ++y;
        } else {
            close_run();
            --y;
            if (y == 0) {
                ++s.returns;
            }
        }
    }
    close_run();
    return s;
}

PathStats box_stats(const PathWord& p, int k)
{
    const PathClass c = classify(p, k);
    if (!c.is_box()) {
        throw InvalidPath("box_stats: " + to_string(p) + " is not a " + std::to_string(k) + "-box path");
    }
    PathStats s = stats(p);
    if (k == 0) {
        s.returns += 1;
        s.long_ascents = s.ascents;
        s.ascents = *c.box_size;
        s.semilength = 2 * *c.box_size - 1;
    }
    return s;
}

std::vector<PathWord> read_paths(std::string_view text)
{
    std::vector<PathWord> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back(parse_path(line));
        start = end + 1;
    }
    return out;
}

} // namespace kbox
