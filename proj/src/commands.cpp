#include "kbox/commands.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "kbox/bijections.hpp"
#include "kbox/composition.hpp"
#include "kbox/enumeration.hpp"
#include "kbox/generate.hpp"
#include "kbox/trees.hpp"

namespace kbox {

Stat parse_stat(const std::string& s)
{
    if (s == "none") {
        return Stat::None;
    }
    if (s == "returns") {
        return Stat::Returns;
    }
    if (s == "long-ascents") {
        return Stat::LongAscents;
    }
    throw UsageError("unknown stat '" + s + "' (expected none, returns or long-ascents)");
}

Family parse_family(const std::string& s)
{
    if (s == "skew") {
        return Family::Skew;
    }
    if (s == "dyck") {
        return Family::Dyck;
    }
    if (s == "box") {
        return Family::Box;
    }
    if (s == "tailed") {
        return Family::Tailed;
    }
    if (s == "augmented") {
        return Family::Augmented;
    }
    if (s == "trees") {
        return Family::Trees;
    }
    throw UsageError("unknown family '" + s + "' (expected skew, dyck, box, tailed, augmented or trees)");
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "words") {
        return OutputFormat::Words;
    }
    if (s == "compositions") {
        return OutputFormat::Compositions;
    }
    throw UsageError("unknown format '" + s + "' (expected words or compositions)");
}

Target parse_target(const std::string& s)
{
    if (s == "trees") {
        return Target::Trees;
    }
    if (s == "ktdyck") {
        return Target::KtDyck;
    }
    if (s == "threshold") {
        return Target::Threshold;
    }
    if (s == "decomposition") {
        return Target::Decomposition;
    }
    if (s == "composition") {
        return Target::Composition;
    }
    throw UsageError("unknown target '" + s + "' (expected trees, ktdyck, threshold, decomposition or composition)");
}

Sequence parse_sequence(const std::string& s)
{
    if (s == "box-counts") {
        return Sequence::BoxCounts;
    }
    if (s == "tailed-counts") {
        return Sequence::TailedCounts;
    }
    if (s == "returns") {
        return Sequence::Returns;
    }
    if (s == "long-ascents") {
        return Sequence::LongAscents;
    }
    if (s == "returns-diagonal") {
        return Sequence::ReturnsDiagonal;
    }
    throw UsageError("unknown sequence '" + s +
                     "' (expected box-counts, tailed-counts, returns, long-ascents or returns-diagonal)");
}

namespace {

void require_kn(long k, long n)
{
    if (k < 0) {
        throw UsageError("--k must be >= 0");
    }
    if (n < 1) {
        throw UsageError("--n must be >= 1");
    }
}

ExactInt stat_count(Stat stat, long k, long n, long j)
{
    return stat == Stat::Returns ? count_box_by_returns(k, n, j) : count_box_by_long_ascents(k, n, j);
}

} // namespace

std::string cmd_count(long k, long n, Stat stat, std::optional<long> j)
{
    require_kn(k, n);
    if (stat == Stat::None) {
        if (j) {
            throw UsageError("--j needs --stat returns or --stat long-ascents");
        }
        return to_string(count_box(k, n)) + "\n";
    }
    if (j) {
        return to_string(stat_count(stat, k, n, *j)) + "\n";
    }
    std::string out;
    for (long jj = 1; jj <= n; ++jj) {
        if (jj > 1) {
            out.push_back(' ');
        }
        out += to_string(stat_count(stat, k, n, jj));
    }
    return out + "\n";
}

std::string cmd_table(Stat stat, long k, long rows)
{
    if (stat == Stat::None) {
        throw UsageError("table needs --stat returns or --stat long-ascents");
    }
    if (k < 0 || rows < 1) {
        throw UsageError("table needs --k >= 0 and --rows >= 1");
    }
    const auto R = static_cast<std::size_t>(rows);
    // cells[r][c]: r = 0 is the header, c = 0 the row label.
    std::vector<std::vector<std::string>> cells(R + 1, std::vector<std::string>(R + 1));
    cells[0][0] = "n\\j";
    for (std::size_t c = 1; c <= R; ++c) {
        cells[0][c] = std::to_string(c);
    }
    for (std::size_t n = 1; n <= R; ++n) {
        cells[n][0] = std::to_string(n);
        for (std::size_t j = 1; j <= n; ++j) {
            cells[n][j] = to_string(stat_count(stat, k, static_cast<long>(n), static_cast<long>(j)));
        }
    }
    std::vector<std::size_t> width(R + 1, 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c <= R; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c <= R; ++c) {
            if (c > 0) {
                line.push_back(' ');
            }
            line.append(width[c] - row[c].size(), ' ');
            line += row[c];
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line + "\n";
    }
    return out;
}

std::string cmd_enumerate(Family family, long k, long n, OutputFormat format)
{
    if (n < 0 || k < 0) {
        throw UsageError("--k and --n must be non-negative");
    }
    const bool want_compositions = format == OutputFormat::Compositions;
    if (want_compositions && !((family == Family::Box || family == Family::Tailed) && k >= 1)) {
        throw UsageError("--format compositions needs --family box or tailed with --k >= 1");
    }
    std::ostringstream out;
    auto emit_paths = [&](Stream<PathWord> stream, bool tailed_only) {
        for (const PathWord& p : stream) {
            if (tailed_only && !classify(p, static_cast<int>(k)).tailed) {
                continue;
            }
            if (want_compositions) {
                out << format_int_list(composition_of(p, static_cast<int>(k)).parts) << '\n';
            } else {
                out << to_string(p) << '\n';
            }
        }
    };
    switch (family) {
    case Family::Skew:
        emit_paths(generate_skew_dyck(static_cast<std::size_t>(n)), false);
        break;
    case Family::Dyck:
        emit_paths(generate_dyck(static_cast<std::size_t>(n)), false);
        break;
    case Family::Box:
    case Family::Tailed:
        if (n < 1) {
            throw UsageError("--n must be >= 1 for box paths");
        }
        emit_paths(generate_k_box(static_cast<int>(k), static_cast<std::size_t>(n)), family == Family::Tailed);
        break;
    case Family::Augmented: {
        if (k < 2) {
            throw UsageError("augmented k-Dyck paths need --k >= 2");
        }
        std::vector<PathWord> words;
        for (const auto& q : generate_kdyck(static_cast<int>(k), static_cast<std::size_t>(n))) {
            words.push_back(kdyck_to_augmented(q));
        }
        std::sort(words.begin(), words.end());
        for (const auto& w : words) {
            out << to_string(w) << '\n';
        }
        break;
    }
    case Family::Trees:
        if (k < 1) {
            throw UsageError("trees need --k (arity) >= 1");
        }
        for (const auto& t : generate_trees(static_cast<int>(k), static_cast<std::size_t>(n))) {
            out << to_string(t) << '\n';
        }
        break;
    }
    return out.str();
}

std::string cmd_biject(Target to, long k, const std::string& input, bool input_is_composition, bool inverse)
{
    if (k < 0) {
        throw UsageError("--k must be >= 0");
    }
    const int kk = static_cast<int>(k);
    if (inverse) {
        if (input_is_composition) {
            throw UsageError("--inverse takes the image text, not --composition");
        }
        PathWord p;
        switch (to) {
        case Target::Trees:
            p = tree_tuple_to_box(parse_tree_tuple(input, kk + 2), kk);
            break;
        case Target::KtDyck:
            p = kt_dyck_to_box(parse_kt_dyck(input, kk + 1, kk));
            break;
        case Target::Threshold:
            p = threshold_to_box(ThresholdSequence{kk + 2, kk, parse_int_list(input)});
            break;
        case Target::Decomposition: {
            BoxDecomposition d{kk, {}};
            std::size_t start = 0;
            while (true) {
                const std::size_t end = input.find('|', start);
                d.parts.push_back(parse_path(input.substr(start, end == std::string::npos ? std::string::npos : end - start)));
                if (end == std::string::npos) {
                    break;
                }
                start = end + 1;
            }
            p = compose_box(d);
            break;
        }
        case Target::Composition:
            p = box_from_parts(parse_int_list(input), kk);
            break;
        }
        return to_string(p) + "\n";
    }

    const PathWord p = input_is_composition ? box_from_parts(parse_int_list(input), kk) : parse_path(input);
    switch (to) {
    case Target::Trees:
        return to_string(box_to_tree_tuple(p, kk)) + "\n";
    case Target::KtDyck:
        return to_string(box_to_kt_dyck(p, kk)) + "\n";
    case Target::Threshold:
        return format_int_list(box_to_threshold(p, kk).entries) + "\n";
    case Target::Decomposition:
        return to_string(decompose_box(p, kk)) + "\n";
    case Target::Composition:
        return format_int_list(box_parts(p, kk)) + "\n";
    }
    return {};
}

std::string cmd_bfile(Sequence seq, long k, long count)
{
    if (k < 0 || count < 0) {
        throw UsageError("--k and --count must be non-negative");
    }
    std::vector<ExactInt> values;
    const auto want = static_cast<std::size_t>(count);
    switch (seq) {
    case Sequence::BoxCounts:
        for (long n = 1; values.size() < want; ++n) {
            values.push_back(count_box(k, n));
        }
        break;
    case Sequence::TailedCounts:
        for (long n = 1; values.size() < want; ++n) {
            values.push_back(count_tailed(k, n));
        }
        break;
    case Sequence::Returns:
    case Sequence::LongAscents:
        for (long n = 1; values.size() < want; ++n) {
            for (long j = 1; j <= n && values.size() < want; ++j) {
                values.push_back(seq == Sequence::Returns ? count_box_by_returns(k, n, j)
                                                          : count_box_by_long_ascents(k, n, j));
            }
        }
        break;
    case Sequence::ReturnsDiagonal:
        // First subdiagonal of the returns triangle: paths of size n+1 with n returns.
        for (long n = 1; values.size() < want; ++n) {
            values.push_back(count_box_by_returns(k, n + 1, n));
        }
        break;
    }
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(i + 1) + " " + to_string(values[i]) + "\n";
    }
    return out;
}

} // namespace kbox
