#include "kbox/composition.hpp"

#include <charconv>
#include <stdexcept>

namespace kbox {

void validate(const Composition& c)
{
    if (c.k < 1) {
        throw CompositionError("compositions require k >= 1 (the k = 0 template contains UL)", 0);
    }
    const long n = static_cast<long>(c.parts.size());
    if (n == 0) {
        throw CompositionError("composition must have at least one part", 0);
    }
    const long step = c.k + 2;
    long sum = 0;
    for (long i = 1; i <= n; ++i) {
        const long a = c.parts[static_cast<std::size_t>(i - 1)];
        if (a < 1) {
            throw CompositionError("part " + std::to_string(i) + " is not positive", static_cast<std::size_t>(i));
        }
        sum += a;
        if (i < n && sum < step * i) {
            throw CompositionError("prefix condition fails at i=" + std::to_string(i) + " (" + std::to_string(sum) +
                                       " < " + std::to_string(step * i) + ")",
                                   static_cast<std::size_t>(i));
        }
    }
    if (sum != step * n - 1) {
        throw CompositionError("parts sum to " + std::to_string(sum) + ", expected (k+2)n-1 = " +
                                   std::to_string(step * n - 1),
                               0);
    }
}

Composition composition_of(const PathWord& p, int k)
{
    if (k < 1) {
        throw InvalidPath("composition_of: requires k >= 1");
    }
    const PathClass cls = classify(p, k);
    if (!cls.is_box()) {
        throw InvalidPath("composition_of: " + to_string(p) + " is not a " + std::to_string(k) + "-box path");
    }
    Composition c{k, {}};
    std::size_t i = 0;
    const auto kk = static_cast<std::size_t>(k);
    while (i < p.size()) {
        long run = 0;
        while (p[i] == Step::U) {
            ++run;
            ++i;
        }
        c.parts.push_back(run);
        // D^k L, then D unless this is the final block.
        i += kk + 1;
        if (i < p.size()) {
            ++i;
        }
    }
    if (path_of_composition(c) != p) {
        throw std::logic_error("composition_of: block structure mismatch for " + to_string(p));
    }
    return c;
}

PathWord path_of_composition(const Composition& c)
{
    validate(c);
    PathWord p;
    const auto kk = static_cast<std::size_t>(c.k);
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        p.append(Step::U, static_cast<std::size_t>(c.parts[i]));
        p.append(Step::D, kk);
        p.push_back(Step::L);
        if (i + 1 < c.parts.size()) {
            p.push_back(Step::D);
        }
    }
    return p;
}

std::vector<long> parse_int_list(std::string_view text)
{
    std::vector<long> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        std::string_view tok = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
            throw std::invalid_argument("not an integer list entry: '" + std::string(tok) + "'");
        }
        out.push_back(v);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::string format_int_list(const std::vector<long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace kbox
