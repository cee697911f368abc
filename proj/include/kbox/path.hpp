#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbox {

/// U rises by one, D falls by one moving right, L falls by one moving left.
enum class Step : unsigned char { U, D, L };

char to_char(Step s);

/// A word over {U, D, L}. Carries no validity promise; see classify().
class PathWord {
public:
    PathWord() = default;
    explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }

    std::size_t count(Step s) const;

    /// Number of U steps.
    std::size_t semilength() const { return count(Step::U); }

    /// Height after each step; heights()[i] is the height once step i is taken.
    std::vector<long> heights() const;

    void push_back(Step s) { steps_.push_back(s); }
    void append(const PathWord& other);
    void append(Step s, std::size_t times);

    /// Lexicographic with U < D < L.
    auto operator<=>(const PathWord&) const = default;

private:
    std::vector<Step> steps_;
};

std::string to_string(const PathWord& p);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Thrown when an operation receives a path outside its required family.
class InvalidPath : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses the letters U, D, L (case-sensitive). Empty text is the empty path.
PathWord parse_path(std::string_view text);

/// Membership report for a word. Classification never throws; reasons for
/// rejection are collected in diagnostics.
struct PathClass {
    bool skew_dyck = false;
    bool dyck = false;
    /// Set when k was supplied and the word is a k-box path of this size.
    /// For k = 0 this means a Dyck path of semilength size - 1.
    std::optional<std::size_t> box_size;
    bool tailed = false;
    /// Set when k >= 2 was supplied and the word is an augmented k-Dyck path.
    std::optional<std::size_t> augmented_size;
    std::vector<std::string> diagnostics;

    bool is_box() const { return box_size.has_value(); }
};

PathClass classify(const PathWord& p, std::optional<int> k = std::nullopt);

/// Occurrences of the factor U D^k L.
std::size_t factor_count(const PathWord& p, int k);

/// Occurrences of the factor U D^(k-1) L D.
std::size_t augmented_factor_count(const PathWord& p, int k);

struct PathStats {
    std::size_t semilength = 0;
    /// D or L steps ending on the x-axis.
    std::size_t returns = 0;
    /// Maximal runs of U steps.
    std::size_t ascents = 0;
    /// Maximal runs of at least two U steps.
    std::size_t long_ascents = 0;
};

/// Requires a valid skew Dyck path; throws InvalidPath otherwise.
PathStats stats(const PathWord& p);

/// Returns and long ascents of a k-box path in the counting convention of the
/// enumeration formulas. For k >= 1 these are the plain word statistics. For
/// k = 0 the word is a Dyck path standing for the 0-box path obtained by
/// replacing each D with ULD and appending UL, which adds one return.
PathStats box_stats(const PathWord& p, int k);

/// Reads one path per line (letters only) and writes one path per line.
std::vector<PathWord> read_paths(std::string_view text);

} // namespace kbox
