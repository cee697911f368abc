#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace kbox {

// Command implementations behind the `kbox` tool. Each returns the exact text
// written to standard output, so the tool and the tests share one code path.

/// Bad flag combinations; the tool reports these with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Stat { None, Returns, LongAscents };
Stat parse_stat(const std::string& s);

/// One value, or the row j = 1..n separated by spaces when j is absent.
std::string cmd_count(long k, long n, Stat stat, std::optional<long> j);

/// Triangular table, rows n = 1..rows and columns j = 1..n. The header is
/// "n\j" followed by the column indices; every column is right-aligned to
/// its widest cell, cells are separated by one space, out-of-range cells
/// are blank and trailing blanks are dropped.
std::string cmd_table(Stat stat, long k, long rows);

enum class Family { Skew, Dyck, Box, Tailed, Augmented, Trees };
Family parse_family(const std::string& s);

enum class OutputFormat { Words, Compositions };
OutputFormat parse_format(const std::string& s);

/// One object per line. For skew and dyck families n is the semilength; for
/// trees k is the arity and n the node count.
std::string cmd_enumerate(Family family, long k, long n, OutputFormat format);

enum class Target { Trees, KtDyck, Threshold, Decomposition, Composition };
Target parse_target(const std::string& s);

/// Forward: input is a k-box path word, or a composition when
/// input_is_composition is set. Inverse: input is the image text (tree tuple
/// "t1;t2;...", k_t-Dyck word, threshold list "s1,s2,...", decomposition
/// "mu1|mu2|...", composition "a1,a2,...") and the output is the path word.
std::string cmd_biject(Target to, long k, const std::string& input, bool input_is_composition, bool inverse);

enum class Sequence { BoxCounts, TailedCounts, Returns, LongAscents, ReturnsDiagonal };
Sequence parse_sequence(const std::string& s);

/// OEIS b-file: "index value" per line, 1-based, LF endings, no header.
/// Triangles are flattened row by row (n = 1, 2, ...; j = 1..n).
std::string cmd_bfile(Sequence seq, long k, long count);

} // namespace kbox
