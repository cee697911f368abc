#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kbox/exact.hpp"

namespace kbox {

struct CheckRecord {
    std::string name;
    std::string range;
    bool passed = true;
    /// A kbox command line that reproduces the failing value.
    std::string counterexample;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    bool passed() const;
    /// One line per check, sorted by name, then an overall line.
    std::string to_text() const;
};

enum class Suite { All, Formulas, Bijections, Series };
Suite parse_suite(const std::string& s);

/// The closed forms the harness tests against brute force. Swappable so the
/// harness can be shown to catch a wrong formula.
struct FormulaSet {
    std::function<ExactInt(long k, long n)> box;
    std::function<ExactInt(long k, long n, long j)> returns;
    std::function<ExactInt(long k, long n, long j)> long_ascents;
};

FormulaSet default_formulas();
/// Returns count off by one at (k, n, j) = (1, 3, 2).
FormulaSet faulty_formulas();

/// Exhaustive checks cover k <= max_k and n <= max_n; identity checks run on
/// the fixed range k <= 5, n <= 20. The series suite uses t-order max_n and
/// x-order 3 max_n - 1.
VerificationReport run_verification(Suite suite, int max_k, int max_n, const FormulaSet& f = default_formulas());

} // namespace kbox
