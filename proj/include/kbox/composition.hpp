#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kbox/path.hpp"

namespace kbox {

/// Ascent lengths (a_1, ..., a_n) of a k-box path
///     U^{a_1} D^k L D  ...  U^{a_{n-1}} D^k L D  U^{a_n} D^k L.
/// Valid when sum a_i = (k+2)n - 1 and a_1 + ... + a_i >= (k+2)i for i < n.
struct Composition {
    int k = 1;
    std::vector<long> parts;

    std::size_t size() const { return parts.size(); }
    bool operator==(const Composition&) const = default;
};

class CompositionError : public std::invalid_argument {
public:
    /// index is 1-based; 0 means the total sum is wrong.
    CompositionError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Throws CompositionError naming the first failing index.
void validate(const Composition& c);

/// Requires k >= 1 and a k-box path; throws InvalidPath otherwise.
Composition composition_of(const PathWord& p, int k);

/// Requires k >= 1 and a valid composition.
PathWord path_of_composition(const Composition& c);

/// Comma-separated positive integers, e.g. "3,3,2". Empty text is the empty tuple.
std::vector<long> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<long>& v);

} // namespace kbox
