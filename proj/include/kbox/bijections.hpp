#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kbox/composition.hpp"
#include "kbox/path.hpp"
#include "kbox/trees.hpp"

namespace kbox {

/// A k-box path written as  mu_1 U mu_2 U ... mu_{k+1} U D^k L  with every
/// mu_i an augmented (k+1)-Dyck path. For k = 0 there is a single part: the
/// Dyck path itself (the augmented 1-Dyck path with its UL factors cancelled).
struct BoxDecomposition {
    int k = 1;
    std::vector<PathWord> parts;

    bool operator==(const BoxDecomposition&) const = default;
};

/// Parts joined by '|'; an empty part is the empty string.
std::string to_string(const BoxDecomposition& d);

/// mu_1 ends at the penultimate return to the x-axis; after skipping one U,
/// mu_2 ends at the penultimate return to y = 1 of the remainder; and so on.
BoxDecomposition decompose_box(const PathWord& p, int k);
PathWord compose_box(const BoxDecomposition& d);

/// (k+1)-tuple of (k+2)-ary trees with n - 1 nodes in total.
TreeTuple box_to_tree_tuple(const PathWord& p, int k);
PathWord tree_tuple_to_box(const TreeTuple& t, int k);

/// Path with steps U = (1,1) and D = (k,-k) that ends on the x-axis and never
/// goes below y = -t.
struct KtDyckPath {
    int k = 1;
    int t = 0;
    std::vector<KStep> steps;

    std::size_t size() const;
    bool operator==(const KtDyckPath&) const = default;
};

std::string to_string(const KtDyckPath& p);
KtDyckPath parse_kt_dyck(std::string_view text, int k, int t);
bool is_valid(const KtDyckPath& p);

/// Word over {U, D^(k+1)} obtained by deleting the final U D^k L and
/// contracting each U D^k L D to one big down step. It is a prefix of a
/// (k+1)-Dyck path that ends at height k.
std::vector<KStep> box_to_raised_prefix(const PathWord& p, int k);

/// k-box path of size n to (k+1)_k-Dyck path of size n - 1: the raised prefix
/// lowered by k with its first k (up) steps removed. The identity for k = 0.
KtDyckPath box_to_kt_dyck(const PathWord& p, int k);
PathWord kt_dyck_to_box(const KtDyckPath& q);

/// Strictly increasing (s_1, ..., s_m) with k*i <= s_i <= k*m + l.
struct ThresholdSequence {
    int k = 3;
    int l = 1;
    std::vector<long> entries;

    bool operator==(const ThresholdSequence&) const = default;
};

class ThresholdError : public std::invalid_argument {
public:
    /// index is 1-based.
    ThresholdError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Throws ThresholdError naming the first failing index.
void validate(const ThresholdSequence& s);

/// Prefix sums s_i = a_1 + ... + a_i of the first n - 1 ascent lengths: a
/// (k+2, k)-threshold sequence of length n - 1.
ThresholdSequence box_to_threshold(const PathWord& p, int k);
/// a_i = s_i - s_{i-1} with s_0 = 0 and s_n = (k+2)n - 1, k = s.l.
PathWord threshold_to_box(const ThresholdSequence& s);

/// Moves the first U after the first return to the front of the path. Takes
/// a k-box path with at least two returns to one with one return fewer.
PathWord return_injection(const PathWord& p, int k);

struct NotInvertible {
    std::string reason;
};

/// Deletes the first U and reinserts it right after the first return to
/// y = 1. Yields NotInvertible when that does not produce a preimage, e.g.
/// when the return to y = 1 sits inside a D^k L D or the final D^k L factor.
std::variant<PathWord, NotInvertible> return_injection_inverse(const PathWord& q, int k);

/// k-box path to (k+1)-box path of the same size with every ascent long:
/// each U D^k L becomes U U D^{k+1} L. For k = 0 each D of the Dyck path
/// becomes U U D L D and U U D L is appended.
PathWord embed_all_long(const PathWord& p, int k);
/// Inverse on (k+1)-box paths whose ascents are all long.
PathWord embed_all_long_inverse(const PathWord& q, int k);

/// Ascent lengths of a k-box path, valid for every k >= 0. For k = 0 they are
/// read off the 0-box word U^{a_1} L D ... U^{a_n} L that a Dyck path stands for.
std::vector<long> box_parts(const PathWord& p, int k);
/// Inverse of box_parts; validates the composition conditions.
PathWord box_from_parts(const std::vector<long>& parts, int k);

} // namespace kbox
