#pragma once

#include <cstddef>

#include "kbox/composition.hpp"
#include "kbox/path.hpp"
#include "kbox/stream.hpp"

namespace kbox {

/// Every skew Dyck path of the given semilength, lexicographic (U < D < L).
/// Produced lazily by depth-first search; memory is O(semilength).
Stream<PathWord> generate_skew_dyck(std::size_t semilength);

/// Every Dyck path of the given semilength, lexicographic (U < D).
Stream<PathWord> generate_dyck(std::size_t semilength);

/// Every valid composition for k-box paths of size n (k >= 1), ordered so the
/// corresponding words are lexicographic.
Stream<Composition> generate_compositions(int k, std::size_t n);

/// Every k-box path of size n, lexicographic. For k = 0 these are the Dyck
/// paths of semilength n - 1.
Stream<PathWord> generate_k_box(int k, std::size_t n);

} // namespace kbox
