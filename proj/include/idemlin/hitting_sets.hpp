#pragma once

#include <cstddef>
#include <vector>

namespace idemlin {

using IndexSet = std::vector<std::size_t>;

/// All inclusion-minimal subsets of {0..universe-1} meeting every set in
/// `sets` (minimal transversals), each sorted ascending, the list sorted
/// lexicographically. No sets yields the single empty transversal; an empty
/// member set yields none.
///
/// Enumeration follows the MMCS scheme: branch on the elements of an
/// uncovered set with the fewest remaining candidates, and only extend the
/// partial solution while every chosen element still has a critical set
/// (one it alone hits). Each minimal transversal is produced exactly once.
std::vector<IndexSet> minimal_hitting_sets(const std::vector<IndexSet>& sets, std::size_t universe);

}  // namespace idemlin
