#pragma once

#include <span>
#include <vector>

#include "gaifman/two_structure.hpp"

namespace gaifman {

/// Default universe-size cap for exhaustive clan enumeration.
inline constexpr std::size_t kOracleLimit = 14;

/// True iff every vertex outside `members` reaches all of `members` through
/// edges of one single class. Singletons and the full universe are clans
/// vacuously. `members` must be nonempty, duplicate-free and within range.
bool is_clan(const two_structure& s, std::span<const vertex_id> members);

/// Exhaustive enumeration of all clans, in canonical order: by size, then
/// lexicographically by member ids. Refuses universes larger than `limit`.
std::vector<std::vector<vertex_id>> enumerate_clans(const two_structure& s,
                                                    std::size_t limit = kOracleLimit);

/// The clans that overlap no other clan in `clans`. Overlap means both
/// differences and the intersection are nonempty. `clans` must be the
/// complete clan list of one structure for the result to be meaningful.
std::vector<std::vector<vertex_id>> prime_clans(
    std::span<const std::vector<vertex_id>> clans);

/// Collapses each block to one synthetic vertex. Every block must be a clan
/// of `s` and the blocks must be pairwise disjoint; the color between two
/// blocks is the (verified) common class of all their cross edges.
two_structure quotient(const two_structure& s,
                       std::span<const std::vector<vertex_id>> blocks);

}  // namespace gaifman
