#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>

#include "gaifman/ingest.hpp"

namespace gaifman {

/// The labeled Gaifman graph: for every unordered pair of distinct items,
/// the number of tuples (across all tables) containing both. Storage is
/// sparse; absent pairs have multiplicity 0. Immutable once built.
class multiplicity_map {
 public:
  multiplicity_map(universe u, std::uint64_t total_tuples,
                   std::unordered_map<std::uint64_t, std::uint64_t> counts)
      : universe_(std::move(u)), total_tuples_(total_tuples), counts_(std::move(counts)) {}

  std::uint64_t count(vertex_id a, vertex_id b) const;
  std::uint64_t total_tuples() const { return total_tuples_; }
  const universe& vertices() const { return universe_; }

  /// The nonzero entries, keyed by pack(a, b). Iteration order is
  /// unspecified; callers must not let it leak into output.
  const std::unordered_map<std::uint64_t, std::uint64_t>& nonzero() const {
    return counts_;
  }

  static std::uint64_t pack(vertex_id a, vertex_id b);

 private:
  universe universe_;
  std::uint64_t total_tuples_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

/// Counts, for every unordered pair of distinct universe items, the tuples
/// containing both. `u` must be build_universe(tables).
multiplicity_map build_multiplicity_map(std::span<const table> tables, const universe& u);

/// Pair counts per multiplicity value. Includes the 0 entry for all absent
/// pairs when there are any; values sum to C(|U|, 2).
std::map<std::uint64_t, std::uint64_t> multiplicity_histogram(const multiplicity_map& m);

}  // namespace gaifman
