#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaifman/ingest.hpp"

namespace gaifman {

/// Edge equivalence class identifier. Ordinal 0 is reserved for the
/// "broken" class (pairs that never co-occur, rendered dashed).
using class_ordinal = std::uint32_t;

/// An edge class together with the half-open multiplicity interval it
/// stands for. `hi` is exclusive; an absent `hi` means unbounded.
struct edge_class {
  class_ordinal ordinal = 0;
  std::uint64_t lo = 0;
  std::optional<std::uint64_t> hi;

  /// Compact human-readable form of the interval, e.g. "2", "25-49", ">=1000".
  std::string label() const;

  friend bool operator==(const edge_class&, const edge_class&) = default;
};

/// A complete edge-colored graph: a universe plus a total symmetric
/// assignment of edge classes to all unordered pairs of distinct vertices.
/// Immutable once constructed and safe to share across threads.
class two_structure {
 public:
  /// `colors` holds the upper triangle: the pair (a, b) with a < b lives at
  /// index b*(b-1)/2 + a. `class_table` must provide a descriptor for every
  /// ordinal that occurs.
  two_structure(universe u, std::vector<class_ordinal> colors,
                std::vector<edge_class> class_table);

  class_ordinal color(vertex_id a, vertex_id b) const {
    return colors_[pair_index(a, b)];
  }

  const universe& vertices() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  /// The edge classes that actually occur, in ordinal order.
  std::span<const edge_class> classes() const { return used_; }

  /// Descriptor lookup for any ordinal known to the structure.
  const edge_class& class_info(class_ordinal ordinal) const;

  /// Induced substructure on `keep` (vertex order preserved as given).
  two_structure restrict(std::span<const vertex_id> keep) const;

  static std::size_t pair_index(vertex_id a, vertex_id b);

 private:
  universe universe_;
  std::vector<class_ordinal> colors_;
  std::vector<edge_class> table_;
  std::vector<edge_class> used_;
};

}  // namespace gaifman
