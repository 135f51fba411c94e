#pragma once

#include <cstdint>
#include <optional>

#include "gaifman/multiplicity.hpp"
#include "gaifman/two_structure.hpp"

namespace gaifman {

enum class scheme_kind { plain, threshold, linear, exponential };

/// Rule mapping a pair multiplicity to an edge equivalence class.
///
/// Ordinal 0 is always the broken class. The preimage of every ordinal is a
/// contiguous interval of multiplicities, ordinals increase with interval
/// lower bounds, and an upper threshold (when set) collapses everything at
/// or above it into a single unbounded top class.
class color_scheme {
 public:
  /// Broken iff multiplicity is 0.
  static color_scheme plain();

  /// Broken iff multiplicity <= k; one solid class above. k >= 1.
  static color_scheme threshold(std::uint64_t k);

  /// Fixed-width intervals starting at `lower` (default: the width itself,
  /// so the first interval plays the broken role).
  static color_scheme linear(std::uint64_t width,
                             std::optional<std::uint64_t> lower = std::nullopt,
                             std::optional<std::uint64_t> upper = std::nullopt);

  /// Intervals [lower*base^i, lower*base^(i+1)), computed in exact integer
  /// arithmetic. base >= 2, lower >= 1.
  static color_scheme exponential(std::uint64_t base = 2, std::uint64_t lower = 1,
                                  std::optional<std::uint64_t> upper = std::nullopt);

  class_ordinal color_of(std::uint64_t multiplicity) const;

  /// The multiplicity interval a given ordinal stands for.
  edge_class descriptor(class_ordinal ordinal) const;

  scheme_kind kind() const { return kind_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t width() const { return width_; }
  std::uint64_t base() const { return base_; }
  std::uint64_t lower() const { return lower_; }
  std::optional<std::uint64_t> upper() const { return upper_; }

 private:
  color_scheme() = default;

  /// Ordinal of the unbounded top class when an upper threshold is set.
  class_ordinal top_ordinal() const;

  scheme_kind kind_ = scheme_kind::plain;
  std::uint64_t k_ = 0;
  std::uint64_t width_ = 0;
  std::uint64_t base_ = 0;
  std::uint64_t lower_ = 0;
  std::optional<std::uint64_t> upper_;
};

/// The natural completion: a total coloring of all pairs of distinct
/// universe items by their multiplicity class. Requires |U| >= 2.
two_structure build_two_structure(const multiplicity_map& m, const color_scheme& scheme);

}  // namespace gaifman
