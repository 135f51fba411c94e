#pragma once

#include <string>
#include <vector>

#include "gaifman/coloring.hpp"
#include "gaifman/decomposition.hpp"

namespace gaifman {

struct edge_style {
  std::string line;   // dashed | solid
  std::string color;  // graphviz color name or #rrggbb
};

enum class render_format { dot, json };

struct render_options {
  /// Nodes with more nontrivial children than this are drawn collapsed,
  /// showing only their kind label.
  std::size_t expand_limit = 6;
  /// Nodes with at least this many leaf children draw them merged into a
  /// single "Others (n)" node.
  std::size_t others_limit = 8;
  render_format format = render_format::dot;
  /// Per-ordinal line styles; ordinal 0 is dashed, further ordinals cycle
  /// through the tail of the palette.
  std::vector<edge_style> palette = default_palette();

  static std::vector<edge_style> default_palette();
};

/// Graphviz rendering of the tree: leaves as ellipses, expanded clans as
/// box clusters with one dot per child and the quotient edges between them.
/// Output is byte-deterministic for fixed inputs.
std::string to_dot(const clan_tree& tree, const two_structure& s,
                   const render_options& opts = {});

/// Machine-readable rendering: the full tree (kind, class interval, members,
/// children), the elision report, scheme parameters and the universe size.
std::string to_json(const clan_tree& tree, const two_structure& s,
                    const color_scheme& scheme, const elision_report& report);

}  // namespace gaifman
