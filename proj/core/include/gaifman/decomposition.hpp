#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gaifman/two_structure.hpp"

namespace gaifman {

enum class node_kind { leaf, complete, primitive };

/// One node of the prime-clan tree. Leaves are single vertices. An internal
/// node's member set is a prime clan; its children partition that set.
/// Complete nodes have all quotient edges among their children in one class;
/// primitive nodes have a quotient with only trivial clans. Nodes with
/// exactly two children are always complete.
struct clan_node {
  node_kind kind = node_kind::leaf;
  class_ordinal complete_class = 0;  // meaningful only when kind == complete
  std::vector<vertex_id> members;    // sorted ascending
  std::vector<clan_node> children;   // empty iff leaf

  bool operator==(const clan_node& other) const;
};

/// The unique prime-clan tree of a 2-structure: the laminar family of prime
/// clans arranged by containment, each internal node classified as complete
/// or primitive. Children are ordered by their lexicographically smallest
/// member id, so equal structures produce byte-identical renderings.
struct clan_tree {
  clan_node root;

  bool operator==(const clan_tree& other) const { return root == other.root; }
};

/// Which vertices were merged away by isolated-vertex elision, and the
/// placeholder that stands in for them.
struct elision_report {
  std::vector<item> elided;
  std::optional<item> placeholder;
};

/// Replaces the vertices whose edges are all broken (class 0) by a single
/// "Others(n)" placeholder vertex, itself broken to everything. Structures
/// with fewer than two such vertices come back unchanged. A structure where
/// every vertex is broken-only is refused.
std::pair<two_structure, elision_report> elide_isolated(const two_structure& s);

/// Builds the prime-clan tree by inserting vertices one at a time in
/// universe order. The tree is unique, so any insertion order gives the
/// same result.
clan_tree decompose(const two_structure& s);

/// Extends a prime-clan tree by one vertex. `tree` must be the tree of `s`
/// restricted to `tree`'s members, and `v` a vertex of `s` not yet in it.
///
/// The new vertex either slides down into the unique child it is compatible
/// with at every level, or settles at the first node where no single child
/// can absorb it. Settling rebuilds just that node: children the new vertex
/// splits are shattered into their largest subtrees it does not split, and
/// those pieces are recombined from their pairwise edge classes.
clan_tree insert_vertex(const clan_tree& tree, const two_structure& s, vertex_id v);

struct node_classification {
  node_kind kind = node_kind::complete;  // complete or primitive, never leaf
  class_ordinal complete_class = 0;
};

/// Classifies a quotient structure (at least 2 vertices): complete when all
/// edges share one class, primitive when it has only trivial clans. Any
/// other outcome is impossible for quotients of a prime-clan tree and
/// raises internal_error.
node_classification classify_node(const two_structure& q);

}  // namespace gaifman
