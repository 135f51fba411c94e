#include "gaifman/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gaifman/errors.hpp"

namespace gaifman {

namespace {

clan_node make_leaf(vertex_id v) {
  clan_node n;
  n.kind = node_kind::leaf;
  n.members = {v};
  return n;
}

// ---------------------------------------------------------------------------
// Clan machinery over an arbitrary point set with a color callback. Used both
// for classify_node and for rebuilding a tree node during insertion, where
// the points are whole subtrees rather than single vertices.
// ---------------------------------------------------------------------------

/// Smallest clan containing {seed_a, seed_b} among points 0..k-1, as a
/// membership mask. Grows by pulling in every outside point that tells two
/// current members apart.
template <typename ColorFn>
std::vector<bool> pair_closure(std::size_t k, std::size_t seed_a, std::size_t seed_b,
                               ColorFn&& color) {
  std::vector<bool> in(k, false);
  std::vector<class_ordinal> ref(k, 0);
  in[seed_a] = true;
  for (std::size_t z = 0; z < k; ++z) {
    if (z != seed_a) {
      ref[z] = color(z, seed_a);
    }
  }
  std::vector<std::size_t> queue{seed_b};
  in[seed_b] = true;
  while (!queue.empty()) {
    std::size_t m = queue.back();
    queue.pop_back();
    for (std::size_t z = 0; z < k; ++z) {
      if (!in[z] && color(z, m) != ref[z]) {
        in[z] = true;
        queue.push_back(z);
      }
    }
  }
  return in;
}

template <typename ColorFn>
bool has_nontrivial_proper_clan(std::size_t k, ColorFn&& color) {
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<bool> in = pair_closure(k, a, b, color);
      if (std::count(in.begin(), in.end(), true) < static_cast<long>(k)) {
        return true;
      }
    }
  }
  return false;
}

/// Components of the graph on 0..k-1 whose edges are the pairs NOT colored
/// `excluded`. Two or more components mean the whole point set is a
/// complete node of class `excluded`.
template <typename ColorFn>
std::vector<std::vector<std::size_t>> components_avoiding(std::size_t k,
                                                          class_ordinal excluded,
                                                          ColorFn&& color) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> seen(k, false);
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t z = 0; z < k; ++z) {
        if (!seen[z] && color(component[i], z) != excluded) {
          seen[z] = true;
          component.push_back(z);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

// ---------------------------------------------------------------------------
// Rebuilding a node from atoms. Atoms are subtrees that the inserted vertex
// does not split; the builder recombines them into the prime-clan tree of
// the atom-level structure, then expands each atom back in place.
// ---------------------------------------------------------------------------

struct atom_builder {
  std::vector<clan_node> atoms;        // consumed exactly once each
  std::vector<vertex_id> reps;         // one representative member per atom
  const two_structure* s = nullptr;

  class_ordinal color(std::size_t a, std::size_t b) const {
    return s->color(reps[a], reps[b]);
  }

  /// A complete node never keeps a child complete node of the same class;
  /// such a child is not a clan boundary and its children move up.
  static void absorb_same_class_children(clan_node& n) {
    if (n.kind != node_kind::complete) {
      return;
    }
    std::vector<clan_node> flattened;
    for (clan_node& child : n.children) {
      if (child.kind == node_kind::complete && child.complete_class == n.complete_class) {
        for (clan_node& grandchild : child.children) {
          flattened.push_back(std::move(grandchild));
        }
      } else {
        flattened.push_back(std::move(child));
      }
    }
    n.children = std::move(flattened);
  }

  clan_node build(const std::vector<std::size_t>& pts) {
    if (pts.size() == 1) {
      return std::move(atoms[pts[0]]);
    }
    auto local = [&](std::size_t a, std::size_t b) { return color(pts[a], pts[b]); };

    // Complete case: some class, removed, disconnects the points. Only
    // classes on edges at the first point can do that.
    std::vector<class_ordinal> candidates;
    for (std::size_t j = 1; j < pts.size(); ++j) {
      candidates.push_back(local(0, j));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (class_ordinal excluded : candidates) {
      auto components = components_avoiding(pts.size(), excluded, local);
      if (components.size() >= 2) {
        clan_node n;
        n.kind = node_kind::complete;
        n.complete_class = excluded;
        for (const auto& component : components) {
          n.children.push_back(build(project(pts, component)));
        }
        absorb_same_class_children(n);
        return n;
      }
    }

    // Primitive case: the children are the maximal proper clans. The block
    // of point x is exactly the set of points whose pair closure with x
    // stays proper.
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> covered(pts.size(), false);
    for (std::size_t x = 0; x < pts.size(); ++x) {
      if (covered[x]) {
        continue;
      }
      std::vector<bool> block(pts.size(), false);
      block[x] = true;
      for (std::size_t y = 0; y < pts.size(); ++y) {
        if (y == x || covered[y] || block[y]) {
          continue;
        }
        std::vector<bool> cl = pair_closure(pts.size(), x, y, local);
        if (std::count(cl.begin(), cl.end(), true) < static_cast<long>(pts.size())) {
          for (std::size_t z = 0; z < pts.size(); ++z) {
            if (cl[z]) {
              block[z] = true;
            }
          }
        }
      }
      std::vector<std::size_t> members;
      for (std::size_t z = 0; z < pts.size(); ++z) {
        if (block[z]) {
          covered[z] = true;
          members.push_back(z);
        }
      }
      blocks.push_back(std::move(members));
    }
    if (blocks.size() < 3) {
      throw internal_error("decompose: point set is neither complete nor primitive");
    }
    clan_node n;
    n.kind = node_kind::primitive;
    for (const auto& block : blocks) {
      n.children.push_back(build(project(pts, block)));
    }
    return n;
  }

  static std::vector<std::size_t> project(const std::vector<std::size_t>& pts,
                                          const std::vector<std::size_t>& local_indices) {
    std::vector<std::size_t> out;
    out.reserve(local_indices.size());
    for (std::size_t i : local_indices) {
      out.push_back(pts[i]);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Incremental insertion.
// ---------------------------------------------------------------------------

/// True when v's edges into n's members all share one class (returned via
/// out). Leaves are always uniform.
bool uniform_toward(const clan_node& n, const two_structure& s, vertex_id v,
                    class_ordinal* out) {
  class_ordinal first = s.color(v, n.members[0]);
  for (vertex_id w : n.members) {
    if (s.color(v, w) != first) {
      return false;
    }
  }
  *out = first;
  return true;
}

clan_node attach_uniform(const clan_node& n, vertex_id v, class_ordinal kappa) {
  if (n.kind == node_kind::complete && n.complete_class == kappa) {
    clan_node r = n;
    r.children.push_back(make_leaf(v));
    return r;
  }
  clan_node r;
  r.kind = node_kind::complete;
  r.complete_class = kappa;
  r.children.push_back(n);
  r.children.push_back(make_leaf(v));
  return r;
}

/// Largest subtrees of n that v does not split, in child order.
void pure_frontier(const clan_node& n, const two_structure& s, vertex_id v,
                   std::vector<clan_node>& atoms) {
  class_ordinal kappa;
  if (uniform_toward(n, s, v, &kappa)) {
    atoms.push_back(n);
    return;
  }
  for (const clan_node& child : n.children) {
    pure_frontier(child, s, v, atoms);
  }
}

clan_node rebuild_with_vertex(const clan_node& n, const two_structure& s, vertex_id v) {
  atom_builder builder;
  builder.s = &s;
  for (const clan_node& child : n.children) {
    pure_frontier(child, s, v, builder.atoms);
  }
  builder.atoms.push_back(make_leaf(v));
  builder.reps.reserve(builder.atoms.size());
  for (const clan_node& atom : builder.atoms) {
    builder.reps.push_back(atom.members[0]);
  }
  std::vector<std::size_t> all(builder.atoms.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  return builder.build(all);
}

clan_node insert_into(const clan_node& n, const two_structure& s, vertex_id v) {
  class_ordinal kappa;
  if (uniform_toward(n, s, v, &kappa)) {
    return attach_uniform(n, v, kappa);
  }

  // v splits n, so n is internal. v can slide into child j only if every
  // other child sees v exactly the way it sees child j; at most one child
  // qualifies. With none, v settles here and this node is rebuilt.
  const std::size_t m = n.children.size();
  std::vector<bool> pure(m);
  std::vector<class_ordinal> toward(m);
  for (std::size_t i = 0; i < m; ++i) {
    pure[i] = uniform_toward(n.children[i], s, v, &toward[i]);
  }
  int target = -1;
  for (std::size_t j = 0; j < m && target == -1; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (i == j) {
        continue;
      }
      class_ordinal quotient_color =
          s.color(n.children[i].members[0], n.children[j].members[0]);
      ok = pure[i] && toward[i] == quotient_color;
    }
    if (ok) {
      target = static_cast<int>(j);
    }
  }
  if (target < 0) {
    return rebuild_with_vertex(n, s, v);
  }
  clan_node r = n;
  r.children[target] = insert_into(n.children[target], s, v);
  atom_builder::absorb_same_class_children(r);
  return r;
}

/// Recomputes member lists bottom-up and orders children by their smallest
/// member id, so structurally equal trees compare and render identically.
void canonicalize(clan_node& n, const universe& u) {
  if (n.kind == node_kind::leaf) {
    return;
  }
  for (clan_node& child : n.children) {
    canonicalize(child, u);
  }
  n.members.clear();
  for (const clan_node& child : n.children) {
    n.members.insert(n.members.end(), child.members.begin(), child.members.end());
  }
  std::sort(n.members.begin(), n.members.end());

  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(n.children.size());
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const std::string* min_id = &u[n.children[i].members[0]].id;
    for (vertex_id w : n.children[i].members) {
      if (u[w].id < *min_id) {
        min_id = &u[w].id;
      }
    }
    keys.emplace_back(*min_id, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<clan_node> ordered;
  ordered.reserve(n.children.size());
  for (const auto& [id, index] : keys) {
    ordered.push_back(std::move(n.children[index]));
  }
  n.children = std::move(ordered);
}

bool tree_contains(const clan_node& n, vertex_id v) {
  return std::binary_search(n.members.begin(), n.members.end(), v);
}

}  // namespace

bool clan_node::operator==(const clan_node& other) const {
  if (kind != other.kind || members != other.members ||
      children.size() != other.children.size()) {
    return false;
  }
  if (kind == node_kind::complete && complete_class != other.complete_class) {
    return false;
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!(children[i] == other.children[i])) {
      return false;
    }
  }
  return true;
}

std::pair<two_structure, elision_report> elide_isolated(const two_structure& s) {
  std::vector<vertex_id> isolated;
  std::vector<vertex_id> kept;
  for (vertex_id x = 0; x < s.size(); ++x) {
    bool broken_only = true;
    for (vertex_id y = 0; y < s.size() && broken_only; ++y) {
      if (y != x && s.color(x, y) != 0) {
        broken_only = false;
      }
    }
    (broken_only ? isolated : kept).push_back(x);
  }
  if (isolated.size() == s.size()) {
    throw data_error("elide_isolated: structure is fully disconnected");
  }
  if (isolated.size() < 2) {
    return {s, elision_report{}};
  }

  elision_report report;
  for (vertex_id x : isolated) {
    report.elided.push_back(s.vertices()[x]);
  }
  std::string count = std::to_string(isolated.size());
  report.placeholder = item{"Others(" + count + ")", "Others (" + count + ")"};

  universe u;
  for (vertex_id x : kept) {
    u.intern(s.vertices()[x]);
  }
  u.intern(*report.placeholder);

  const std::size_t n = kept.size() + 1;
  std::vector<class_ordinal> colors(n * (n - 1) / 2, 0);
  for (std::size_t b = 1; b < kept.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      colors[two_structure::pair_index(static_cast<vertex_id>(a),
                                       static_cast<vertex_id>(b))] =
          s.color(kept[a], kept[b]);
    }
  }
  std::vector<edge_class> table(s.classes().begin(), s.classes().end());
  return {two_structure(std::move(u), std::move(colors), std::move(table)),
          std::move(report)};
}

clan_tree insert_vertex(const clan_tree& tree, const two_structure& s, vertex_id v) {
  if (v >= s.size()) {
    throw std::invalid_argument("insert_vertex: vertex out of range");
  }
  if (tree_contains(tree.root, v)) {
    throw std::invalid_argument("insert_vertex: vertex already present");
  }
  clan_tree out{insert_into(tree.root, s, v)};
  canonicalize(out.root, s.vertices());
  return out;
}

clan_tree decompose(const two_structure& s) {
  clan_tree tree{make_leaf(0)};
  for (vertex_id v = 1; v < s.size(); ++v) {
    tree = insert_vertex(tree, s, v);
  }
  return tree;
}

node_classification classify_node(const two_structure& q) {
  const std::size_t k = q.size();
  if (k < 2) {
    throw std::invalid_argument("classify_node: need at least 2 vertices");
  }
  class_ordinal first = q.color(0, 1);
  bool all_equal = true;
  for (vertex_id b = 1; b < k && all_equal; ++b) {
    for (vertex_id a = 0; a < b && all_equal; ++a) {
      all_equal = q.color(a, b) == first;
    }
  }
  if (all_equal) {
    return {node_kind::complete, first};
  }
  auto color = [&](std::size_t a, std::size_t b) {
    return q.color(static_cast<vertex_id>(a), static_cast<vertex_id>(b));
  };
  if (has_nontrivial_proper_clan(k, color)) {
    throw internal_error("classify_node: quotient is neither complete nor primitive");
  }
  return {node_kind::primitive, 0};
}

}  // namespace gaifman
