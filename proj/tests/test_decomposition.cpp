#include "gaifman/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gaifman/clans.hpp"
#include "gaifman/coloring.hpp"
#include "gaifman/errors.hpp"
#include "support.hpp"

using namespace gaifman;
using namespace gaifman::testing;

namespace {

two_structure example1_structure(const color_scheme& scheme) {
  auto tables = example1_tables();
  universe u = build_universe(tables);
  return build_two_structure(build_multiplicity_map(tables, u), scheme);
}

clan_node leaf_of(vertex_id v) {
  clan_node n;
  n.kind = node_kind::leaf;
  n.members = {v};
  return n;
}

clan_tree fold_in_order(const two_structure& s, const std::vector<vertex_id>& order) {
  clan_tree tree{leaf_of(order[0])};
  for (std::size_t i = 1; i < order.size(); ++i) {
    tree = insert_vertex(tree, s, order[i]);
  }
  return tree;
}

}  // namespace

TEST_SUITE_BEGIN("decomposition");

TEST_CASE("running example, plain: complete root over {a} and primitive {b,c,d,e}") {
  two_structure s = example1_structure(color_scheme::plain());
  clan_tree tree = decompose(s);

  clan_node inner;
  inner.kind = node_kind::primitive;
  inner.members = {1, 2, 3, 4};
  inner.children = {leaf_of(1), leaf_of(2), leaf_of(3), leaf_of(4)};

  clan_node root;
  root.kind = node_kind::complete;
  root.complete_class = 1;
  root.members = {0, 1, 2, 3, 4};
  root.children = {leaf_of(0), inner};

  CHECK(tree == clan_tree{root});
}

TEST_CASE("running example, full multiplicity coloring: primitive root, 5 leaves") {
  two_structure s = example1_structure(color_scheme::linear(1, 1));
  clan_tree tree = decompose(s);

  clan_node root;
  root.kind = node_kind::primitive;
  root.members = {0, 1, 2, 3, 4};
  root.children = {leaf_of(0), leaf_of(1), leaf_of(2), leaf_of(3), leaf_of(4)};

  CHECK(tree == clan_tree{root});
}

TEST_CASE("singleton universe decomposes to a bare leaf") {
  universe u;
  u.intern(item{"x", "x"});
  two_structure s(std::move(u), {}, {});
  clan_tree tree = decompose(s);
  CHECK(tree.root.kind == node_kind::leaf);
  CHECK(tree.root.members == std::vector<vertex_id>{0});
}

TEST_CASE("insert into a singleton tree gives a two-leaf complete root") {
  two_structure s = make_structure(2, {3});
  clan_tree tree = fold_in_order(s, {0, 1});
  CHECK(tree.root.kind == node_kind::complete);
  CHECK(tree.root.complete_class == 3);
  REQUIRE(tree.root.children.size() == 2);
  CHECK(tree.root.children[0].kind == node_kind::leaf);
  CHECK(tree.root.children[1].kind == node_kind::leaf);
}

TEST_CASE("inserting a duplicate vertex is an error") {
  two_structure s = make_structure(3, {1, 1, 1});
  clan_tree tree = fold_in_order(s, {0, 1});
  CHECK_THROWS_AS(insert_vertex(tree, s, 1), std::invalid_argument);
  CHECK_THROWS_AS(insert_vertex(tree, s, 9), std::invalid_argument);
}

TEST_CASE("all 120 insertion orders of the running example agree") {
  two_structure s = example1_structure(color_scheme::plain());
  clan_tree expected = decompose(s);
  std::vector<vertex_id> order{0, 1, 2, 3, 4};
  std::sort(order.begin(), order.end());
  do {
    CHECK(fold_in_order(s, order) == expected);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("exhaustive check against the brute-force oracle, 3 vertices") {
  for (class_ordinal c0 = 0; c0 < 3; ++c0) {
    for (class_ordinal c1 = 0; c1 < 3; ++c1) {
      for (class_ordinal c2 = 0; c2 < 3; ++c2) {
        two_structure s = make_structure(3, {c0, c1, c2});
        CHECK(node_map(decompose(s)) == node_map(oracle_tree(s)));
      }
    }
  }
}

TEST_CASE("exhaustive check against the brute-force oracle, 4 vertices, 3 classes") {
  std::vector<class_ordinal> colors(6);
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    for (int i = 0; i < 6; ++i) {
      colors[i] = static_cast<class_ordinal>(rest % 3);
      rest /= 3;
    }
    two_structure s = make_structure(4, colors);
    clan_tree mine = decompose(s);
    CHECK(node_map(mine) == node_map(oracle_tree(s)));
    CHECK(mine == oracle_tree(s));
  }
}

TEST_CASE("random structures match the oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  std::uniform_int_distribution<std::size_t> classes(2, 4);
  for (int round = 0; round < 80; ++round) {
    two_structure s = random_structure(rng, size(rng), classes(rng));
    CHECK(node_map(decompose(s)) == node_map(oracle_tree(s)));
  }
}

TEST_CASE("insertion order never matters") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_int_distribution<std::size_t> classes(2, 4);
  for (int round = 0; round < 15; ++round) {
    two_structure s = random_structure(rng, size(rng), classes(rng));
    clan_tree expected = decompose(s);
    std::vector<vertex_id> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(fold_in_order(s, order) == expected);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("every internal node is complete or primitive, and binary nodes complete") {
  std::mt19937 rng(5);
  for (int round = 0; round < 50; ++round) {
    two_structure s = random_structure(rng, 8, 3);
    clan_tree tree = decompose(s);
    auto nodes = node_map(tree);
    for (const auto& [members, kind] : nodes) {
      if (members.size() == 1) {
        CHECK(kind.first == node_kind::leaf);
      } else {
        CHECK(kind.first != node_kind::leaf);
      }
    }
    // Walk for the binary rule.
    std::vector<const clan_node*> stack{&tree.root};
    while (!stack.empty()) {
      const clan_node* n = stack.back();
      stack.pop_back();
      if (n->children.size() == 2) {
        CHECK(n->kind == node_kind::complete);
      }
      for (const clan_node& child : n->children) {
        stack.push_back(&child);
      }
    }
  }
}

TEST_CASE("relabeling classes relabels the tree but keeps its shape") {
  std::mt19937 rng(31);
  for (int round = 0; round < 30; ++round) {
    two_structure s = random_structure(rng, 7, 3);
    std::vector<class_ordinal> relabeled;
    for (vertex_id b = 1; b < s.size(); ++b) {
      for (vertex_id a = 0; a < b; ++a) {
        relabeled.push_back((s.color(a, b) + 1) % 3);
      }
    }
    two_structure t = make_structure(7, relabeled);
    auto mine = node_map(decompose(s));
    auto theirs = node_map(decompose(t));
    REQUIRE(mine.size() == theirs.size());
    for (auto it = mine.begin(); it != mine.end(); ++it) {
      auto other = theirs.find(it->first);
      REQUIRE(other != theirs.end());
      CHECK(it->second.first == other->second.first);
      if (it->second.first == node_kind::complete) {
        CHECK(other->second.second == (it->second.second + 1) % 3);
      }
    }
  }
}

TEST_CASE("leaf count equals the universe size") {
  std::mt19937 rng(77);
  for (int round = 0; round < 20; ++round) {
    two_structure s = random_structure(rng, 9, 2);
    auto nodes = node_map(decompose(s));
    std::size_t leaves = 0;
    for (const auto& [members, kind] : nodes) {
      leaves += members.size() == 1;
    }
    CHECK(leaves == s.size());
  }
}

TEST_CASE("elision leaves the running example alone") {
  two_structure s = example1_structure(color_scheme::plain());
  auto [t, report] = elide_isolated(s);
  CHECK(t.size() == s.size());
  CHECK(report.elided.empty());
  CHECK_FALSE(report.placeholder.has_value());
}

TEST_CASE("a single isolated vertex is kept") {
  // 0-1 solid, vertex 2 broken to both.
  two_structure s = make_structure(3, {1, 0, 0});
  auto [t, report] = elide_isolated(s);
  CHECK(t.size() == 3);
  CHECK(report.elided.empty());
}

TEST_CASE("two or more isolated vertices merge into a placeholder") {
  // 0-1 solid; 2 and 3 broken everywhere.
  two_structure s = make_structure(4, {1, 0, 0, 0, 0, 0});
  auto [t, report] = elide_isolated(s);
  REQUIRE(t.size() == 3);
  REQUIRE(report.placeholder.has_value());
  CHECK(report.placeholder->id == "Others(2)");
  CHECK(report.elided.size() == 2);
  CHECK(report.elided[0].id == "v02");
  CHECK(report.elided[1].id == "v03");
  // The placeholder is broken to every survivor.
  vertex_id placeholder = *t.vertices().find("Others(2)");
  for (vertex_id v = 0; v < t.size(); ++v) {
    if (v != placeholder) {
      CHECK(t.color(v, placeholder) == 0);
    }
  }
  CHECK(t.color(0, 1) == 1);
}

TEST_CASE("a fully disconnected structure is refused") {
  two_structure s = make_structure(3, {0, 0, 0});
  CHECK_THROWS_WITH_AS(elide_isolated(s), doctest::Contains("fully disconnected"),
                       data_error);
}

TEST_CASE("classify_node on small quotients") {
  two_structure pair = make_structure(2, {4});
  node_classification cls = classify_node(pair);
  CHECK(cls.kind == node_kind::complete);
  CHECK(cls.complete_class == 4);

  // The quotient of {b,c,d,e} in the running example under its singleton
  // children is primitive.
  two_structure s = example1_structure(color_scheme::plain());
  std::vector<vertex_id> inner{1, 2, 3, 4};
  two_structure q = s.restrict(inner);
  CHECK(classify_node(q).kind == node_kind::primitive);

  CHECK_THROWS_AS(classify_node(make_structure(1, {})), std::invalid_argument);
}

TEST_CASE("classify_node rejects structures violating the dichotomy") {
  // 0-1 and 0-2 solid, 1-2 broken: {1,2} is a nontrivial clan, and the
  // edges are not all equal, so this is no valid quotient of a prime tree.
  two_structure bad = make_structure(3, {1, 1, 0});
  CHECK_THROWS_AS(classify_node(bad), internal_error);
}

TEST_SUITE_END();
