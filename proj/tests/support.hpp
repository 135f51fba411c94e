#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gaifman/clans.hpp"
#include "gaifman/decomposition.hpp"
#include "gaifman/ingest.hpp"
#include "gaifman/two_structure.hpp"

namespace gaifman::testing {

/// Structure over n vertices named v00, v01, ... with the given upper
/// triangle of colors (pair (a,b), a<b at index b*(b-1)/2+a).
two_structure make_structure(std::size_t n, std::vector<class_ordinal> colors);

/// Uniformly random coloring over `classes` classes.
two_structure random_structure(std::mt19937& rng, std::size_t n, std::size_t classes);

/// Parses delimiter-separated text from a string.
table parse_text(const std::string& text, const ingest_options& opts = {},
                 const std::string& name = "test");

/// The three-tuple running example: a,b,c / a,d,e / a,c,d (raw naming).
std::vector<table> example1_tables();

/// Prime-clan tree assembled by brute force, independently of decompose:
/// exhaustive clan enumeration, overlap filtering, containment nesting and
/// quotient classification.
clan_tree oracle_tree(const two_structure& s);

/// Flattened view for comparisons: member set -> (kind, complete class).
std::map<std::vector<vertex_id>, std::pair<node_kind, class_ordinal>> node_map(
    const clan_tree& tree);

/// Finds the node whose member ids are exactly `ids`, or nullptr.
const clan_node* find_node(const clan_node& root, const two_structure& s,
                           std::vector<std::string> ids);

}  // namespace gaifman::testing
