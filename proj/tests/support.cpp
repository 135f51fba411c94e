#include "support.hpp"

#include <algorithm>
#include <sstream>

namespace gaifman::testing {

two_structure make_structure(std::size_t n, std::vector<class_ordinal> colors) {
  universe u;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "v" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    u.intern(item{id, id});
  }
  class_ordinal max_ordinal = 0;
  for (class_ordinal c : colors) {
    max_ordinal = std::max(max_ordinal, c);
  }
  std::vector<edge_class> table;
  for (class_ordinal c = 0; c <= max_ordinal; ++c) {
    table.push_back(edge_class{c, c, c + 1});
  }
  return two_structure(std::move(u), std::move(colors), std::move(table));
}

two_structure random_structure(std::mt19937& rng, std::size_t n, std::size_t classes) {
  std::uniform_int_distribution<class_ordinal> pick(
      0, static_cast<class_ordinal>(classes - 1));
  std::vector<class_ordinal> colors(n * (n - 1) / 2);
  for (class_ordinal& c : colors) {
    c = pick(rng);
  }
  return make_structure(n, std::move(colors));
}

table parse_text(const std::string& text, const ingest_options& opts,
                 const std::string& name) {
  std::istringstream in(text);
  return parse_table(in, name, opts);
}

std::vector<table> example1_tables() {
  ingest_options opts;
  opts.header = false;
  opts.naming = naming_mode::raw;
  return {parse_text("a,b,c\na,d,e\na,c,d\n", opts, "example1")};
}

namespace {

bool proper_subset(const std::vector<vertex_id>& a, const std::vector<vertex_id>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

clan_node oracle_node(const std::vector<vertex_id>& members,
                      const std::vector<std::vector<vertex_id>>& primes,
                      const two_structure& s) {
  clan_node n;
  n.members = members;
  if (members.size() == 1) {
    n.kind = node_kind::leaf;
    return n;
  }
  // Children: the maximal prime clans properly contained in this node.
  std::vector<std::vector<vertex_id>> inside;
  for (const auto& p : primes) {
    if (proper_subset(p, members)) {
      inside.push_back(p);
    }
  }
  std::vector<std::vector<vertex_id>> blocks;
  for (const auto& p : inside) {
    bool maximal = std::none_of(inside.begin(), inside.end(),
                                [&](const std::vector<vertex_id>& q) {
                                  return proper_subset(p, q);
                                });
    if (maximal) {
      blocks.push_back(p);
    }
  }
  node_classification cls = classify_node(quotient(s, blocks));
  n.kind = cls.kind;
  n.complete_class = cls.complete_class;
  for (const auto& block : blocks) {
    n.children.push_back(oracle_node(block, primes, s));
  }
  // Same child order decompose uses: lexicographically smallest member id.
  std::sort(n.children.begin(), n.children.end(),
            [&](const clan_node& a, const clan_node& b) {
              auto min_id = [&](const clan_node& c) {
                std::string best = s.vertices()[c.members[0]].id;
                for (vertex_id v : c.members) {
                  best = std::min(best, s.vertices()[v].id);
                }
                return best;
              };
              return min_id(a) < min_id(b);
            });
  return n;
}

}  // namespace

clan_tree oracle_tree(const two_structure& s) {
  auto clans = enumerate_clans(s);
  auto primes = prime_clans(clans);
  std::vector<vertex_id> all;
  for (vertex_id v = 0; v < s.size(); ++v) {
    all.push_back(v);
  }
  return clan_tree{oracle_node(all, primes, s)};
}

namespace {

void collect(const clan_node& n,
             std::map<std::vector<vertex_id>, std::pair<node_kind, class_ordinal>>& out) {
  class_ordinal cls = n.kind == node_kind::complete ? n.complete_class : 0;
  out.emplace(n.members, std::make_pair(n.kind, cls));
  for (const clan_node& child : n.children) {
    collect(child, out);
  }
}

}  // namespace

std::map<std::vector<vertex_id>, std::pair<node_kind, class_ordinal>> node_map(
    const clan_tree& tree) {
  std::map<std::vector<vertex_id>, std::pair<node_kind, class_ordinal>> out;
  collect(tree.root, out);
  return out;
}

const clan_node* find_node(const clan_node& root, const two_structure& s,
                           std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<std::string> here;
  for (vertex_id v : root.members) {
    here.push_back(s.vertices()[v].id);
  }
  std::sort(here.begin(), here.end());
  if (here == ids) {
    return &root;
  }
  for (const clan_node& child : root.children) {
    if (const clan_node* found = find_node(child, s, ids)) {
      return found;
    }
  }
  return nullptr;
}

}  // namespace gaifman::testing
