#include "gaifman/clans.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaifman/errors.hpp"

namespace gaifman {

namespace {

bool overlap(const std::vector<vertex_id>& a, const std::vector<vertex_id>& b) {
  // Sorted-vector sweep counting common and private elements.
  std::size_t i = 0;
  std::size_t j = 0;
  bool common = false;
  bool only_a = false;
  bool only_b = false;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      common = true;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      only_a = true;
      ++i;
    } else {
      only_b = true;
      ++j;
    }
  }
  only_a = only_a || i < a.size();
  only_b = only_b || j < b.size();
  return common && only_a && only_b;
}

}  // namespace

bool is_clan(const two_structure& s, std::span<const vertex_id> members) {
  if (members.empty()) {
    throw std::invalid_argument("is_clan: empty vertex set");
  }
  std::vector<bool> inside(s.size(), false);
  for (vertex_id v : members) {
    if (v >= s.size()) {
      throw std::invalid_argument("is_clan: vertex out of range");
    }
    if (inside[v]) {
      throw std::invalid_argument("is_clan: duplicate vertex");
    }
    inside[v] = true;
  }
  for (vertex_id x = 0; x < s.size(); ++x) {
    if (inside[x]) {
      continue;
    }
    class_ordinal expected = s.color(x, members[0]);
    for (vertex_id y : members) {
      if (s.color(x, y) != expected) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<vertex_id>> enumerate_clans(const two_structure& s,
                                                    std::size_t limit) {
  const std::size_t n = s.size();
  if (n > limit) {
    throw data_error("enumerate_clans: universe has " + std::to_string(n) +
                     " items, more than the exhaustive-search limit of " +
                     std::to_string(limit));
  }
  std::vector<std::vector<vertex_id>> clans;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<vertex_id> members;
    for (vertex_id v = 0; v < n; ++v) {
      if (mask & (1u << v)) {
        members.push_back(v);
      }
    }
    if (is_clan(s, members)) {
      clans.push_back(std::move(members));
    }
  }
  auto id_key = [&](const std::vector<vertex_id>& members) {
    std::vector<std::string> ids;
    ids.reserve(members.size());
    for (vertex_id v : members) {
      ids.push_back(s.vertices()[v].id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::sort(clans.begin(), clans.end(),
            [&](const std::vector<vertex_id>& a, const std::vector<vertex_id>& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return id_key(a) < id_key(b);
            });
  return clans;
}

std::vector<std::vector<vertex_id>> prime_clans(
    std::span<const std::vector<vertex_id>> clans) {
  std::vector<std::vector<vertex_id>> primes;
  for (const auto& candidate : clans) {
    bool overlapped = std::any_of(clans.begin(), clans.end(),
                                  [&](const std::vector<vertex_id>& other) {
                                    return overlap(candidate, other);
                                  });
    if (!overlapped) {
      primes.push_back(candidate);
    }
  }
  return primes;
}

two_structure quotient(const two_structure& s,
                       std::span<const std::vector<vertex_id>> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("quotient: no blocks");
  }
  std::vector<bool> seen(s.size(), false);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("quotient: empty block");
    }
    for (vertex_id v : block) {
      if (v >= s.size() || seen[v]) {
        throw std::invalid_argument("quotient: blocks must be disjoint and in range");
      }
      seen[v] = true;
    }
  }

  universe u;
  for (const auto& block : blocks) {
    if (block.size() == 1) {
      u.intern(s.vertices()[block[0]]);
      continue;
    }
    std::vector<std::string> ids;
    ids.reserve(block.size());
    for (vertex_id v : block) {
      ids.push_back(s.vertices()[v].id);
    }
    std::sort(ids.begin(), ids.end());
    std::string id = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) {
        id += ",";
      }
      id += ids[i];
    }
    id += "}";
    u.intern(item{id, id});
  }

  const std::size_t m = blocks.size();
  std::vector<class_ordinal> colors(m * (m - 1) / 2);
  for (std::size_t b = 1; b < m; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      class_ordinal expected = s.color(blocks[a][0], blocks[b][0]);
      for (vertex_id x : blocks[a]) {
        for (vertex_id y : blocks[b]) {
          if (s.color(x, y) != expected) {
            throw internal_error(
                "quotient: cross-edge colors disagree between blocks; "
                "a block is not a clan");
          }
        }
      }
      colors[two_structure::pair_index(static_cast<vertex_id>(a),
                                       static_cast<vertex_id>(b))] = expected;
    }
  }
  std::vector<edge_class> table(s.classes().begin(), s.classes().end());
  return two_structure(std::move(u), std::move(colors), std::move(table));
}

}  // namespace gaifman
