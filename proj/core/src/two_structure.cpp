#include "gaifman/two_structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaifman/errors.hpp"

namespace gaifman {

std::string edge_class::label() const {
  if (!hi.has_value()) {
    return ">=" + std::to_string(lo);
  }
  if (*hi == lo + 1) {
    return std::to_string(lo);
  }
  return std::to_string(lo) + "-" + std::to_string(*hi - 1);
}

std::size_t two_structure::pair_index(vertex_id a, vertex_id b) {
  if (a > b) {
    std::swap(a, b);
  }
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

two_structure::two_structure(universe u, std::vector<class_ordinal> colors,
                             std::vector<edge_class> class_table)
    : universe_(std::move(u)), colors_(std::move(colors)), table_(std::move(class_table)) {
  const std::size_t n = universe_.size();
  if (n == 0) {
    throw std::invalid_argument("two_structure: empty universe");
  }
  if (colors_.size() != n * (n - 1) / 2) {
    throw std::invalid_argument("two_structure: color table size mismatch");
  }
  std::vector<class_ordinal> seen(colors_);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (class_ordinal ordinal : seen) {
    used_.push_back(class_info(ordinal));
  }
}

const edge_class& two_structure::class_info(class_ordinal ordinal) const {
  for (const edge_class& c : table_) {
    if (c.ordinal == ordinal) {
      return c;
    }
  }
  throw internal_error("two_structure: no descriptor for class ordinal " +
                       std::to_string(ordinal));
}

two_structure two_structure::restrict(std::span<const vertex_id> keep) const {
  universe u;
  for (vertex_id v : keep) {
    u.intern(universe_[v]);
  }
  std::vector<class_ordinal> colors(keep.size() * (keep.size() - 1) / 2);
  for (std::size_t b = 1; b < keep.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      colors[pair_index(static_cast<vertex_id>(a), static_cast<vertex_id>(b))] =
          color(keep[a], keep[b]);
    }
  }
  return two_structure(std::move(u), std::move(colors), table_);
}

}  // namespace gaifman
