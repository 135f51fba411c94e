#include "gaifman/multiplicity.hpp"

#include <stdexcept>

namespace gaifman {

std::uint64_t multiplicity_map::pack(vertex_id a, vertex_id b) {
  if (a > b) {
    std::swap(a, b);
  }
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t multiplicity_map::count(vertex_id a, vertex_id b) const {
  auto found = counts_.find(pack(a, b));
  return found == counts_.end() ? 0 : found->second;
}

multiplicity_map build_multiplicity_map(std::span<const table> tables, const universe& u) {
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const table& t : tables) {
    for (const auto& tuple : t.tuples) {
      ++total;
      std::vector<vertex_id> ids;
      ids.reserve(tuple.size());
      for (const item& it : tuple) {
        auto v = u.find(it.id);
        if (!v.has_value()) {
          throw std::invalid_argument("multiplicity_map: universe does not cover table " +
                                      t.name);
        }
        ids.push_back(*v);
      }
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          ++counts[multiplicity_map::pack(ids[i], ids[j])];
        }
      }
    }
  }
  return multiplicity_map(u, total, std::move(counts));
}

std::map<std::uint64_t, std::uint64_t> multiplicity_histogram(const multiplicity_map& m) {
  std::map<std::uint64_t, std::uint64_t> hist;
  const std::uint64_t n = m.vertices().size();
  const std::uint64_t all_pairs = n * (n - 1) / 2;
  const std::uint64_t zero_pairs = all_pairs - m.nonzero().size();
  if (zero_pairs > 0) {
    hist[0] = zero_pairs;
  }
  for (const auto& [pair, count] : m.nonzero()) {
    (void)pair;
    ++hist[count];
  }
  return hist;
}

}  // namespace gaifman
