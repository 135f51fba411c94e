#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gaifman {

/// Index of an item within a universe (first-occurrence order).
using vertex_id = std::uint32_t;

/// One attribute-value occurrence. Two items are equal iff their ids are
/// equal; the display string is only used for rendering.
struct item {
  std::string id;
  std::string display;

  friend bool operator==(const item& a, const item& b) { return a.id == b.id; }
};

enum class naming_mode {
  qualified,  // item id is "column=value"
  raw,        // item id is the cell value itself
};

struct ingest_options {
  char delimiter = ',';
  bool header = true;
  naming_mode naming = naming_mode::qualified;
  std::vector<std::string> null_tokens{"", "?", "NA"};
  /// When non-empty, only these columns produce items.
  std::vector<std::string> include_columns;
  /// Columns that never produce items.
  std::vector<std::string> exclude_columns;
};

/// A parsed relational table. Each tuple is the set of distinct items that
/// appeared in one row; duplicates within a row collapse to one item.
struct table {
  std::string name;
  std::vector<std::vector<item>> tuples;
};

/// The ordered set of all items occurring in the parsed tables. Iteration
/// order is deterministic: items appear in order of first occurrence.
class universe {
 public:
  /// Adds an item unless an item with the same id is already present.
  /// Returns the item's vertex id either way.
  vertex_id intern(const item& it);

  std::optional<vertex_id> find(std::string_view id) const;
  const item& operator[](vertex_id v) const { return items_[v]; }
  std::size_t size() const { return items_.size(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<item> items_;
  std::unordered_map<std::string, vertex_id> index_;
};

/// Parses delimiter-separated text into a table. With a header, every data
/// row must match the header arity; violations raise data_error with the
/// offending line number. A table with no data rows is an error. Cells equal
/// to a null token are skipped and produce no item.
table parse_table(std::istream& in, std::string name, const ingest_options& opts = {});

/// Union of all items of all tables, in first-occurrence order. Tables from
/// separate input files contribute to one shared universe.
universe build_universe(std::span<const table> tables);

}  // namespace gaifman
