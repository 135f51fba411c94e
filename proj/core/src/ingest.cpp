#include "gaifman/ingest.hpp"

#include <algorithm>

#include "gaifman/errors.hpp"

namespace gaifman {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == delimiter) {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

vertex_id universe::intern(const item& it) {
  if (auto found = index_.find(it.id); found != index_.end()) {
    return found->second;
  }
  vertex_id v = static_cast<vertex_id>(items_.size());
  items_.push_back(it);
  index_.emplace(it.id, v);
  return v;
}

std::optional<vertex_id> universe::find(std::string_view id) const {
  if (auto found = index_.find(std::string(id)); found != index_.end()) {
    return found->second;
  }
  return std::nullopt;
}

table parse_table(std::istream& in, std::string name, const ingest_options& opts) {
  table result;
  result.name = std::move(name);

  std::vector<std::string> columns;
  bool have_columns = false;
  std::size_t line_number = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields = split_fields(line, opts.delimiter);

    if (opts.header && !have_columns) {
      columns = std::move(fields);
      have_columns = true;
      continue;
    }
    if (!have_columns) {
      // Headerless tables name columns by 1-based position.
      while (columns.size() < fields.size()) {
        columns.push_back(std::to_string(columns.size() + 1));
      }
    } else if (opts.header && fields.size() != columns.size()) {
      throw data_error(result.name + ": line " + std::to_string(line_number) +
                       ": expected " + std::to_string(columns.size()) +
                       " fields, got " + std::to_string(fields.size()));
    }

    std::vector<item> tuple;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const std::string& column = i < columns.size() ? columns[i] : std::to_string(i + 1);
      if (!opts.include_columns.empty() && !contains(opts.include_columns, column)) {
        continue;
      }
      if (contains(opts.exclude_columns, column)) {
        continue;
      }
      if (contains(opts.null_tokens, fields[i])) {
        continue;
      }
      std::string id = opts.naming == naming_mode::qualified ? column + "=" + fields[i]
                                                             : fields[i];
      item candidate{id, id};
      bool duplicate = std::any_of(tuple.begin(), tuple.end(),
                                   [&](const item& it) { return it == candidate; });
      if (!duplicate) {
        tuple.push_back(std::move(candidate));
      }
    }
    result.tuples.push_back(std::move(tuple));
  }

  if (result.tuples.empty()) {
    throw data_error(result.name + ": empty table");
  }
  return result;
}

universe build_universe(std::span<const table> tables) {
  if (tables.empty()) {
    throw data_error("no tables to build a universe from");
  }
  universe u;
  for (const table& t : tables) {
    for (const auto& tuple : t.tuples) {
      for (const item& it : tuple) {
        u.intern(it);
      }
    }
  }
  return u;
}

}  // namespace gaifman
