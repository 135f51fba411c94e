#include "gaifman/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gaifman/decomposition.hpp"
#include "gaifman/errors.hpp"
#include "gaifman/multiplicity.hpp"

namespace gaifman {

namespace {

void write_histogram(const multiplicity_map& m, std::ostream& out) {
  for (const auto& [multiplicity, pairs] : multiplicity_histogram(m)) {
    out << multiplicity << "," << pairs << "\n";
  }
}

void write_oracle_clans(const two_structure& s, std::size_t limit, std::ostream& out) {
  auto clans = enumerate_clans(s, limit);
  out << "[";
  for (std::size_t i = 0; i < clans.size(); ++i) {
    std::vector<std::string> ids;
    for (vertex_id v : clans[i]) {
      ids.push_back(s.vertices()[v].id);
    }
    std::sort(ids.begin(), ids.end());
    out << (i == 0 ? "\n" : ",\n") << "  [";
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << '"' << ids[j] << '"';
    }
    out << "]";
  }
  out << "\n]\n";
}

bool all_children_are_leaves(const clan_node& root) {
  return std::all_of(root.children.begin(), root.children.end(),
                     [](const clan_node& c) { return c.kind == node_kind::leaf; });
}

void histogram_hint(const multiplicity_map& m, std::ostream& diag) {
  diag << "note: the decomposition has only trivial clans; multiplicity histogram"
          " (multiplicity: pairs):";
  std::size_t shown = 0;
  for (const auto& [multiplicity, pairs] : multiplicity_histogram(m)) {
    if (shown++ == 12) {
      diag << " ...";
      break;
    }
    diag << " " << multiplicity << ": " << pairs << ",";
  }
  diag << " consider a different --mode or thresholds\n";
}

}  // namespace

int run(const run_config& cfg, std::ostream& out, std::ostream& diag) {
  std::vector<table> tables;
  for (const std::string& path : cfg.inputs) {
    std::ifstream in(path);
    if (!in) {
      throw data_error("cannot open input file: " + path);
    }
    tables.push_back(parse_table(in, std::filesystem::path(path).stem().string(),
                                 cfg.ingest));
  }
  universe u = build_universe(tables);
  multiplicity_map m = build_multiplicity_map(tables, u);

  std::ostringstream buffer;
  if (cfg.output == output_kind::histogram) {
    write_histogram(m, buffer);
  } else {
    two_structure s = build_two_structure(m, cfg.scheme);
    elision_report report;
    if (cfg.elide) {
      auto [elided, rep] = elide_isolated(s);
      s = std::move(elided);
      report = std::move(rep);
    }
    if (cfg.output == output_kind::oracle) {
      write_oracle_clans(s, cfg.oracle_limit, buffer);
    } else {
      clan_tree tree = decompose(s);
      if (all_children_are_leaves(tree.root)) {
        histogram_hint(m, diag);
      }
      if (cfg.output == output_kind::dot) {
        buffer << to_dot(tree, s, cfg.render);
      } else {
        buffer << to_json(tree, s, cfg.scheme, report);
      }
    }
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      throw data_error("cannot open output file: " + cfg.output_path);
    }
    file << buffer.str();
  }
  return 0;
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const config_error*>(&error) != nullptr) {
    return 1;
  }
  if (dynamic_cast<const data_error*>(&error) != nullptr) {
    return 2;
  }
  return 3;
}

}  // namespace gaifman
