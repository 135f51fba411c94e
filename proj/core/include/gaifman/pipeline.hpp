#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaifman/clans.hpp"
#include "gaifman/coloring.hpp"
#include "gaifman/ingest.hpp"
#include "gaifman/render.hpp"

namespace gaifman {

enum class output_kind { dot, json, oracle, histogram };

/// Everything one run needs: inputs, ingest and coloring configuration,
/// elision switch, rendering options and the output destination.
struct run_config {
  std::vector<std::string> inputs;
  ingest_options ingest;
  color_scheme scheme = color_scheme::plain();
  bool elide = true;
  render_options render;
  output_kind output = output_kind::dot;
  std::string output_path;  // empty writes to `out`
  std::size_t oracle_limit = kOracleLimit;
};

/// Runs ingestion, multiplicity counting, coloring, elision, decomposition
/// and rendering end to end. Returns 0 on success; failures are reported by
/// throwing (data_error, config_error, internal_error). Diagnostics that are
/// not part of the output go to `diag`.
int run(const run_config& cfg, std::ostream& out, std::ostream& diag);

/// Exit code convention: 1 usage/config, 2 input data, 3 broken invariant.
int exit_code_for(const std::exception& error);

}  // namespace gaifman
