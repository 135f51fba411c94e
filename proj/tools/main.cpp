#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaifman/errors.hpp"
#include "gaifman/pipeline.hpp"

namespace {

char parse_delimiter(const std::string& text) {
  if (text == "\\t" || text == "\t") {
    return '\t';
  }
  if (text.size() != 1) {
    throw gaifman::config_error("--delimiter must be a single character or \\t");
  }
  return text[0];
}

void parse_columns(const std::string& list, gaifman::ingest_options& opts) {
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  std::string current;
  auto flush = [&] {
    if (current.empty()) {
      return;
    }
    if (current[0] == '-') {
      exclude.push_back(current.substr(1));
    } else {
      include.push_back(current);
    }
    current.clear();
  };
  for (char ch : list) {
    if (ch == ',') {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  if (!include.empty() && !exclude.empty()) {
    throw gaifman::config_error("--columns cannot mix included and excluded names");
  }
  opts.include_columns = std::move(include);
  opts.exclude_columns = std::move(exclude);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decomposes the co-occurrence structure of relational data into a "
      "prime-clan tree and renders it as DOT or JSON."};

  std::vector<std::string> inputs;
  std::string delimiter = ",";
  bool no_header = false;
  std::string naming = "qualified";
  std::vector<std::string> null_tokens;
  std::string columns;
  std::string mode = "plain";
  std::uint64_t k = 0;
  std::uint64_t width = 0;
  std::uint64_t base = 2;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool no_elision = false;
  std::size_t expand_limit = 6;
  std::size_t others_limit = 8;
  std::string out_format = "dot";
  std::string output_path;
  bool oracle = false;
  bool dump_histogram = false;

  app.add_option("--input", inputs, "Input file (repeatable; tables share one universe)")
      ->required();
  app.add_option("--delimiter", delimiter, "Field delimiter (single character or \\t)");
  app.add_flag("--no-header", no_header, "Treat the first row as data");
  app.add_option("--naming", naming, "Item naming: qualified (column=value) or raw")
      ->check(CLI::IsMember({"qualified", "raw"}));
  app.add_option("--null", null_tokens,
                 "Null token producing no item (repeatable; replaces the defaults "
                 "\"\", \"?\", \"NA\")");
  app.add_option("--columns", columns,
                 "Comma-separated column names to use; prefix every name with '-' "
                 "to exclude instead");
  app.add_option("--mode", mode, "Coloring: plain, threshold, linear or exponential")
      ->check(CLI::IsMember({"plain", "threshold", "linear", "exponential"}));
  auto* k_opt = app.add_option("--k", k, "Threshold (mode threshold)");
  auto* width_opt = app.add_option("--width", width, "Interval width (mode linear)");
  auto* base_opt = app.add_option("--base", base, "Interval growth base (mode exponential)");
  auto* lower_opt = app.add_option("--lower", lower, "Lower threshold (linear/exponential)");
  auto* upper_opt = app.add_option("--upper", upper, "Upper threshold (linear/exponential)");
  app.add_flag("--no-elision", no_elision, "Keep broken-only vertices instead of merging");
  app.add_option("--expand-limit", expand_limit,
                 "Max nontrivial children drawn in full (DOT)");
  app.add_option("--others-limit", others_limit,
                 "Min leaf children that get merged into an Others node (DOT)");
  app.add_option("--out", out_format, "Output format: dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  app.add_option("--output", output_path, "Write output to this file instead of stdout");
  auto* oracle_flag =
      app.add_flag("--oracle", oracle, "List all clans by exhaustive search instead");
  app.add_flag("--dump-histogram", dump_histogram,
               "Print multiplicity,count lines instead of a decomposition")
      ->excludes(oracle_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    gaifman::run_config cfg;
    cfg.inputs = inputs;
    cfg.ingest.delimiter = parse_delimiter(delimiter);
    cfg.ingest.header = !no_header;
    cfg.ingest.naming =
        naming == "raw" ? gaifman::naming_mode::raw : gaifman::naming_mode::qualified;
    if (!null_tokens.empty()) {
      cfg.ingest.null_tokens = null_tokens;
    }
    if (!columns.empty()) {
      parse_columns(columns, cfg.ingest);
    }

    auto reject = [&](const CLI::Option* opt, const char* needed) {
      if (opt->count() > 0) {
        throw gaifman::config_error(std::string(opt->get_name()) + " requires --mode " +
                                    needed);
      }
    };
    auto opt_of = [](const CLI::Option* opt, std::uint64_t value) {
      return opt->count() > 0 ? std::optional<std::uint64_t>(value) : std::nullopt;
    };
    if (mode == "plain") {
      reject(k_opt, "threshold");
      reject(width_opt, "linear");
      reject(base_opt, "exponential");
      reject(lower_opt, "linear or exponential");
      reject(upper_opt, "linear or exponential");
      cfg.scheme = gaifman::color_scheme::plain();
    } else if (mode == "threshold") {
      reject(width_opt, "linear");
      reject(base_opt, "exponential");
      reject(lower_opt, "linear or exponential");
      reject(upper_opt, "linear or exponential");
      if (k_opt->count() == 0) {
        throw gaifman::config_error("--mode threshold requires --k");
      }
      cfg.scheme = gaifman::color_scheme::threshold(k);
    } else if (mode == "linear") {
      reject(k_opt, "threshold");
      reject(base_opt, "exponential");
      if (width_opt->count() == 0) {
        throw gaifman::config_error("--mode linear requires --width");
      }
      cfg.scheme = gaifman::color_scheme::linear(width, opt_of(lower_opt, lower),
                                                 opt_of(upper_opt, upper));
    } else {
      reject(k_opt, "threshold");
      reject(width_opt, "linear");
      cfg.scheme = gaifman::color_scheme::exponential(
          base, opt_of(lower_opt, lower).value_or(1), opt_of(upper_opt, upper));
    }

    cfg.elide = !no_elision;
    cfg.render.expand_limit = expand_limit;
    cfg.render.others_limit = others_limit;
    cfg.render.format =
        out_format == "json" ? gaifman::render_format::json : gaifman::render_format::dot;
    if (oracle) {
      cfg.output = gaifman::output_kind::oracle;
    } else if (dump_histogram) {
      cfg.output = gaifman::output_kind::histogram;
    } else {
      cfg.output = out_format == "json" ? gaifman::output_kind::json
                                        : gaifman::output_kind::dot;
    }
    cfg.output_path = output_path;

    return gaifman::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gaifman::exit_code_for(e);
  }
}
