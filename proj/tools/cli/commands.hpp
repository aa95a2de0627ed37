#pragma once

// The bicount command line, as a library so tests can drive it in-process.

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicount::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, tsv, plain };

std::optional<Format> parse_format(std::string_view name);

struct OutputRecord {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();

  Json to_json() const;
};

/// A labelled grid: rows "p=<n>", columns "k=<n>".
struct Grid {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<std::string>> cells;
};

std::string csv_field(std::string_view text);

/// Record as text in the given format. Nested objects are flattened to
/// dotted keys in the delimited and plain formats.
std::string render(const OutputRecord& record, Format format);
std::string render_grid(const Grid& grid, Format format);

/// Parses argv and runs one subcommand. Returns the process exit status:
/// 0 success, 1 a verification or oracle disagreement, 2 usage or cap error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bicount::cli
