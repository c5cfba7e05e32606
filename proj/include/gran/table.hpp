#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gran/rough.hpp"

namespace gran {

inline constexpr std::string_view kMissingMarker = "?";

/// Object-by-attribute value table. Missing cells hold std::nullopt.
struct TableDocument {
  std::vector<std::string> header; ///< attribute names
  struct Row {
    std::string object;
    std::vector<std::optional<std::string>> values;
  };
  std::vector<Row> rows;
};

/// Comma separated, header row first, first column is the object name, "?"
/// marks a missing value. No quoting. Throws ParseError, DuplicateObjectError,
/// EmptyTableError.
TableDocument parse_csv(std::istream &in);
TableDocument parse_csv(std::string_view text);

/// {"header": [...], "rows": [{"object": "...", "values": [...]}],
///  "missing": "?"}. null or the missing marker denotes a missing value.
TableDocument parse_table_json(std::string_view text);

enum class TableFormat { csv, json };

/// Reads and converts a table file; the format defaults to the extension.
InformationSystem ingest(const std::filesystem::path &path,
                         std::optional<TableFormat> format = std::nullopt);

/// One attribute per column: objects with equal non-missing values share a
/// block; objects with a missing value are left out of that carrier.
InformationSystem to_information_system(const TableDocument &doc);

/// Inverse of to_information_system up to value renaming: each block is
/// written as a value "v<k>".
TableDocument to_table(const InformationSystem &sys);
std::string write_csv(const TableDocument &doc);

} // namespace gran
