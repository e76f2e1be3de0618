#pragma once

// File emission: locale-independent number formatting, RFC-4180 CSV, and a
// staged batch of files committed with temp-file + rename.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spinent {

const char* version();

/// Shortest representation that parses back to the same double; "nan", "inf", "-inf"
/// for non-finite values.
std::string format_double(double x);

/// Column-major numeric table. Every column has the same length.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  void add_column(std::string name, std::vector<double> values);
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// Header row plus one line per row, LF line endings, fields quoted when needed.
std::string to_csv(const CsvTable& table);

/// Two-space indented UTF-8 text with a trailing newline.
std::string to_json_text(const nlohmann::ordered_json& doc);

class OutputBatch {
 public:
  void add(std::string name, std::string content);
  const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }
  const std::string* find(std::string_view name) const;

  /// Writes every file next to its destination under a temporary name, then renames
  /// them into place. On failure every file of the batch is removed again and the
  /// error is rethrown.
  void commit(const std::filesystem::path& dir) const;

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

}  // namespace spinent
