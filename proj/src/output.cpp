#include "spinent/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#ifndef SPINENT_VERSION
#define SPINENT_VERSION "0.0.0"
#endif

namespace spinent {

const char* version() { return SPINENT_VERSION; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double: buffer too small");
  return std::string(buf, end);
}

void CsvTable::add_column(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows())
    throw std::invalid_argument("CsvTable: column '" + name + "' has the wrong length");
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += csv_field(table.header[c]);
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += format_double(table.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

void OutputBatch::add(std::string name, std::string content) {
  for (const auto& f : files_)
    if (f.first == name) throw std::logic_error("OutputBatch: duplicate file " + name);
  files_.emplace_back(std::move(name), std::move(content));
}

const std::string* OutputBatch::find(std::string_view name) const {
  for (const auto& f : files_)
    if (f.first == name) return &f.second;
  return nullptr;
}

void OutputBatch::commit(const std::filesystem::path& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string suffix = ".tmp." + std::to_string(::getpid());

  std::vector<fs::path> staged;
  std::vector<fs::path> placed;
  auto cleanup = [&] {
    std::error_code ignored;
    for (const auto& p : staged) fs::remove(p, ignored);
    for (const auto& p : placed) fs::remove(p, ignored);
  };

  try {
    for (const auto& [name, content] : files_) {
      const fs::path tmp = dir / (name + suffix);
      staged.push_back(tmp);
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      os.write(content.data(), static_cast<std::streamsize>(content.size()));
      os.close();
      if (!os) throw fs::filesystem_error("cannot write", tmp, std::make_error_code(std::errc::io_error));
    }
    for (std::size_t k = 0; k < files_.size(); ++k) {
      const fs::path dest = dir / files_[k].first;
      fs::rename(staged[k], dest);
      placed.push_back(dest);
    }
  } catch (...) {
    cleanup();
    throw;
  }
}

}  // namespace spinent
