#ifndef BATEMAN_IO_HPP
#define BATEMAN_IO_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bateman/funcalg.hpp"
#include "bateman/types.hpp"

namespace bateman::io {

// Function-spec JSON: list of {"re", "im", "l", "a", "beta", "sigma"}.
// On malformed input throws DomainError naming the offending term index.
GphFunction parse_function_spec(const std::string& json_text);
std::string function_spec_json(const GphFunction& f);

// Flat "key = value" config lines; '#' starts a comment.
std::map<std::string, std::string> parse_config(const std::string& text);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);

enum class OutputFormat { Csv, Json };

// Deterministic table writer: CSV (header row, \n endings) or a JSON array
// of row objects with identical numeric content.
class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}
  void add_row(std::vector<double> row);
  // complex values enter as paired columns <name>_re, <name>_im
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  void write(std::ostream& os, OutputFormat fmt) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

struct RunConfig {
  SystemParams params;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  unsigned long long seed = 12345;
  std::map<std::string, double> tolerances;
};

}  // namespace bateman::io

#endif
