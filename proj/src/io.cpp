#include "bateman/io.hpp"

#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

namespace bateman::io {

using nlohmann::json;

GphFunction parse_function_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("function-spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw DomainError("function-spec: top level must be a JSON array");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& term = doc[i];
    try {
      Atom a;
      a.coeff = Complex(term.at("re").get<double>(), term.at("im").get<double>());
      a.l = term.at("l").get<int>();
      a.a = term.at("a").get<int>();
      a.beta = term.at("beta").get<double>();
      a.sigma = term.at("sigma").get<int>();
      atoms.push_back(a);
    } catch (const json::exception& e) {
      throw DomainError("function-spec: bad term at index " + std::to_string(i) +
                        ": " + e.what());
    }
  }
  try {
    return GphFunction(std::move(atoms));
  } catch (const Error& e) {
    throw DomainError(std::string("function-spec: ") + e.what());
  }
}

std::string function_spec_json(const GphFunction& f) {
  json arr = json::array();
  for (const auto& t : f.terms()) {
    arr.push_back({{"re", t.coeff.real()},
                   {"im", t.coeff.imag()},
                   {"l", t.l},
                   {"a", t.a},
                   {"beta", t.beta},
                   {"sigma", t.sigma}});
  }
  return arr.dump();
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  int line_no = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config: line " + std::to_string(line_no) +
                        " is not 'key = value'");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw DomainError("Table: row width mismatch");
  rows_.push_back(std::move(row));
}

void Table::write(std::ostream& os, OutputFormat fmt) const {
  if (fmt == OutputFormat::Csv) {
    for (std::size_t c = 0; c < columns_.size(); ++c)
      os << columns_[c] << (c + 1 < columns_.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
      os << "\n";
    }
    return;
  }
  json arr = json::array();
  for (const auto& row : rows_) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = row[c];
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

}  // namespace bateman::io
