#include "scnoise/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace scnoise {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Single-line metadata values: newlines would break the comment block.
std::string flatten(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  fields.push_back(cur);
  return fields;
}

} // namespace

void write_csv(const SweepTable& table, std::ostream& out) {
  out << "# " << version_string() << '\n';
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << ": " << flatten(value) << '\n';
  for (const auto& c : table.columns) out << quote(c) << ',';
  out << "status\n";
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (double v : table.values[i]) out << number(v) << ',';
    out << quote(i < table.status.size() ? table.status[i] : "") << '\n';
  }
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

SweepTable parse_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  bool header = false;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.size() > 2 ? line.substr(2) : "";
      if (first) {
        first = false;
        continue; // version line
      }
      const auto colon = body.find(": ");
      if (colon == std::string::npos) throw std::runtime_error("csv: malformed metadata line");
      table.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      continue;
    }
    first = false;
    auto fields = split_record(line);
    if (!header) {
      if (fields.empty() || fields.back() != "status")
        throw std::runtime_error("csv: header must end with 'status'");
      fields.pop_back();
      table.columns = fields;
      header = true;
      continue;
    }
    if (fields.size() != table.columns.size() + 1)
      throw std::runtime_error("csv: row has " + std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(table.columns.size() + 1));
    std::vector<double> row;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const std::string& f = fields[c];
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (f.empty() || end != f.c_str() + f.size())
        throw std::runtime_error("csv: bad number '" + f + "'");
      row.push_back(v);
    }
    table.values.push_back(std::move(row));
    table.status.push_back(fields.back());
  }
  if (!header) throw std::runtime_error("csv: missing header");
  return table;
}

} // namespace scnoise
