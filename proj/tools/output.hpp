#pragma once

// OutputRecord and its markdown / CSV / JSON renderings. Rendering is a pure
// function of the record, so identical inputs give byte-identical output.

#include <ehrmagic/rational.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ehrmagic::cli {

using Json = nlohmann::ordered_json;

enum class Format { Markdown, Json, Csv };

/// Row-major table. Horizontal tables print parameters as columns, the way
/// the m-index tables are usually laid out.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool horizontal = false;
};

struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> warnings;
  bool exact = true;
  std::optional<Table> table;
};

inline bool approx_mode = false;

/// {"num": "...", "den": "..."}, plus an "approx" decimal when requested.
inline Json rational_json(const Rational& r) {
  Json j{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
  if (approx_mode) j["approx"] = r.get_d();
  return j;
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational_json(r));
  return a;
}

inline Json integer_json(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool is_rational(const Json& j) { return j.is_object() && j.contains("num") && j.contains("den"); }

inline std::string display(const Json& j) {
  if (is_rational(j)) {
    std::string s = j["num"].get<std::string>();
    if (j["den"].get<std::string>() != "1") s += "/" + j["den"].get<std::string>();
    if (j.contains("approx")) {
      std::ostringstream os;
      os.precision(12);
      os << j["approx"].get<double>();
      s += " (approx " + os.str() + ")";
    }
    return s;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + display(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      s += (first ? "" : ", ") + it.key() + ": " + display(it.value());
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void markdown_table(std::ostringstream& os, const Table& t) {
  std::vector<std::vector<std::string>> grid;
  if (t.horizontal) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      std::vector<std::string> line{t.columns[c]};
      for (const auto& r : t.rows) line.push_back(r[c]);
      grid.push_back(std::move(line));
    }
  } else {
    grid.push_back(t.columns);
    for (const auto& r : t.rows) grid.push_back(r);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << '|';
    for (const auto& cell : grid[i]) os << ' ' << cell << " |";
    os << '\n';
    if (i == 0) {
      os << '|';
      for (std::size_t c = 0; c < grid[0].size(); ++c) os << "---|";
      os << '\n';
    }
  }
}

}  // namespace detail

inline std::string render(const OutputRecord& rec, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Json: {
      Json j;
      j["command"] = rec.command;
      j["inputs"] = rec.inputs;
      j["result"] = rec.result;
      j["warnings"] = rec.warnings;
      j["exact"] = rec.exact;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      if (rec.table) {
        const Table& t = *rec.table;
        for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << detail::csv_escape(t.columns[c]);
        os << '\n';
        for (const auto& r : t.rows) {
          for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << detail::csv_escape(r[c]);
          os << '\n';
        }
      } else {
        os << "key,value\n";
        for (auto it = rec.result.begin(); it != rec.result.end(); ++it)
          os << detail::csv_escape(it.key()) << ',' << detail::csv_escape(detail::display(it.value())) << '\n';
      }
      for (const auto& w : rec.warnings) os << "warning," << detail::csv_escape(w) << '\n';
      break;
    }
    case Format::Markdown: {
      os << "## " << rec.command << "\n\n";
      for (auto it = rec.inputs.begin(); it != rec.inputs.end(); ++it)
        os << "- " << it.key() << ": " << detail::display(it.value()) << '\n';
      os << '\n';
      if (rec.table) {
        detail::markdown_table(os, *rec.table);
        os << '\n';
      }
      for (auto it = rec.result.begin(); it != rec.result.end(); ++it) {
        if (rec.table && it.key() == "rows") continue;
        os << "- **" << it.key() << "**: " << detail::display(it.value()) << '\n';
      }
      for (const auto& w : rec.warnings) os << "\n> warning: " << w << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace ehrmagic::cli
