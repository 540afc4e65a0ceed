#include "abr/io.hpp"

#include <json.hpp>

#include <algorithm>

#include "abr/combinatorics.hpp"
#include "abr/error.hpp"

namespace abr {

namespace {

using nlohmann::json;

struct Position {
  int line = 1;
  int column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Schema errors have no byte offset from the JSON library, so they point
// at the first occurrence of the offending token when it can be found.
[[noreturn]] void schema_error(std::string_view text, const std::string& what,
                               std::string_view token = {}) {
  std::size_t offset = 0;
  if (!token.empty()) {
    const auto at = text.find(token);
    if (at != std::string_view::npos) offset = at;
  }
  const Position p = position_of(text, offset);
  throw ParseError(what, p.line, p.column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const Position p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON: " + std::string(e.what()), p.line, p.column);
  }
}

Rational rational_field(std::string_view text, const json& v) {
  if (!v.is_string()) schema_error(text, "numbers must be rational strings", v.dump());
  const auto& s = v.get_ref<const std::string&>();
  try {
    return parse_rational(s);
  } catch (const InvariantError& e) {
    schema_error(text, e.what(), "\"" + s + "\"");
  }
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += '"' + to_string(values[i]) + '"';
  }
  return out + "]";
}

}  // namespace

AnySequence parse_sequence(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error(text, "sequence file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "kind" && key != "dimension" && key != "points")
      schema_error(text, "unknown field \"" + key + "\"", "\"" + key + "\"");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    schema_error(text, "missing string field \"kind\"");
  if (!doc.contains("points") || !doc["points"].is_array())
    schema_error(text, "missing array field \"points\"");

  const std::string kind = doc["kind"];
  const json& points = doc["points"];
  if (kind == "planar") {
    if (doc.contains("dimension"))
      schema_error(text, "planar sequences take no \"dimension\"", "\"dimension\"");
    std::vector<PlanarPoint> pts;
    for (const auto& p : points) {
      if (!p.is_array() || p.size() != 2)
        throw InvariantError("planar points must have exactly two coordinates");
      pts.push_back({rational_field(text, p[0]), rational_field(text, p[1])});
    }
    return PlanarSequence(std::move(pts));
  }
  if (kind == "lifted") {
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
      schema_error(text, "lifted sequences need an integer \"dimension\"");
    const std::int64_t d = doc["dimension"];
    if (d < 2 || d > 1024) schema_error(text, "dimension out of range", "\"dimension\"");
    std::vector<LiftedPoint> pts;
    for (const auto& p : points) {
      if (!p.is_array() || p.size() != static_cast<std::size_t>(d))
        throw InvariantError("lifted points of dimension " + std::to_string(d) + " need " +
                             std::to_string(d) + " coordinates");
      LiftedPoint x;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) x.z.push_back(rational_field(text, p[i]));
      x.h = rational_field(text, p.back());
      pts.push_back(std::move(x));
    }
    return LiftedSequence(static_cast<int>(d), std::move(pts));
  }
  schema_error(text, "kind must be \"planar\" or \"lifted\"", "\"" + kind + "\"");
}

std::string serialize_sequence(const PlanarSequence& s) {
  std::string out = "{\n  \"kind\": \"planar\",\n  \"points\": [\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += "    " + join_rationals({s[i].t, s[i].h});
    out += i + 1 < s.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

std::string serialize_sequence(const LiftedSequence& s) {
  std::string out = "{\n  \"kind\": \"lifted\",\n  \"dimension\": " +
                    std::to_string(s.dimension()) + ",\n  \"points\": [\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Rational> coords = s[i].z;
    coords.push_back(s[i].h);
    out += "    " + join_rationals(coords);
    out += i + 1 < s.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

std::string serialize_sequence(const AnySequence& s) {
  return std::visit([](const auto& seq) { return serialize_sequence(seq); }, s);
}

std::string table_to_csv(const ColoringTable& c) {
  std::string out;
  for (int i = 0; i < c.r(); ++i) out += "i" + std::to_string(i) + ",";
  out += "color\n";
  for_each_combination(c.n(), c.r(), [&](std::span<const int> t) {
    for (int i : t) out += std::to_string(i) + ",";
    out += to_char(c.color(t));
    out += '\n';
  });
  return out;
}

std::string table_to_json(const ColoringTable& c) {
  std::string colors;
  colors.reserve(static_cast<std::size_t>(c.size()));
  for_each_combination(c.n(), c.r(),
                       [&](std::span<const int> t) { colors += to_char(c.color(t)); });
  return "{\"n\": " + std::to_string(c.n()) + ", \"r\": " + std::to_string(c.r()) +
         ", \"colors\": \"" + colors + "\"}\n";
}

namespace {

Color color_from_char(char ch, int line, int column) {
  if (ch == '+') return Color::Positive;
  if (ch == '-') return Color::Negative;
  throw ParseError(std::string("color must be '+' or '-', got '") + ch + "'", line, column);
}

ColoringTable table_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_error(text, "table file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "r" && key != "colors")
      schema_error(text, "unknown field \"" + key + "\"", "\"" + key + "\"");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("r") ||
      !doc["r"].is_number_integer() || !doc.contains("colors") || !doc["colors"].is_string())
    schema_error(text, "table JSON needs integer \"n\", \"r\" and string \"colors\"");
  const std::int64_t n = doc["n"], r = doc["r"];
  if (r < 2 || n < r || n > 100000) schema_error(text, "table needs n >= r >= 2");
  ColoringTable c(static_cast<int>(n), static_cast<int>(r));
  const std::string& colors = doc["colors"].get_ref<const std::string&>();
  if (colors.size() != c.size())
    schema_error(text, "table has " + std::to_string(colors.size()) + " colors, expected " +
                           std::to_string(c.size()), "\"colors\"");
  const Position base = position_of(text, text.find(colors));
  std::size_t k = 0;
  for_each_combination(c.n(), c.r(), [&](std::span<const int> t) {
    c.set(t, color_from_char(colors[k], base.line, base.column + static_cast<int>(k)));
    ++k;
  });
  return c;
}

ColoringTable table_from_csv(std::string_view text) {
  std::vector<std::vector<int>> tuples;
  std::vector<Color> colors;
  int r = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const std::size_t comma = line.find(',', f);
      fields.push_back(line.substr(f, comma == std::string_view::npos ? std::string_view::npos : comma - f));
      if (comma == std::string_view::npos) break;
      f = comma + 1;
    }
    if (r < 0) {
      r = static_cast<int>(fields.size()) - 1;
      for (int i = 0; i < r; ++i)
        if (fields[static_cast<std::size_t>(i)] != "i" + std::to_string(i))
          throw ParseError("header must be i0,...,i{r-1},color", line_no, 1);
      if (r < 2 || fields.back() != "color")
        throw ParseError("header must be i0,...,i{r-1},color with r >= 2", line_no, 1);
      continue;
    }
    if (static_cast<int>(fields.size()) != r + 1)
      throw ParseError("expected " + std::to_string(r + 1) + " fields", line_no, 1);
    std::vector<int> t;
    int column = 1;
    for (int i = 0; i < r; ++i) {
      const std::string_view s = fields[static_cast<std::size_t>(i)];
      if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw ParseError("index must be a nonnegative integer", line_no, column);
      t.push_back(std::stoi(std::string(s)));
      column += static_cast<int>(s.size()) + 1;
    }
    if (fields.back().size() != 1) throw ParseError("color must be '+' or '-'", line_no, column);
    colors.push_back(color_from_char(fields.back()[0], line_no, column));
    tuples.push_back(std::move(t));
  }
  if (r < 0) throw ParseError("empty table", 1, 1);
  if (tuples.empty()) throw ParseError("table has no rows", line_no, 1);

  const int n = tuples.back().empty() ? 0 : tuples.back().front() + r;
  // In lex order the last tuple is (n-r, ..., n-1).
  if (n < r) throw ParseError("table rows do not cover a ground set", line_no, 1);
  ColoringTable c(n, r);
  if (tuples.size() != c.size())
    throw ParseError("table has " + std::to_string(tuples.size()) + " rows, expected C(" +
                         std::to_string(n) + "," + std::to_string(r) + ") = " +
                         std::to_string(c.size()),
                     line_no, 1);
  std::size_t k = 0;
  bool ok = true;
  for_each_combination(n, r, [&](std::span<const int> t) {
    if (!ok) return;
    if (!std::equal(t.begin(), t.end(), tuples[k].begin(), tuples[k].end())) {
      ok = false;
      return;
    }
    c.set(t, colors[k]);
    ++k;
  });
  // Data rows start on line 2 when there are no blank lines.
  if (!ok) throw ParseError("rows must list every increasing tuple in lexicographic order",
                            static_cast<int>(k) + 2, 1);
  return c;
}

}  // namespace

ColoringTable parse_table(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return table_from_json(text);
  return table_from_csv(text);
}

std::string search_result_to_json(const SearchResult& r) {
  json out = json::object();
  out["size"] = r.size;
  out["witness"] = r.witness;
  out["color"] = std::string(1, to_char(r.color));
  out["exhaustive"] = r.exhaustive;
  out["nodes_visited"] = r.nodes_visited;
  return out.dump() + "\n";
}

namespace {

json em_report_object(const EmReport& report) {
  json out = json::object();
  out["m"] = report.m;
  out["n"] = report.n;
  out["max_monotone"] = report.max_monotone;
  out["exhaustive"] = report.exhaustive;
  out["holds"] = report.holds;
  out["witness"] = report.search.witness;
  out["color"] = std::string(1, to_char(report.search.color));
  out["params"] = nullptr;
  return out;
}

}  // namespace

std::string em_report_to_json(const EmReport& report) { return em_report_object(report).dump() + "\n"; }

std::string em_report_to_json(const EmReport& report, const EmParams& params) {
  json levels = json::array();
  for (const auto& l : params.levels)
    levels.push_back({{"epsilon", to_string(l.epsilon)},
                      {"delta", to_string(l.delta)},
                      {"steepness", to_string(l.steepness)},
                      {"bend", l.bend}});
  json out = em_report_object(report);
  out["params"] = {{"m", params.m}, {"base", params.base.get_str()}, {"levels", levels}};
  return out.dump() + "\n";
}

}  // namespace abr
