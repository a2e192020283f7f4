#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ofc/coloring.hpp"
#include "ofc/graph.hpp"
#include "ofc/kneser.hpp"

// Text formats.
//
// Digraph:   "n <count>" then one "u v" per arc (0-based). Optional
//            "label <v> <text>" and "palette <a>" lines. '#' starts a comment.
// Colouring: "k <palette> b <fold>" then "v: c1,c2,...,cb" per vertex.
// A consistent suborientation is a digraph file with a palette line and one
// label per vertex holding its subset, e.g. "label 0 {0,1}".

namespace ofc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  int line() const noexcept { return line_; }
  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
  int line_;
};

namespace detail {

struct Line {
  int number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Non-empty lines with comments stripped.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

inline int parse_int(const std::string& token, const std::string& source, int line, const char* what) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(source, line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  if (pos != token.size()) {
    throw ParseError(source, line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  return static_cast<int>(value);
}

// "{0,1,5}" or "0,1,5"
inline ColorSet parse_color_list(std::string text, const std::string& source, int line) {
  if (!text.empty() && text.front() == '{') text.erase(0, 1);
  if (!text.empty() && text.back() == '}') text.pop_back();
  ColorSet set = 0;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    const int c = parse_int(token, source, line, "colour");
    if (c < 0 || c >= kMaxPalette) throw ParseError(source, line, "colour " + token + " outside 0..63");
    if (set & color_bit(c)) throw ParseError(source, line, "colour " + token + " repeated");
    set |= color_bit(c);
  }
  return set;
}

}  // namespace detail

struct DigraphFile {
  OrientedGraph graph;
  std::optional<int> palette;
};

inline DigraphFile parse_digraph(std::string_view text, const std::string& source = "<digraph>") {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(source, 1, "missing header 'n <vertex_count>'");
  int n = -1;
  {
    std::istringstream head(lines.front().text);
    std::string key, count, extra;
    head >> key >> count;
    if (key != "n" || count.empty() || (head >> extra)) {
      throw ParseError(source, lines.front().number, "expected header 'n <vertex_count>'");
    }
    n = detail::parse_int(count, source, lines.front().number, "vertex count");
    if (n < 0) throw ParseError(source, lines.front().number, "negative vertex count");
  }
  DigraphFile out;
  std::vector<Arc> arcs;
  std::vector<int> arc_lines;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, body] = lines[i];
    std::istringstream in(body);
    std::string first;
    in >> first;
    if (first == "label") {
      std::string v;
      in >> v;
      const int vertex = detail::parse_int(v, source, number, "vertex");
      if (vertex < 0 || vertex >= n) throw ParseError(source, number, "label for vertex " + v + " out of range");
      std::string rest;
      std::getline(in, rest);
      if (labels.empty()) labels.resize(n);
      labels[vertex] = detail::trim(rest);
      continue;
    }
    if (first == "palette") {
      std::string a;
      in >> a;
      out.palette = detail::parse_int(a, source, number, "palette");
      continue;
    }
    std::string second, extra;
    in >> second;
    if (second.empty() || (in >> extra)) throw ParseError(source, number, "expected arc 'u v'");
    const Arc arc{detail::parse_int(first, source, number, "tail"), detail::parse_int(second, source, number, "head")};
    arcs.push_back(arc);
    arc_lines.push_back(number);
  }
  try {
    out.graph = build_graph(n, arcs, std::move(labels));
  } catch (const GraphError& e) {
    int line = lines.front().number;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i] == e.arc() || (e.kind() == GraphError::Kind::two_cycle && arcs[i] == Arc{e.arc().head, e.arc().tail})) {
        line = arc_lines[i];
        break;
      }
    }
    throw ParseError(source, line, e.what());
  }
  return out;
}

inline std::string format_digraph(const OrientedGraph& g, std::optional<int> palette = std::nullopt) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  if (palette) out << "palette " << *palette << '\n';
  for (std::size_t v = 0; v < g.labels().size(); ++v) out << "label " << v << ' ' << g.labels()[v] << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

inline BFoldColoring parse_coloring(std::string_view text, const std::string& source = "<colouring>") {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(source, 1, "missing header 'k <palette> b <fold>'");
  BFoldColoring c;
  {
    std::istringstream head(lines.front().text);
    std::string k, kv, b, bv, extra;
    head >> k >> kv >> b >> bv;
    if (k != "k" || b != "b" || bv.empty() || (head >> extra)) {
      throw ParseError(source, lines.front().number, "expected header 'k <palette> b <fold>'");
    }
    c.palette = detail::parse_int(kv, source, lines.front().number, "palette");
    c.fold = detail::parse_int(bv, source, lines.front().number, "fold");
    if (c.palette < 1 || c.palette > kMaxPalette) throw ParseError(source, lines.front().number, "palette must be in 1..64");
    if (c.fold < 1 || c.fold > c.palette) throw ParseError(source, lines.front().number, "fold must be in 1..palette");
  }
  std::map<int, std::pair<ColorSet, int>> by_vertex;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, body] = lines[i];
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(source, number, "expected 'v: c1,c2,...'");
    const int v = detail::parse_int(detail::trim(body.substr(0, colon)), source, number, "vertex");
    if (v < 0) throw ParseError(source, number, "negative vertex");
    const ColorSet set = detail::parse_color_list(detail::trim(body.substr(colon + 1)), source, number);
    if (!by_vertex.try_emplace(v, set, number).second) {
      throw ParseError(source, number, "vertex " + std::to_string(v) + " coloured twice");
    }
  }
  int expected = 0;
  for (const auto& [v, entry] : by_vertex) {
    if (v != expected) throw ParseError(source, entry.second, "vertex " + std::to_string(expected) + " has no colour set");
    c.sets.push_back(entry.first);
    ++expected;
  }
  return c;
}

inline std::string format_coloring(const BFoldColoring& c) {
  std::ostringstream out;
  out << "k " << c.palette << " b " << c.fold << '\n';
  for (std::size_t v = 0; v < c.sets.size(); ++v) out << v << ": " << format_color_set(c.sets[v]) << '\n';
  return out.str();
}

inline ConsistentSubOrientation parse_suborientation(std::string_view text, const std::string& source = "<kneser>") {
  DigraphFile file = parse_digraph(text, source);
  if (!file.palette) throw ParseError(source, 1, "suborientation file needs a 'palette <a>' line");
  const int n = file.graph.vertex_count();
  if (n > 0 && static_cast<int>(file.graph.labels().size()) != n) {
    throw ParseError(source, 1, "suborientation file needs a label line for every vertex");
  }
  std::vector<ColorSet> labels;
  for (Vertex v = 0; v < n; ++v) {
    const auto& text_label = file.graph.labels()[v];
    if (text_label.empty()) throw ParseError(source, 1, "vertex " + std::to_string(v) + " has no label");
    labels.push_back(detail::parse_color_list(text_label, source, 1));
  }
  const int b = labels.empty() ? 1 : cardinality(labels.front());
  return make_suborientation(*file.palette, b, std::move(labels), file.graph.arcs());
}

inline std::string format_suborientation(const ConsistentSubOrientation& s) {
  return format_digraph(s.graph, s.palette);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// FNV-1a, 64 bit, as 16 hex digits.
inline std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ofc
