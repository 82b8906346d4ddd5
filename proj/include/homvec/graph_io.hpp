#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homvec/error.hpp"
#include "homvec/graph.hpp"

namespace homvec {

namespace detail {

constexpr int kG6Bias = 63;
constexpr int kG6Max = 126;

inline int g6_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < kG6Bias || c > kG6Max)
    throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
  return c - kG6Bias;
}

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Decodes one graph6 line (trailing newline tolerated). Bits are read in the
// standard order: pairs (i,j), i<j, ordered by j then i, six bits per byte,
// most significant first. Padding bits must be zero.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim_line_end(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  if (text[0] == ':' || text[0] == '&')
    throw ParseError("graph6: sparse6/digraph6 input is not supported", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  int first = detail::g6_value(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos = 1;
  } else {
    // 126 prefix: either 3 more bytes (18 bits) or 126 + 6 bytes (36 bits).
    int second = detail::g6_value(text, 1);
    int width = 3;
    pos = 1;
    if (second == 63) {
      width = 6;
      pos = 2;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos++));
    if ((width == 3 && n < 63) || (width == 6 && n < 258048))
      throw ParseError("graph6: non-minimal size header", 0);
  }
  if (n > (std::uint64_t{1} << 24)) throw ParseError("graph6: vertex count too large", 0);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (pairs + 5) / 6;
  if (text.size() < pos + bytes) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() > pos + bytes) throw ParseError("graph6: trailing garbage", pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      int v = detail::g6_value(text, at);
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; bit < bytes * 6; ++bit) {
    std::size_t at = pos + static_cast<std::size_t>(bit / 6);
    if ((detail::g6_value(text, at) >> (5 - bit % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit", at);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

// Edge-list text: first line "n", then one "u v" per line. Blank lines and
// lines starting with '#' are skipped. Duplicate edges collapse.
inline Graph parse_edgelist(std::string_view text) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
  auto tokens = [](std::string_view line) {
    std::vector<std::string_view> t;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) t.push_back(line.substr(i, j - i));
      i = j;
    }
    return t;
  };
  auto to_num = [](std::string_view s, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw ParseError("edge list: expected a nonnegative integer, got '" + std::string(s) + "'", line_no);
    return v;
  };

  bool have_n = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto t = tokens(lines[ln]);
    if (t.empty() || t[0].starts_with("#")) continue;
    if (!have_n) {
      if (t.size() != 1) throw ParseError("edge list: first line must hold the vertex count", ln + 1);
      n = to_num(t[0], ln + 1);
      have_n = true;
      continue;
    }
    if (t.size() != 2) throw ParseError("edge list: expected 'u v'", ln + 1);
    std::uint64_t u = to_num(t[0], ln + 1), v = to_num(t[1], ln + 1);
    if (u >= n || v >= n) throw ParseError("edge list: vertex index out of range", ln + 1);
    if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u), ln + 1);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_n) throw ParseError("edge list: missing vertex count", 0);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline std::string write_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// Newline-delimited graph6 file; blank lines and a leading >>graph6<< header
// are ignored.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = detail::trim_line_end(text.substr(start, end - start));
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in line " + std::to_string(out.size() + 1),
                         start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads a graph from a path: files ending in .g6 (or whose content looks
// like a single graph6 line) are decoded as graph6, anything else as an edge
// list.
inline Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  bool g6 = path.ends_with(".g6") || path.ends_with(".graph6");
  if (!g6) {
    auto first = text.find_first_not_of(" \t\r\n");
    g6 = first != std::string::npos && !std::isdigit(static_cast<unsigned char>(text[first])) &&
         text[first] != '#';
  }
  if (g6) {
    auto gs = parse_graph6_lines(text);
    if (gs.size() != 1)
      throw ParseError("expected exactly one graph in '" + path + "', found " + std::to_string(gs.size()), 0);
    return gs.front();
  }
  return parse_edgelist(text);
}

}  // namespace homvec
