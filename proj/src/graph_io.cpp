#include "monopos/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "monopos/errors.hpp"

namespace monopos {

namespace {

constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
  return c - kBias;
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input", 0);

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError("graph6: 8-byte order header exceeds the supported order", 1);
    }
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(text, pos);
    if (n < 63) throw ParseError("graph6: long order header used for order < 63", 1);
  } else {
    n = decode_byte(text, 0);
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices), 0);
  }

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() < pos + byte_count) {
    throw ParseError("graph6: truncated edge vector, expected " + std::to_string(byte_count) + " bytes", text.size());
  }
  if (text.size() > pos + byte_count) {
    throw ParseError("graph6: trailing bytes after edge vector", pos + byte_count);
  }

  GraphBuilder b(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const std::size_t last = pos + byte_count - 1;
    const int pad_mask = (1 << (6 - bit_count % 6)) - 1;
    if (decode_byte(text, last) & pad_mask) throw ParseError("graph6: non-zero padding bits", last);
  }
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim_line_end(text.substr(start, end - start));
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(),
                         start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  int n = -1;
  long m = -1;
  long seen = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("edge list: expected two integers", line_offset + first);
    }
    if (n < 0) {
      if (a < 0 || a > kMaxVertices || b < 0) throw ParseError("edge list: bad header", line_offset + first);
      n = static_cast<int>(a);
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw ParseError("edge list: invalid edge " + std::to_string(a) + " " + std::to_string(b), line_offset + first);
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++seen;
  }
  if (n < 0) throw ParseError("edge list: missing header", 0);
  if (seen != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " + std::to_string(seen),
                     offset > 0 ? offset - 1 : 0);
  }
  return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // An edge list starts with two whitespace-separated integers.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long a = 0;
    long b = 0;
    if (fields >> a >> b) return parse_edge_list(text);
    break;
  }
  auto graphs = parse_graph6_lines(text);
  if (graphs.size() != 1) {
    throw ParseError("expected exactly one graph in " + path + ", found " + std::to_string(graphs.size()), 0);
  }
  return graphs.front();
}

}  // namespace monopos
