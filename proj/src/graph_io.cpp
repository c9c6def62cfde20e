#include "ctsp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ctsp/error.hpp"

namespace ctsp {

GraphFormat parse_format_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  throw UnsupportedFormat("unknown graph format '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base, false);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < 63 || text[i] > 126)
      throw ParseError("graph6 byte out of range", base + i, false);

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size(), false);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size header", base + text.size(), false);
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (text[i] - 63);
    pos = 8;
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     base + pos, false);

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> body(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const auto& [u, v] : g.edges()) {
    if (g.multiplicity(u, v) > 1) throw UnsupportedFormat("graph6 cannot encode parallel edges");
    const long long k = static_cast<long long>(v) * (v - 1) / 2 + u;
    body[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
  }
  for (unsigned char b : body) out.push_back(static_cast<char>(b + 63));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long declared = -1;
  long long max_id = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.substr(0, 2) == "n=") {
        if (!parse_int(trim(body.substr(2)), declared) || declared < 0)
          throw ParseError("bad vertex count declaration", line_no, true);
      }
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw ParseError("expected two vertex ids", line_no, true);
    long long u = 0, v = 0;
    if (!parse_int(trim(line.substr(0, sp)), u) || !parse_int(trim(line.substr(sp)), v))
      throw ParseError("expected two vertex ids", line_no, true);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no, true);
    if (u == v) throw ParseError("loop edge at vertex " + std::to_string(u), line_no, true);
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (declared >= 0 && max_id >= declared)
      throw ParseError("vertex id " + std::to_string(max_id) + " out of range", line_no, true);
  }
  const long long n = declared >= 0 ? declared : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << "# n=" << g.order() << "\n";
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::graph6) return parse_graph6(text);
  return parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::graph6) return serialize_graph6(g);
  return serialize_edge_list(g);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in graph6 record", line_no, true);
    }
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path, std::string_view format_hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  GraphFormat fmt;
  if (!format_hint.empty()) {
    fmt = parse_format_name(format_hint);
  } else {
    const bool g6 = path.ends_with(".g6") || path.ends_with(".graph6");
    fmt = g6 ? GraphFormat::graph6 : GraphFormat::edge_list;
  }
  if (fmt == GraphFormat::graph6) return parse_graph6_lines(text);
  return {parse_edge_list(text)};
}

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& [u, v] = g.edge(e);
    os << "  " << u << " -- " << v;
    std::vector<std::string> attrs;
    if (!style.highlight.empty() && style.highlight[e]) attrs.push_back("penwidth=3");
    if (!style.edge_uses.empty() && style.edge_uses[e] > 0)
      attrs.push_back("label=\"" + std::to_string(style.edge_uses[e]) + "\"");
    if (!style.edge_uses.empty() && style.edge_uses[e] == 0) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? "," : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ctsp
