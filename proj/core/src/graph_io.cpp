#include "cblock/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cblock/errors.hpp"

namespace cblock {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long parse_int(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a decimal integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::set<Edge> seen;
  EdgeSet edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
    const long long a = parse_int(tokens[0], line_no);
    const long long b = parse_int(tokens[1], line_no);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "malformed header: counts must be non-negative");
      n = a;
      m = b;
      have_header = true;
    } else {
      if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more edges than declared");
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex index out of range");
      if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
      const Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge " + format_edge(e));
      edges.push_back(e);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "malformed header: missing \"n m\" line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string format_edge(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string format_edges(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += format_edge(e);
  }
  return out;
}

}  // namespace cblock
