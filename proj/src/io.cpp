#include "forcing/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "forcing/errors.hpp"

namespace forcing {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::int64_t parse_int(const Line& line, std::string_view token, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line.number, std::string("non-integer ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line.number, "expected " + std::to_string(count - 1) + " fields after '" +
                          std::string(line.tokens[0]) + "'");
  }
}

VertexId parse_vertex(const Line& line, std::string_view token, int vertex_count) {
  auto v = parse_int(line, token, "vertex id");
  if (v < 1 || v > vertex_count) {
    fail(line.number, "vertex id " + std::to_string(v) + " out of range 1.." +
                          std::to_string(vertex_count));
  }
  return static_cast<VertexId>(v);
}

template <typename Graph>
std::string format_impl(const Graph& graph, const char* kind) {
  std::ostringstream out;
  out << "p " << kind << ' ' << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  if (graph.terminals()) {
    out << "t " << graph.terminals()->source << ' ' << graph.terminals()->target << '\n';
  }
  for (const Edge& e : graph.edges()) {
    out << "e " << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
  }
  return out.str();
}

}  // namespace

ProblemGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty problem file");
  const Line& header = lines.front();
  if (header.tokens[0] != "p") fail(header.number, "expected 'p' header line first");
  expect_arity(header, 4);
  bool directed;
  if (header.tokens[1] == "digraph") {
    directed = true;
  } else if (header.tokens[1] == "graph") {
    directed = false;
  } else {
    fail(header.number, "unknown problem kind '" + std::string(header.tokens[1]) + "'");
  }
  auto n = parse_int(header, header.tokens[2], "vertex count");
  auto m = parse_int(header, header.tokens[3], "edge count");
  if (n < 0 || m < 0) fail(header.number, "negative count in header");
  const int vertex_count = static_cast<int>(n);

  std::optional<Terminals> terminals;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string_view kind = line.tokens[0];
    if (kind == "t") {
      expect_arity(line, 3);
      if (terminals) fail(line.number, "duplicate terminal line");
      terminals = Terminals{parse_vertex(line, line.tokens[1], vertex_count),
                            parse_vertex(line, line.tokens[2], vertex_count)};
    } else if (kind == "e") {
      expect_arity(line, 4);
      Edge e;
      e.tail = parse_vertex(line, line.tokens[1], vertex_count);
      e.head = parse_vertex(line, line.tokens[2], vertex_count);
      e.weight = parse_int(line, line.tokens[3], "weight");
      if (e.weight > kMaxAbsWeight || e.weight < -kMaxAbsWeight) {
        fail(line.number, "weight magnitude exceeds 1e9");
      }
      edges.push_back(e);
      edge_lines.push_back(line.number);
    } else if (kind == "p") {
      fail(line.number, "duplicate header");
    } else {
      fail(line.number, "unknown line type '" + std::string(kind) + "'");
    }
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  if (directed && !terminals) throw InputError("digraph problem requires a 't <s> <t>' line");
  if (terminals) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].weight < 1) fail(edge_lines[i], "nonpositive weight in a shortest-path input");
    }
  }
  if (directed) return WeightedDigraph(vertex_count, std::move(edges), terminals);
  return WeightedMultigraph(vertex_count, std::move(edges), terminals);
}

std::string format_graph(const WeightedDigraph& graph) { return format_impl(graph, "digraph"); }
std::string format_graph(const WeightedMultigraph& graph) { return format_impl(graph, "graph"); }

MatroidFile parse_matroid(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty matroid file");
  const Line& header = lines.front();
  if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "matroid") {
    fail(header.number, "expected 'p matroid <n>' header");
  }
  expect_arity(header, 3);
  MatroidFile file;
  auto n = parse_int(header, header.tokens[2], "ground-set size");
  if (n < 0) fail(header.number, "negative ground-set size");
  file.ground_size = static_cast<int>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "b") fail(line.number, "expected 'b' basis line");
    std::vector<int> basis;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      basis.push_back(parse_vertex(line, line.tokens[j], file.ground_size));
    }
    file.bases.push_back(std::move(basis));
  }
  if (file.bases.empty()) throw InputError("matroid file lists no bases");
  return file;
}

std::map<int, Weight> parse_weights(std::string_view text) {
  std::map<int, Weight> weights;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "w") fail(line.number, "expected 'w <id> <weight>' line");
    expect_arity(line, 3);
    auto id = parse_int(line, line.tokens[1], "element id");
    auto w = parse_int(line, line.tokens[2], "weight");
    if (id < 1) fail(line.number, "element ids start at 1");
    if (w > kMaxAbsWeight || w < -kMaxAbsWeight) fail(line.number, "weight magnitude exceeds 1e9");
    if (!weights.emplace(static_cast<int>(id), w).second) {
      fail(line.number, "duplicate weight for element " + std::to_string(id));
    }
  }
  return weights;
}

}  // namespace forcing
