#include "abmod/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "abmod/errors.hpp"

namespace abmod {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, bool commas) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) { return c == ' ' || c == '\t' || c == '\r' || (commas && c == ','); };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<std::size_t> to_number(std::string_view s) {
  if (!all_digits(s)) return std::nullopt;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphDocument run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::string_view line =
          text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++line_no;
      handle(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!have_header_) throw ParseError(line_no, 1, "missing 'p <n> <m>' header");
    if (edges_.size() != m_)
      throw ParseError(line_no, 1,
                       "header announces " + std::to_string(m_) + " edges but " +
                           std::to_string(edges_.size()) + " were given");

    GraphDocument doc;
    doc.graph = Graph::from_edges(n_, edges_);
    if (!names_.empty()) {
      doc.labels.resize(n_);
      for (std::size_t v = 0; v < n_; ++v) doc.labels[v] = std::to_string(v);
      for (const auto& [name, v] : names_) doc.labels[v] = name;
    }
    if (side_) {
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        if (side_->contains(u) == side_->contains(v))
          throw ParseError(edge_lines_[i], 1, "edge does not cross the bipartition");
      }
      doc.x_side = side_;
    }
    return doc;
  }

 private:
  void handle(std::string_view line, std::size_t line_no) {
    const std::vector<Token> tokens = tokenize(line, false);
    if (tokens.empty()) return;
    const std::string_view head = tokens[0].text;
    if (head == "c") return;
    if (head == "p") return header(tokens, line_no);
    if (!have_header_) throw ParseError(line_no, tokens[0].column, "record before the 'p' header");
    if (head == "l") return label(tokens, line_no);
    if (head == "s") return sides(line, tokens, line_no);
    if (head == "e") return edge(std::vector<Token>(tokens.begin() + 1, tokens.end()), tokens[0], line_no);
    edge(tokens, tokens[0], line_no);
  }

  void header(const std::vector<Token>& t, std::size_t line_no) {
    if (have_header_) throw ParseError(line_no, t[0].column, "duplicate 'p' header");
    if (t.size() != 3) throw ParseError(line_no, t[0].column, "expected 'p <n> <m>'");
    const auto n = to_number(t[1].text);
    if (!n) throw ParseError(line_no, t[1].column, "vertex count is not a number");
    const auto m = to_number(t[2].text);
    if (!m) throw ParseError(line_no, t[2].column, "edge count is not a number");
    n_ = *n;
    m_ = *m;
    have_header_ = true;
    seen_.assign(n_, {});
  }

  void label(const std::vector<Token>& t, std::size_t line_no) {
    if (t.size() != 3) throw ParseError(line_no, t[0].column, "expected 'l <id> <name>'");
    const auto id = to_number(t[1].text);
    if (!id || *id >= n_) throw ParseError(line_no, t[1].column, "label id out of range");
    if (all_digits(t[2].text)) throw ParseError(line_no, t[2].column, "label names may not be all digits");
    const std::string name(t[2].text);
    if (names_.count(name) != 0) throw ParseError(line_no, t[2].column, "duplicate label '" + name + "'");
    for (const auto& [other, v] : names_)
      if (v == *id) throw ParseError(line_no, t[1].column, "vertex already labelled '" + other + "'");
    names_.emplace(name, static_cast<Vertex>(*id));
  }

  Vertex vertex(const Token& tok, std::size_t line_no) const {
    if (const auto id = to_number(tok.text)) {
      if (*id >= n_)
        throw ParseError(line_no, tok.column,
                         "vertex " + std::string(tok.text) + " out of range 0.." +
                             std::to_string(n_ == 0 ? 0 : n_ - 1));
      return static_cast<Vertex>(*id);
    }
    const auto it = names_.find(std::string(tok.text));
    if (it == names_.end())
      throw ParseError(line_no, tok.column, "unknown vertex '" + std::string(tok.text) + "'");
    return it->second;
  }

  void sides(std::string_view line, const std::vector<Token>& head, std::size_t line_no) {
    if (side_) throw ParseError(line_no, head[0].column, "duplicate 's' line");
    const std::string_view body = line.substr(head[0].column);
    std::vector<Token> t = tokenize(body, true);
    for (auto& tok : t) tok.column += head[0].column;
    VertexSet x(n_);
    const bool mask = t.size() == 1 && t[0].text.size() == n_ &&
                      std::all_of(t[0].text.begin(), t[0].text.end(),
                                  [](char c) { return c == '0' || c == '1'; });
    if (mask) {
      for (std::size_t i = 0; i < n_; ++i)
        if (t[0].text[i] == '1') x.insert(static_cast<Vertex>(i));
    } else {
      for (const auto& tok : t) x.insert(vertex(tok, line_no));
    }
    side_ = std::move(x);
  }

  void edge(const std::vector<Token>& t, const Token& head, std::size_t line_no) {
    if (t.size() != 2) throw ParseError(line_no, head.column, "expected an edge 'u v'");
    const Vertex u = vertex(t[0], line_no);
    const Vertex v = vertex(t[1], line_no);
    if (u == v) throw ParseError(line_no, t[1].column, "loop at vertex " + std::string(t[0].text));
    const Vertex lo = std::min(u, v);
    const Vertex hi = std::max(u, v);
    if (auto it = seen_[lo].find(hi); it != seen_[lo].end())
      throw ParseError(line_no, t[0].column,
                       "duplicate edge, first given on line " + std::to_string(it->second));
    seen_[lo].emplace(hi, line_no);
    edges_.emplace_back(u, v);
    edge_lines_.push_back(line_no);
  }

  std::string_view text_;
  bool have_header_ = false;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::unordered_map<std::string, Vertex> names_;
  std::vector<std::unordered_map<Vertex, std::size_t>> seen_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> edge_lines_;
  std::optional<VertexSet> side_;
};

}  // namespace

std::string GraphDocument::name_of(Vertex v) const {
  return v < labels.size() ? labels[v] : std::to_string(v);
}

Vertex GraphDocument::resolve(std::string_view token) const {
  if (const auto id = to_number(token)) {
    if (*id >= graph.order())
      throw InputError("vertex " + std::string(token) + " out of range (n=" +
                       std::to_string(graph.order()) + ")");
    return static_cast<Vertex>(*id);
  }
  const auto it = std::find(labels.begin(), labels.end(), token);
  if (it == labels.end()) throw InputError("unknown vertex '" + std::string(token) + "'");
  return static_cast<Vertex>(it - labels.begin());
}

GraphDocument parse_graph(std::string_view text) { return Parser(text).run(); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphDocument read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    // Keep the position, prefix the file name to the bare message.
    const std::string what = e.what();
    throw ParseError(e.line(), e.column(), path + ": " + what.substr(what.find(": ") + 2));
  }
}

std::string serialize_graph(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t v = 0; v < doc.labels.size(); ++v)
    if (doc.labels[v] != std::to_string(v)) out << "l " << v << ' ' << doc.labels[v] << '\n';
  if (doc.x_side) {
    out << "s ";
    for (Vertex v = 0; v < g.order(); ++v) out << (doc.x_side->contains(v) ? '1' : '0');
    out << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_graph(const Graph& g) {
  GraphDocument doc;
  doc.graph = g;
  return serialize_graph(doc);
}

VertexSet parse_vertex_set(std::string_view text, const GraphDocument& doc) {
  VertexSet s(doc.graph.order());
  for (const auto& tok : tokenize(text, true)) s.insert(doc.resolve(tok.text));
  return s;
}

VertexSet parse_side_spec(std::string_view text, const GraphDocument& doc) {
  const std::vector<Token> t = tokenize(text, true);
  const std::size_t n = doc.graph.order();
  if (t.size() == 1 && t[0].text.size() == n &&
      std::all_of(t[0].text.begin(), t[0].text.end(), [](char c) { return c == '0' || c == '1'; })) {
    VertexSet x(n);
    for (std::size_t i = 0; i < n; ++i)
      if (t[0].text[i] == '1') x.insert(static_cast<Vertex>(i));
    return x;
  }
  return parse_vertex_set(text, doc);
}

std::string format_set(const VertexSet& s, const GraphDocument& doc) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ',';
    first = false;
    out += doc.name_of(v);
  });
  out += '}';
  return out;
}

BipartiteGraph to_bipartite(const GraphDocument& doc) {
  if (doc.x_side) return BipartiteGraph(doc.graph, *doc.x_side);
  return BipartiteGraph::auto_sides(doc.graph);
}

}  // namespace abmod
