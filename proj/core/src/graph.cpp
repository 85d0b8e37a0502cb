#include "fourecc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace fourecc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ >= kNoVertex || edges_.size() >= kNoEdge) {
    throw std::length_error("graph too large for 32-bit ids");
  }
  std::vector<std::size_t> degree(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::out_of_range("edge endpoint out of range");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidences_.resize(offsets_[vertex_count_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidences_[cursor[e.u]++] = {e.v, id};
    incidences_[cursor[e.v]++] = {e.u, id};
  }
}

Labeling Labeling::canonical(std::span<const std::uint32_t> raw) {
  Labeling out;
  out.label.resize(raw.size());
  std::uint32_t max_raw = 0;
  for (auto r : raw) max_raw = std::max(max_raw, r);
  std::vector<std::uint32_t> renumber(raw.empty() ? 0 : std::size_t{max_raw} + 1,
                                      std::numeric_limits<std::uint32_t>::max());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto& slot = renumber[raw[v]];
    if (slot == std::numeric_limits<std::uint32_t>::max()) slot = out.class_count++;
    out.label[v] = slot;
  }
  return out;
}

std::vector<std::vector<VertexId>> Labeling::classes() const {
  std::vector<std::vector<VertexId>> out(class_count);
  for (VertexId v = 0; v < label.size(); ++v) out[label[v]].push_back(v);
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line; false at end of input.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return true;
    }
    return false;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

// Parses exactly two integers from a line.
void parse_pair(std::string_view line, std::size_t line_no, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  long long* out[2] = {&a, &b};
  for (auto* slot : out) {
    skip_ws();
    auto [next, ec] = std::from_chars(p, end, *slot);
    if (ec != std::errc{} || next == p) {
      throw ParseError(line_no, "expected two integers, got '" + std::string(line) + "'");
    }
    p = next;
  }
  skip_ws();
  if (p != end) throw ParseError(line_no, "trailing characters in '" + std::string(line) + "'");
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(1, "missing 'n m' header");
  long long n = 0;
  long long m = 0;
  parse_pair(line, reader.line_no(), n, m);
  if (n < 0 || m < 0) throw ParseError(reader.line_no(), "negative vertex or edge count");
  if (n >= static_cast<long long>(kNoVertex) || m >= static_cast<long long>(kNoEdge)) {
    throw ParseError(reader.line_no(), "vertex or edge count too large");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, "expected " + std::to_string(m) + " edges, found " +
                                                 std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, reader.line_no(), u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(reader.line_no(), "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (reader.next(line)) throw ParseError(reader.line_no(), "unexpected content after edge list");
  return Multigraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string graph_to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json doc = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
  return doc.dump();
}

LoopFreeGraph strip_self_loops(const Multigraph& g) {
  LoopFreeGraph out;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    edges.push_back(g.edge(e));
    out.id_map.push_back(e);
  }
  out.graph = Multigraph(g.vertex_count(), std::move(edges));
  return out;
}

Labeling connected_components(const Multigraph& g, std::span<const std::uint8_t> keep_edge) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> raw(n, kNoVertex);
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (raw[s] != kNoVertex) continue;
    raw[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : g.neighbors(queue[head])) {
        if (!keep_edge.empty() && !keep_edge[inc.edge]) continue;
        if (raw[inc.neighbor] == kNoVertex) {
          raw[inc.neighbor] = next;
          queue.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  // BFS from ascending seeds already yields canonical numbering.
  return Labeling{std::move(raw), next};
}

std::vector<Subgraph> split_by_labels(const Multigraph& g, const Labeling& parts,
                                      std::span<const std::uint8_t> keep_edge) {
  std::vector<Subgraph> out(parts.class_count);
  std::vector<VertexId> local(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& sub = out[parts.label[v]];
    local[v] = static_cast<VertexId>(sub.to_parent_vertex.size());
    sub.to_parent_vertex.push_back(v);
  }
  std::vector<std::vector<Edge>> edges(parts.class_count);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge.empty() && !keep_edge[e]) continue;
    const Edge& ed = g.edge(e);
    const auto c = parts.label[ed.u];
    if (c != parts.label[ed.v]) continue;
    edges[c].push_back({local[ed.u], local[ed.v]});
    out[c].to_parent_edge.push_back(e);
  }
  for (std::uint32_t c = 0; c < parts.class_count; ++c) {
    out[c].graph = Multigraph(out[c].to_parent_vertex.size(), std::move(edges[c]));
  }
  return out;
}

}  // namespace fourecc
