#include "seplab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace seplab {

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ContractError("graph size must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  stride_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(stride_), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ContractError("vertex id " + std::to_string(v) + " out of range [0," +
                        std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto& av = adj_[static_cast<std::size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  bits_[static_cast<std::size_t>(u) * stride_ + v / 64] |= uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * stride_ + u / 64] |= uint64_t{1} << (u % 64);
  ++m_;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_neighbor_in(int v, const VertexSet& xs) const {
  for (int w : neighbors(v)) {
    if (xs.contains(w)) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.adj_ == b.adj_;
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (raw[start] == '#') continue;
    std::size_t end = raw.find_last_not_of(" \t\r");
    lines.push_back({number, raw.substr(start, end - start + 1)});
  }
  return lines;
}

Graph parse_edge_list(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("line 1: missing 'n m' header");
  long long n = 0, m = 0;
  {
    std::istringstream hdr(lines[0].text);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0) {
      throw ParseError("line " + std::to_string(lines[0].number) +
                       ": malformed header, expected 'n m'");
    }
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("line " + std::to_string(lines.back().number) +
                     ": expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  }
  Graph g(static_cast<int>(n));
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string at = "line " + std::to_string(lines[i].number);
    std::istringstream es(lines[i].text);
    long long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) {
      throw ParseError(at + ": malformed edge, expected 'u v'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(at + ": vertex id out of range [0," + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(at + ": self-loop at vertex " + std::to_string(u));
    std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                            static_cast<int>(std::max(u, v))};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError(at + ": parallel edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    seen.push_back(key);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph parse_graph6(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') {
      if (!s.empty()) break;
      continue;
    }
    s.push_back(c);
  }
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw ParseError("line 1: empty graph6 input");
  std::size_t pos = 0;
  long long n = 0;
  auto val = [&](std::size_t i) -> int {
    if (i >= s.size() || s[i] < 63 || s[i] > 126) {
      throw ParseError("line 1: invalid graph6 byte at position " + std::to_string(i));
    }
    return s[i] - 63;
  };
  if (s[0] == '~') {
    if (s.size() > 1 && s[1] == '~') {
      n = 0;
      for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
      pos = 8;
    } else {
      n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
      pos = 4;
    }
  } else {
    n = val(0);
    pos = 1;
  }
  if (n > 100000) throw ParseError("line 1: graph6 order too large");
  Graph g(static_cast<int>(n));
  long long need = n * (n - 1) / 2;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int chunk = val(pos + static_cast<std::size_t>(bit / 6));
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  std::size_t expect = pos + static_cast<std::size_t>((need + 5) / 6);
  if (s.size() != expect) {
    throw ParseError("line 1: graph6 payload length mismatch");
  }
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
      return parse_graph6(text);
  }
  throw ContractError("unknown graph format");
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back('~');
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw ContractError("graph too large for graph6 writer");
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return s;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count()) throw ContractError("set member out of range");
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> out;
  for (int v : x) {
    for (int w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (!in_x[wi] && !hit[wi]) {
        hit[wi] = 1;
        out.push_back(w);
      }
    }
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  return set_union(neighborhood(g, x), x);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : within) {
    if (v < 0 || v >= g.vertex_count()) throw ContractError("set member out of range");
    member[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexSet> out;
  for (int start : within) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (member[wi] && !seen[wi]) {
          seen[wi] = 1;
          q.push(w);
        }
      }
    }
    out.push_back(VertexSet(std::move(comp)));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, VertexSet::range(g.vertex_count()));
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

std::optional<Path> path_through(const Graph& g, const VertexSet& from,
                                 const VertexSet& to, const VertexSet& via) {
  if (!set_intersection(from, to).empty()) {
    throw ContractError("path_through: source and target sets intersect");
  }
  auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> in_to(n, 0), allowed(n, 0), seen(n, 0);
  for (int v : to) in_to[static_cast<std::size_t>(v)] = 1;
  for (int v : via) allowed[static_cast<std::size_t>(v)] = 1;
  std::vector<int> parent(n, -1);
  std::queue<int> q;
  for (int v : from) {
    seen[static_cast<std::size_t>(v)] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (in_to[wi]) {
        Path p;
        for (int c = u; c != -1; c = parent[static_cast<std::size_t>(c)]) p.push_back(c);
        std::reverse(p.begin(), p.end());
        return p;
      }
      if (!allowed[wi] || seen[wi]) continue;
      seen[wi] = 1;
      parent[wi] = u;
      q.push(w);
    }
  }
  return std::nullopt;
}

bool is_induced_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      bool want = (j == i + 1);
      if (g.adjacent(p[i], p[j]) != want) return false;
    }
  }
  return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
  std::size_t k = cycle.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      bool want = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != want) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      if (!g.adjacent(x[i], x[j])) return false;
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out{Graph(keep.size()), keep.ids()};
  for (int i = 0; i < keep.size(); ++i) {
    for (int j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

}  // namespace seplab
