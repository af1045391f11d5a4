#include "wiener/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "wiener/errors.hpp"

namespace wiener {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1 || n > kMaxOrder) {
    throw DomainError("graph order must be in [1, " + std::to_string(kMaxOrder) + "], got " + std::to_string(n));
  }
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

int Graph::degree(int v) const {
  int deg = 0;
  for (auto w : row(v)) deg += std::popcount(w);
  return deg;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if ((row(u)[v / 64] >> (v % 64)) & 1U) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

// Visits BFS layers from `source`; `layer(dist, frontier)` sees each new layer.
template <class F>
void bfs_layers(const Graph& g, int source, std::vector<std::uint64_t>& visited, std::vector<std::uint64_t>& frontier,
                std::vector<std::uint64_t>& next, F&& layer) {
  const int words = g.words_per_row();
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  visited[source / 64] = frontier[source / 64] = std::uint64_t{1} << (source % 64);
  for (int dist = 1;; ++dist) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      for (std::uint64_t bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const int v = w * 64 + std::countr_zero(bits);
        const auto r = g.row(v);
        for (int k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    bool any = false;
    for (int k = 0; k < words; ++k) {
      next[k] &= ~visited[k];
      visited[k] |= next[k];
      any = any || next[k] != 0;
    }
    if (!any) return;
    layer(dist, std::span<const std::uint64_t>(next));
    frontier.swap(next);
  }
}

}  // namespace

bool Graph::is_connected() const {
  std::vector<std::uint64_t> visited(words_), frontier(words_), next(words_);
  int reached = 1;
  bfs_layers(*this, 0, visited, frontier, next, [&](int, std::span<const std::uint64_t> layer) {
    for (auto w : layer) reached += std::popcount(w);
  });
  return reached == n_;
}

bool Graph::is_tree() const { return edge_count() + 1 == static_cast<std::size_t>(n_) && is_connected(); }

DistanceDistribution::DistanceDistribution(int n, std::vector<std::uint64_t> d) : n_(n), d_(std::move(d)) {
  if (n < 2) throw DomainError("distance distribution needs order >= 2");
  if (d_.empty()) throw DomainError("distance distribution must be nonempty");
  std::uint64_t total = 0;
  for (auto c : d_) {
    if (c == 0) throw DomainError("distance distribution entries must be positive");
    total += c;
  }
  const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (total != pairs) {
    throw DomainError("distance distribution sums to " + std::to_string(total) + ", expected C(n,2) = " +
                      std::to_string(pairs));
  }
}

std::string to_string(const DistanceDistribution& dd) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dd.counts().size(); ++i) os << (i ? "," : "") << dd.counts()[i];
  os << ')';
  return os.str();
}

DistanceDistribution distance_distribution(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("distance distribution needs order >= 2");
  const int words = g.words_per_row();
  std::vector<std::uint64_t> visited(words), frontier(words), next(words), above(words);
  std::vector<std::uint64_t> counts;
  for (int s = 0; s < n; ++s) {
    // Only count partners with a larger index so every pair is counted once.
    std::fill(above.begin(), above.end(), 0);
    for (int v = s + 1; v < n; ++v) above[v / 64] |= std::uint64_t{1} << (v % 64);
    int reached = 1;
    bfs_layers(g, s, visited, frontier, next, [&](int dist, std::span<const std::uint64_t> layer) {
      std::uint64_t c = 0;
      for (int k = 0; k < words; ++k) {
        reached += std::popcount(layer[k]);
        c += static_cast<std::uint64_t>(std::popcount(layer[k] & above[k]));
      }
      if (counts.size() < static_cast<std::size_t>(dist)) counts.resize(dist, 0);
      counts[dist - 1] += c;
    });
    if (reached != n) throw DisconnectedGraphError("graph is disconnected; its Wiener polynomial is undefined");
  }
  return DistanceDistribution(n, std::move(counts));
}

int diameter(const Graph& g) {
  if (g.order() == 1) {
    return 0;
  }
  return distance_distribution(g).diameter();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1) throw ParseError("edge list line " + std::to_string(line_no) + ": expected order");
      continue;
    }
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    std::string extra;
    if (ls >> extra) throw ParseError("edge list line " + std::to_string(line_no) + ": trailing text");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list is empty");
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace wiener
