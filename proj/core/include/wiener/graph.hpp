#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wiener {

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bit rows.
///
/// Row v has bit u set iff {u,v} is an edge. Symmetry and the absence of
/// loops are maintained by every mutator, so a Graph value always satisfies
/// both invariants.
class Graph {
 public:
  static constexpr int kMaxOrder = 256;

  explicit Graph(int n);

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  std::size_t edge_count() const;
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Pair counts by distance: d[i-1] is the number of unordered pairs at
/// distance i, for i = 1..D.
class DistanceDistribution {
 public:
  DistanceDistribution(int n, std::vector<std::uint64_t> d);

  int order() const { return n_; }
  int diameter() const { return static_cast<int>(d_.size()); }
  const std::vector<std::uint64_t>& counts() const { return d_; }
  std::uint64_t operator[](int distance) const { return d_.at(static_cast<std::size_t>(distance - 1)); }

  friend auto operator<=>(const DistanceDistribution&, const DistanceDistribution&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> d_;
};

std::string to_string(const DistanceDistribution& dd);

/// BFS from every vertex with bitset frontiers. Throws DisconnectedGraphError
/// when g is disconnected and DomainError when g has fewer than 2 vertices.
DistanceDistribution distance_distribution(const Graph& g);

int diameter(const Graph& g);

/// Edge-list text: first non-comment line is n, then one "u v" pair per line
/// (0-indexed). Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace wiener
