#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

struct EnumerationStats {
  int order = 0;
  /// Every labeled graph on `order` vertices that was visited.
  std::uint64_t labeled_graphs = 0;
  /// Labeled connected graphs whose distance distribution was computed.
  std::uint64_t instances_examined = 0;
  std::uint64_t distinct_distributions = 0;
};

/// One distinct distance distribution together with the labeled graph of
/// smallest edge mask that realises it.
struct DistributionClass {
  DistanceDistribution distribution;
  Graph representative;
};

struct ConnectedSweep {
  std::vector<DistributionClass> classes;  // sorted by distribution
  EnumerationStats stats;
};

struct SweepOptions {
  int jobs = 1;
  /// Order 8 visits 2^28 labeled graphs; callers must opt in.
  bool allow_long = false;
};

inline constexpr int kDefaultMaxGraphOrder = 7;
inline constexpr int kMaxGraphOrder = 8;

/// Brute force over all 2^C(n,2) labeled graphs, keeping each distinct
/// distance distribution of a connected graph once.
///
/// The edge-mask space is split by its high bits across `jobs` workers; each
/// worker deduplicates locally and the sets are merged at the end.
ConnectedSweep enumerate_connected_distributions(int n, const SweepOptions& options = {});

inline constexpr int kMaxTreeOrder = 18;

/// Free-tree generator over canonical level sequences (centroid-rooted),
/// producing each unlabeled tree of order n exactly once.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);

  /// Advances to the next tree; returns false once the sequence is exhausted.
  /// The first call positions the generator on the first tree.
  bool next();

  /// Level (depth) of each vertex in preorder; levels()[0] == 0 is the root.
  const std::vector<int>& levels() const { return levels_; }
  Graph graph() const;

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> levels_;
};

/// Calls `visit` once per free tree of order n, in generation order.
void enumerate_trees(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> all_trees(int n);

Graph graph_from_levels(const std::vector<int>& levels);

}  // namespace wiener
