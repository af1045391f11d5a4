#include "wiener/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "wiener/errors.hpp"

namespace wiener {

namespace {

// Rows of an order <= 8 graph packed one byte per vertex.
using PackedRows = std::uint64_t;

inline std::uint8_t packed_row(PackedRows rows, int v) { return static_cast<std::uint8_t>(rows >> (8 * v)); }

inline std::uint8_t reach_mask(PackedRows rows, int source) {
  std::uint8_t visited = static_cast<std::uint8_t>(1U << source);
  std::uint8_t frontier = visited;
  while (frontier != 0) {
    std::uint8_t next = 0;
    for (unsigned f = frontier; f != 0; f &= f - 1) next |= packed_row(rows, std::countr_zero(f));
    frontier = next & static_cast<std::uint8_t>(~visited);
    visited |= frontier;
  }
  return visited;
}

// Distance counts packed 8 bits per distance (distance i in byte i-1). Counts
// never exceed C(8,2) = 28 and the diameter is at most 7.
inline std::uint64_t packed_distribution(PackedRows rows, int n) {
  std::uint64_t key = 0;
  for (int s = 0; s + 1 < n; ++s) {
    const std::uint8_t above = static_cast<std::uint8_t>((0xFFU << (s + 1)) & ((1U << n) - 1));
    std::uint8_t visited = static_cast<std::uint8_t>(1U << s);
    std::uint8_t frontier = visited;
    for (int dist = 0; frontier != 0; ++dist) {
      std::uint8_t next = 0;
      for (unsigned f = frontier; f != 0; f &= f - 1) next |= packed_row(rows, std::countr_zero(f));
      frontier = next & static_cast<std::uint8_t>(~visited);
      visited |= frontier;
      key += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(frontier & above))) << (8 * dist);
    }
  }
  return key;
}

std::vector<std::uint64_t> unpack_distribution(std::uint64_t key) {
  std::vector<std::uint64_t> d;
  for (; key != 0; key >>= 8) d.push_back(key & 0xFF);
  return d;
}

struct WorkerResult {
  std::unordered_map<std::uint64_t, std::uint64_t> first_mask;  // packed d-vector -> smallest edge mask
  std::uint64_t connected = 0;
  std::uint64_t labeled = 0;
  std::uint64_t invariant_violations = 0;
};

}  // namespace

ConnectedSweep enumerate_connected_distributions(int n, const SweepOptions& options) {
  if (n < 2 || n > kMaxGraphOrder) {
    throw DomainError("connected-graph enumeration supports 2 <= n <= 8, got " + std::to_string(n));
  }
  if (n > kDefaultMaxGraphOrder && !options.allow_long) {
    throw DomainError("order-8 graph enumeration is long-running; enable it explicitly");
  }

  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const int edge_bits = static_cast<int>(pairs.size());
  const int low_bits = std::min(edge_bits, 14);
  const int high_bits = edge_bits - low_bits;

  auto table_for = [&](int offset, int bits) {
    std::vector<PackedRows> table(std::size_t{1} << bits, 0);
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
      const int b = std::countr_zero(mask);
      const auto [u, v] = pairs[offset + b];
      table[mask] = table[mask & (mask - 1)] | (PackedRows{1} << (8 * u + v)) | (PackedRows{1} << (8 * v + u));
    }
    return table;
  };
  const auto low_table = table_for(0, low_bits);
  const auto high_table = table_for(low_bits, high_bits);

  const std::uint64_t expected_sum = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint8_t all = static_cast<std::uint8_t>((1U << n) - 1);
  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerResult> results(static_cast<std::size_t>(jobs));

  auto work = [&](int worker) {
    WorkerResult& out = results[static_cast<std::size_t>(worker)];
    for (std::size_t high = static_cast<std::size_t>(worker); high < high_table.size(); high += jobs) {
      const PackedRows high_rows = high_table[high];
      for (std::size_t low = 0; low < low_table.size(); ++low) {
        ++out.labeled;
        const PackedRows rows = high_rows | low_table[low];
        if (reach_mask(rows, 0) != all) continue;
        ++out.connected;
        const std::uint64_t key = packed_distribution(rows, n);
        std::uint64_t sum = 0;
        bool gap = false;
        for (std::uint64_t k = key; k != 0; k >>= 8) {
          sum += k & 0xFF;
          gap = gap || (k & 0xFF) == 0;
        }
        if (sum != expected_sum || gap) ++out.invariant_violations;
        const std::uint64_t mask = (static_cast<std::uint64_t>(high) << low_bits) | low;
        auto [it, inserted] = out.first_mask.try_emplace(key, mask);
        if (!inserted && mask < it->second) it->second = mask;
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  ConnectedSweep sweep{{}, EnumerationStats{n, 0, 0, 0}};
  for (auto& r : results) {
    sweep.stats.labeled_graphs += r.labeled;
    sweep.stats.instances_examined += r.connected;
    if (r.invariant_violations != 0) {
      throw std::logic_error("distance distribution invariant violated during enumeration");
    }
    for (auto [key, mask] : r.first_mask) {
      auto [it, inserted] = merged.try_emplace(key, mask);
      if (!inserted && mask < it->second) it->second = mask;
    }
  }

  for (auto [key, mask] : merged) {
    Graph g(n);
    for (int b = 0; b < edge_bits; ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    }
    sweep.classes.push_back({DistanceDistribution(n, unpack_distribution(key)), std::move(g)});
  }
  std::sort(sweep.classes.begin(), sweep.classes.end(),
            [](const DistributionClass& a, const DistributionClass& b) { return a.distribution < b.distribution; });
  sweep.stats.distinct_distributions = sweep.classes.size();
  return sweep;
}

// Free trees follow the Wright-Richmond-Odlyzko-McKay successor on level
// sequences: rooted-tree successor plus the centroid validity test.
namespace {

using Levels = std::vector<int>;

// Successor of a canonical rooted level sequence, changing positions >= p.
bool next_rooted(Levels& seq, int p) {
  if (p < 0) {
    p = static_cast<int>(seq.size()) - 1;
    while (p > 0 && seq[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (seq[q] != seq[p] - 1) --q;
  for (std::size_t i = static_cast<std::size_t>(p); i < seq.size(); ++i) seq[i] = seq[i - p + q];
  return true;
}

// Splits at the root's second child: the first subtree (levels shifted up by
// one) and the remaining tree.
std::pair<Levels, Levels> split_first_subtree(const Levels& seq) {
  std::size_t m = seq.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
  Levels rest{0};
  for (std::size_t i = m; i < seq.size(); ++i) rest.push_back(seq[i]);
  return {std::move(left), std::move(rest)};
}

bool next_free(Levels& seq) {
  auto [left, rest] = split_first_subtree(seq);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size() || (left.size() == rest.size() && left > rest)) valid = false;
  }
  if (valid) return true;

  const int p = static_cast<int>(left.size());
  const int old_at_p = seq[static_cast<std::size_t>(p)];
  if (!next_rooted(seq, p)) return false;
  if (old_at_p > 2) {
    const auto new_left = split_first_subtree(seq).first;
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) seq[seq.size() - len + i] = static_cast<int>(i) + 1;
  }
  return true;
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw DomainError("tree enumeration supports 1 <= n <= 18, got " + std::to_string(n));
  }
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  if (n_ <= 2) {
    // A single tree each; the successor rules below need n >= 3.
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    levels_.clear();
    for (int i = 0; i < n_; ++i) levels_.push_back(i);
    return true;
  }
  if (!started_) {
    started_ = true;
    for (int i = 0; i <= n_ / 2; ++i) levels_.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i) levels_.push_back(i);
  } else if (!next_rooted(levels_, -1)) {
    done_ = true;
    return false;
  }
  if (!next_free(levels_)) {
    done_ = true;
    return false;
  }
  return true;
}

Graph graph_from_levels(const std::vector<int>& levels) {
  Graph g(static_cast<int>(levels.size()));
  std::vector<int> last_at_level;
  for (int v = 0; v < static_cast<int>(levels.size()); ++v) {
    const int lv = levels[static_cast<std::size_t>(v)];
    if (lv > 0) g.add_edge(last_at_level.at(static_cast<std::size_t>(lv - 1)), v);
    last_at_level.resize(static_cast<std::size_t>(lv) + 1);
    last_at_level[static_cast<std::size_t>(lv)] = v;
  }
  return g;
}

Graph FreeTreeGenerator::graph() const { return graph_from_levels(levels_); }

void enumerate_trees(int n, const std::function<void(const Graph&)>& visit) {
  FreeTreeGenerator gen(n);
  while (gen.next()) visit(gen.graph());
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace wiener
