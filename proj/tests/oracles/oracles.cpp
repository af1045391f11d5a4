#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class pow2(long e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

}  // namespace

mpz_class labeled_connected(int n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    mpz_class v = pow2(static_cast<long>(m) * (m - 1) / 2);
    for (int k = 1; k < m; ++k) {
      v -= binom(m - 1, k - 1) * c[static_cast<std::size_t>(k)] * pow2(static_cast<long>(m - k) * (m - k - 1) / 2);
    }
    c[static_cast<std::size_t>(m)] = v;
  }
  return c[static_cast<std::size_t>(n)];
}

mpz_class free_trees(int n) {
  // Rooted trees: r(m+1) = (1/m) sum_{k=1}^{m} (sum_{d|k} d r(d)) r(m-k+1).
  std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) r[1] = 1;
  for (int m = 1; m < n; ++m) {
    mpz_class s = 0;
    for (int k = 1; k <= m; ++k) {
      mpz_class inner = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) inner += d * r[static_cast<std::size_t>(d)];
      }
      s += inner * r[static_cast<std::size_t>(m - k + 1)];
    }
    r[static_cast<std::size_t>(m) + 1] = s / m;
  }
  if (n <= 0) return 1;
  mpz_class pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
  if (n % 2 == 0) pairs -= r[static_cast<std::size_t>(n / 2)];
  return r[static_cast<std::size_t>(n)] - pairs / 2;
}

std::vector<std::uint64_t> floyd_distribution(int n, const std::vector<std::pair<int, int>>& edges) {
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::vector<std::uint64_t> counts;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d[i][j] >= kInf) return {};
      if (static_cast<std::size_t>(d[i][j]) > counts.size()) counts.resize(static_cast<std::size_t>(d[i][j]), 0);
      ++counts[static_cast<std::size_t>(d[i][j]) - 1];
    }
  }
  return counts;
}

std::set<std::vector<std::uint64_t>> connected_distributions(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::vector<std::uint64_t>> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) edges.push_back(slots[b]);
    }
    auto d = floyd_distribution(n, edges);
    if (!d.empty()) out.insert(std::move(d));
  }
  return out;
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  // Centres by repeated leaf removal.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] == 1) leaves.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int v : leaves) {
      for (int u : adj[v]) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    leaves = next;
  }
  std::function<std::string(int, int)> code = [&](int v, int p) {
    std::vector<std::string> parts;
    for (int u : adj[v]) {
      if (u != p) parts.push_back(code(u, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& x : parts) s += x;
    return s + ")";
  };
  std::string best;
  for (int c : leaves) {
    auto s = code(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::set<std::string> prufer_tree_codes(int n) {
  std::set<std::string> out;
  if (n <= 2) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    if (n == 2) adj = {{1}, {0}};
    out.insert(tree_code(adj));
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int v : seq) ++deg[v];
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      adj[leaf].push_back(v);
      adj[v].push_back(leaf);
      --deg[leaf];
      --deg[v];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          adj[a].push_back(v);
          adj[v].push_back(a);
        }
      }
    }
    out.insert(tree_code(adj));

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

std::vector<std::vector<int>> adjacency(const wiener::Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace oracle
