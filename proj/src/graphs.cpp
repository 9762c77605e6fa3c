#include "bkm/graphs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bkm {

SimpleGraph SimpleGraph::from_edges(int n,
                                    const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g;
  g.ids.resize(n);
  for (int i = 0; i < n; ++i) g.ids[i] = i;
  g.adj.assign(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    g.adj[u][v] = g.adj[v][u] = true;
  }
  return g;
}

int SimpleGraph::position_of(int id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int>(it - ids.begin());
}

SimpleGraph dynkin_graph(const BorcherdsCartanMatrix& A, const std::vector<int>& S) {
  SimpleGraph g;
  g.ids = S;
  std::sort(g.ids.begin(), g.ids.end());
  const int m = g.size();
  g.adj.assign(m, std::vector<bool>(m, false));
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (A.bilinear(g.ids[p], g.ids[q]) != 0) g.adj[p][q] = g.adj[q][p] = true;
  return g;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int m = g.size();
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(m, false);
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{s}, comp;
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(g.ids[v]);
      for (int w = 0; w < m; ++w)
        if (g.adj[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

bool is_connected(const SimpleGraph& g) {
  if (g.size() == 0) return false;
  return connected_components(g).size() == 1;
}

bool is_independent(const SimpleGraph& g, const std::vector<int>& S) {
  for (size_t p = 0; p < S.size(); ++p)
    for (size_t q = p + 1; q < S.size(); ++q) {
      int u = g.position_of(S[p]), v = g.position_of(S[q]);
      if (u < 0 || v < 0) throw std::out_of_range("vertex not in graph");
      if (g.adj[u][v]) return false;
    }
  return true;
}

namespace {

// Enumerates unordered partitions of the vertex set into independent blocks
// by assigning vertices in order, either to an existing compatible block or
// to a fresh one. Records a count per number of blocks.
void partition_backtrack(const SimpleGraph& g, int v,
                         std::vector<std::vector<int>>& blocks,
                         std::vector<long long>& counts) {
  const int m = g.size();
  if (v == m) {
    counts[blocks.size()] += 1;
    return;
  }
  // index loop: recursion appends to `blocks`, which may reallocate
  const size_t nblocks = blocks.size();
  for (size_t b = 0; b < nblocks; ++b) {
    bool ok = true;
    for (int u : blocks[b])
      if (g.adj[u][v]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    blocks[b].push_back(v);
    partition_backtrack(g, v + 1, blocks, counts);
    blocks[b].pop_back();
  }
  blocks.push_back({v});
  partition_backtrack(g, v + 1, blocks, counts);
  blocks.pop_back();
}

}  // namespace

std::vector<long long> k_partition_counts(const SimpleGraph& g) {
  const int m = g.size();
  std::vector<long long> counts(m + 1, 0);
  if (m > 0) {
    std::vector<std::vector<int>> blocks;
    partition_backtrack(g, 0, blocks, counts);
  }
  std::vector<long long> c(m);
  long long fact = 1;
  for (int k = 1; k <= m; ++k) {
    fact *= k;
    c[k - 1] = counts[k] * fact;
  }
  return c;
}

long long count_k_partitions(const SimpleGraph& g, int k) {
  if (k < 1 || k > g.size()) throw std::out_of_range("k out of range");
  return k_partition_counts(g)[k - 1];
}

long long c_of_graph(const SimpleGraph& g) {
  const int m = g.size();
  if (m == 0) return 0;
  auto ck = k_partition_counts(g);
  Rational acc = 0;
  for (int k = 1; k <= m; ++k) {
    Rational term(ck[k - 1], k);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  if (m % 2 != 0) acc = -acc;
  long long c = to_integer(acc);
  assert(c >= 0);
  return c;
}

}  // namespace bkm
