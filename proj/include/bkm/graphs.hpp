#pragma once

#include <vector>

#include "bkm/cartan.hpp"

namespace bkm {

// Simple undirected graph whose vertices carry external ids (sorted).
// Adjacency is stored positionally against the id list.
struct SimpleGraph {
  std::vector<int> ids;
  std::vector<std::vector<bool>> adj;

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(ids.size()); }
  int position_of(int id) const;  // -1 if absent
};

// Subgraph of the Dynkin diagram spanned by S: edge iff (alpha_i, alpha_j) != 0.
SimpleGraph dynkin_graph(const BorcherdsCartanMatrix& A, const std::vector<int>& S);

// Maximal connected vertex sets, in id space; each sorted, list sorted by
// smallest element.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);  // empty graph counts as not connected

// No edge inside S (ids).
bool is_independent(const SimpleGraph& g, const std::vector<int>& S);

// Number of ordered k-tuples of nonempty disjoint independent sets covering V.
long long count_k_partitions(const SimpleGraph& g, int k);

// (c_1, ..., c_n)
std::vector<long long> k_partition_counts(const SimpleGraph& g);

// c(G) = (-1)^n sum_k (-1)^k c_k / k; integral and >= 0, positive iff
// connected. Empty graph yields 0.
long long c_of_graph(const SimpleGraph& g);

}  // namespace bkm
