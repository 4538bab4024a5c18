#pragma once

#include <utility>
#include <vector>

#include "qhb/errors.hpp"

namespace qhb {

// Strict partial or total order on the vertex set {0, ..., n-1}.  Total
// orders carry a rank map (higher rank = larger vertex); partial orders a
// transitively closed strict relation.
class VertexOrder {
 public:
  static VertexOrder total_from_ranks(std::vector<int> ranks);
  // chain[0] < chain[1] < ... < chain[n-1]; ranks are 1..n.
  static VertexOrder total_from_chain(const std::vector<int>& chain);
  // Transitive closure of the given strict pairs; throws CyclicOrder.
  // Promotes itself to a total order when every pair is comparable.
  static VertexOrder partial_from_pairs(int n, const std::vector<std::pair<int, int>>& less_pairs);
  static VertexOrder empty(int n) { return partial_from_pairs(n, {}); }

  bool total() const { return total_; }
  int size() const { return n_; }
  int rank(int v) const;
  bool less(int u, int v) const;
  bool comparable(int u, int v) const { return u == v || less(u, v) || less(v, u); }
  const std::vector<int>& ranks() const;

  // All strict pairs (u, v) with u < v.
  std::vector<std::pair<int, int>> strict_pairs() const;
  // Transitive reduction (the covering pairs), sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;
  // Vertices sorted by ascending rank; requires a total order.
  std::vector<int> chain() const;

  // Restriction to a subset of vertices, relabelled by `new_index`
  // (new_index[v] == -1 drops v).  Keeps totality.
  VertexOrder restrict(const std::vector<int>& new_index, int new_n) const;

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) {
    return a.n_ == b.n_ && a.less_ == b.less_;
  }

 private:
  VertexOrder() = default;
  int n_ = 0;
  bool total_ = false;
  std::vector<int> ranks_;           // total orders only
  std::vector<std::vector<bool>> less_;  // closed strict relation

  void close_and_check();
};

}  // namespace qhb
