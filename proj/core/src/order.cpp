#include "qhb/order.hpp"

#include <algorithm>
#include <set>

namespace qhb {

VertexOrder VertexOrder::total_from_ranks(std::vector<int> ranks) {
  VertexOrder ord;
  ord.n_ = static_cast<int>(ranks.size());
  ord.total_ = true;
  ord.ranks_ = std::move(ranks);
  std::set<int> seen(ord.ranks_.begin(), ord.ranks_.end());
  if (static_cast<int>(seen.size()) != ord.n_) {
    throw CyclicOrder("total order must rank every vertex exactly once");
  }
  ord.less_.assign(ord.n_, std::vector<bool>(ord.n_, false));
  for (int u = 0; u < ord.n_; ++u) {
    for (int v = 0; v < ord.n_; ++v) {
      if (u != v && ord.ranks_[u] < ord.ranks_[v]) ord.less_[u][v] = true;
    }
  }
  return ord;
}

VertexOrder VertexOrder::total_from_chain(const std::vector<int>& chain) {
  std::vector<int> ranks(chain.size(), -1);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    int v = chain[k];
    if (v < 0 || v >= static_cast<int>(chain.size()) || ranks[v] != -1) {
      throw CyclicOrder("chain must list every vertex exactly once");
    }
    ranks[v] = static_cast<int>(k) + 1;
  }
  return total_from_ranks(std::move(ranks));
}

VertexOrder VertexOrder::partial_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  VertexOrder ord;
  ord.n_ = n;
  ord.less_.assign(n, std::vector<bool>(n, false));
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw CyclicOrder("order pair out of range");
    if (u == v) throw CyclicOrder("vertex compared with itself");
    ord.less_[u][v] = true;
  }
  ord.close_and_check();
  return ord;
}

void VertexOrder::close_and_check() {
  // Floyd-Warshall closure.
  for (int w = 0; w < n_; ++w) {
    for (int u = 0; u < n_; ++u) {
      if (!less_[u][w]) continue;
      for (int v = 0; v < n_; ++v) {
        if (less_[w][v]) less_[u][v] = true;
      }
    }
  }
  for (int u = 0; u < n_; ++u) {
    if (less_[u][u]) throw CyclicOrder("order relation contains a cycle");
    for (int v = 0; v < n_; ++v) {
      if (u != v && less_[u][v] && less_[v][u]) {
        throw CyclicOrder("order relation is not antisymmetric");
      }
    }
  }
  // A closed antisymmetric relation in which all pairs are comparable is a
  // total order; derive ranks from it.
  bool all_comparable = true;
  for (int u = 0; u < n_ && all_comparable; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!less_[u][v] && !less_[v][u]) {
        all_comparable = false;
        break;
      }
    }
  }
  if (all_comparable && n_ > 0) {
    total_ = true;
    ranks_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
      int below = 0;
      for (int v = 0; v < n_; ++v) {
        if (less_[v][u]) ++below;
      }
      ranks_[u] = below + 1;
    }
  }
}

int VertexOrder::rank(int v) const {
  if (!total_) throw IncomparableVertices("rank is only defined for total orders");
  return ranks_.at(v);
}

const std::vector<int>& VertexOrder::ranks() const {
  if (!total_) throw IncomparableVertices("ranks are only defined for total orders");
  return ranks_;
}

bool VertexOrder::less(int u, int v) const { return less_.at(u).at(v); }

std::vector<std::pair<int, int>> VertexOrder::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (less_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> VertexOrder::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (!less_[u][v]) continue;
      bool covered = false;
      for (int w = 0; w < n_ && !covered; ++w) {
        if (less_[u][w] && less_[w][v]) covered = true;
      }
      if (!covered) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> VertexOrder::chain() const {
  if (!total_) throw IncomparableVertices("chain is only defined for total orders");
  std::vector<int> vs(n_);
  for (int v = 0; v < n_; ++v) vs[v] = v;
  std::sort(vs.begin(), vs.end(), [this](int a, int b) { return ranks_[a] < ranks_[b]; });
  return vs;
}

VertexOrder VertexOrder::restrict(const std::vector<int>& new_index, int new_n) const {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n_; ++u) {
    if (new_index[u] < 0) continue;
    for (int v = 0; v < n_; ++v) {
      if (new_index[v] < 0) continue;
      if (less_[u][v]) pairs.emplace_back(new_index[u], new_index[v]);
    }
  }
  return partial_from_pairs(new_n, pairs);
}

}  // namespace qhb
