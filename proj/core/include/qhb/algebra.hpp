#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhb/order.hpp"
#include "qhb/quiver.hpp"

namespace qhb {

// Basic monomial algebra A = kQ/I with its canonical finite path basis.
// Immutable after construction and safe to share across threads.
class MonomialAlgebra {
 public:
  // Enumerates all ideal-avoiding paths via the product of the quiver with
  // the Aho-Corasick machine of the relation generators.  Throws
  // InfiniteDimensional (with a witness cycle) when the reachable allowed-word
  // automaton has a cycle.
  static MonomialAlgebra enumerate(BoundQuiver quiver);

  const BoundQuiver& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count(); }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int idx) const { return basis_.at(idx); }

  // -1 when p is not an ideal-avoiding path of the quiver.
  int index_of(const Path& p) const;
  int index_of_key(const std::string& key) const;

  int source_of(int idx) const { return basis_[idx].source(); }
  int target_of(int idx) const { return basis_[idx].target(); }
  int length_of(int idx) const { return basis_[idx].length(); }
  const std::vector<int>& visited_of(int idx) const { return visited_[idx]; }
  std::string key_of(int idx) const { return quiver_.path_key(basis_[idx]); }

  int trivial_index(int vertex) const { return trivial_index_.at(vertex); }
  const std::vector<int>& paths_from(int vertex) const { return by_source_.at(vertex); }
  const std::vector<int>& paths_into(int vertex) const { return by_target_.at(vertex); }

  bool ideal_contains(const Path& p) const { return quiver_.contains_relation_factor(p); }

  // Algebraic product a*b (b traversed first, then a).  Empty optional means
  // the product is zero in A; throws NotComposable when t(b) != s(a).
  std::optional<int> product(int a_idx, int b_idx) const;
  // The underlying word of a*b in traversal order, without the ideal test.
  Path product_word(int a_idx, int b_idx) const;

  // Order-maximum of the vertices visited by basis path idx.  For partial
  // orders all visited vertices must be pairwise comparable.
  int max_vertex(int idx, const VertexOrder& ord) const;
  int max_vertex_of(const Path& p, const VertexOrder& ord) const;

 private:
  explicit MonomialAlgebra(BoundQuiver q) : quiver_(std::move(q)) {}

  BoundQuiver quiver_;
  std::vector<Path> basis_;
  std::vector<std::vector<int>> visited_;
  std::vector<int> trivial_index_;
  std::vector<std::vector<int>> by_source_;
  std::vector<std::vector<int>> by_target_;
  std::unordered_map<std::string, int> index_;

  void index_basis();
};

// Factor-containment test for the monomial ideal; p need not be a basis path.
bool ideal_contains(const MonomialAlgebra& alg, const Path& p);

// Safety valve for degenerate inputs: enumeration aborts beyond this many
// basis paths even when the algebra is finite-dimensional.
inline constexpr int kMaxBasisSize = 8'000'000;

}  // namespace qhb
