#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qhb/errors.hpp"

namespace qhb {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

// A (possibly trivial) walk in a quiver, stored in traversal order: the
// first-traversed arrow comes first.  The algebraic product p*q traverses
// q first and p second, matching right-to-left composition of maps.
class Path {
 public:
  Path() = default;
  explicit Path(int vertex) : source_(vertex), target_(vertex) {}
  Path(int source, int target, std::vector<int> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  int source() const { return source_; }
  int target() const { return target_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  bool trivial() const { return arrows_.empty(); }
  const std::vector<int>& arrows() const { return arrows_; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source_ == b.source_ && a.arrows_ == b.arrows_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

 private:
  int source_ = -1;
  int target_ = -1;
  std::vector<int> arrows_;
};

// Quiver with a reduced set of monomial relation generators.  Vertex labels
// are opaque strings; all order logic lives in VertexOrder.  Relation
// generators have length >= 2 and none is a factor of another.
class BoundQuiver {
 public:
  BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
              std::vector<Path> relation_generators);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::string& vertex_label(int v) const { return vertices_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Path>& relation_generators() const { return relations_; }

  // -1 when the label/name is not declared.
  int vertex_index(std::string_view label) const;
  int arrow_index(std::string_view name) const;

  Path trivial_path(int vertex) const;
  // Builds a path from arrow indices, validating composability.
  Path make_path(const std::vector<int>& arrow_seq) const;
  Path make_path_from_names(const std::vector<std::string>& names) const;

  // The vertices a path passes through: source, then the target of each
  // arrow in traversal order.
  std::vector<int> visited_vertices(const Path& p) const;
  // visited_vertices minus the two endpoints, as a multiset.
  std::vector<int> interior_vertices(const Path& p) const;

  // True iff some relation generator is a contiguous factor of p.
  bool contains_relation_factor(const Path& p) const;

  // Concatenation in traversal order: `first` then `second`.
  // Throws NotComposable unless target(first) == source(second).
  Path concat(const Path& first, const Path& second) const;

  // Canonical key: "e(<vertex label>)" for trivial paths, otherwise the
  // arrow names joined by ".".
  std::string path_key(const Path& p) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Path> relations_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;

  void validate_and_reduce();
};

// Deterministic basis ordering: by length, then source declaration index,
// then lexicographic arrow-name sequence.
bool path_before(const BoundQuiver& q, const Path& a, const Path& b);

}  // namespace qhb
