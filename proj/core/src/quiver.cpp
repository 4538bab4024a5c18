#include "qhb/quiver.hpp"

#include <algorithm>
#include <set>

namespace qhb {

namespace {

bool is_factor(const std::vector<int>& needle, const std::vector<int>& hay) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t off = 0; off + needle.size() <= hay.size(); ++off) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + off)) return true;
  }
  return false;
}

}  // namespace

BoundQuiver::BoundQuiver(std::vector<std::string> vertices,
                         std::vector<Arrow> arrows,
                         std::vector<Path> relation_generators)
    : vertices_(std::move(vertices)),
      arrows_(std::move(arrows)),
      relations_(std::move(relation_generators)) {
  validate_and_reduce();
}

void BoundQuiver::validate_and_reduce() {
  if (vertices_.empty()) throw MalformedQuiver("quiver needs at least one vertex");
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].empty()) throw MalformedQuiver("empty vertex label");
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw MalformedQuiver("duplicate vertex label: " + vertices_[v]);
    }
  }
  for (int a = 0; a < arrow_count(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.name.empty()) throw MalformedQuiver("empty arrow name");
    if (!arrow_index_.emplace(ar.name, a).second) {
      throw MalformedQuiver("duplicate arrow name: " + ar.name);
    }
    if (ar.source < 0 || ar.source >= vertex_count() || ar.target < 0 ||
        ar.target >= vertex_count()) {
      throw MalformedQuiver("arrow " + ar.name + " has undeclared endpoint");
    }
  }
  for (const Path& r : relations_) {
    if (r.length() < 2) {
      throw MalformedQuiver("relation generator " + path_key(r) +
                            " has length < 2 (ideal must be admissible)");
    }
    Path rebuilt = make_path(r.arrows());
    if (rebuilt.source() != r.source() || rebuilt.target() != r.target()) {
      throw MalformedQuiver("relation generator has inconsistent endpoints");
    }
  }

  // Keep a reduced generating set: drop any generator that contains another
  // one as a contiguous factor, and deduplicate.
  std::sort(relations_.begin(), relations_.end(),
            [this](const Path& a, const Path& b) { return path_before(*this, a, b); });
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
  std::vector<Path> reduced;
  for (const Path& r : relations_) {
    bool redundant = false;
    for (const Path& kept : reduced) {
      if (is_factor(kept.arrows(), r.arrows())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(r);
  }
  relations_ = std::move(reduced);
}

int BoundQuiver::vertex_index(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  return it == vertex_index_.end() ? -1 : it->second;
}

int BoundQuiver::arrow_index(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  return it == arrow_index_.end() ? -1 : it->second;
}

Path BoundQuiver::trivial_path(int vertex) const {
  if (vertex < 0 || vertex >= vertex_count()) throw MalformedQuiver("no such vertex");
  return Path(vertex);
}

Path BoundQuiver::make_path(const std::vector<int>& arrow_seq) const {
  if (arrow_seq.empty()) throw MalformedQuiver("make_path needs at least one arrow");
  for (std::size_t k = 0; k + 1 < arrow_seq.size(); ++k) {
    if (arrow(arrow_seq[k]).target != arrow(arrow_seq[k + 1]).source) {
      throw NotComposable("arrows " + arrow(arrow_seq[k]).name + " and " +
                          arrow(arrow_seq[k + 1]).name + " do not compose");
    }
  }
  return Path(arrow(arrow_seq.front()).source, arrow(arrow_seq.back()).target, arrow_seq);
}

Path BoundQuiver::make_path_from_names(const std::vector<std::string>& names) const {
  std::vector<int> seq;
  seq.reserve(names.size());
  for (const std::string& n : names) {
    int a = arrow_index(n);
    if (a < 0) throw UnknownArrow("unknown arrow: " + n);
    seq.push_back(a);
  }
  return make_path(seq);
}

std::vector<int> BoundQuiver::visited_vertices(const Path& p) const {
  std::vector<int> out;
  out.reserve(p.length() + 1);
  out.push_back(p.source());
  for (int a : p.arrows()) out.push_back(arrow(a).target);
  return out;
}

std::vector<int> BoundQuiver::interior_vertices(const Path& p) const {
  std::vector<int> vis = visited_vertices(p);
  if (vis.size() <= 2) return {};
  return std::vector<int>(vis.begin() + 1, vis.end() - 1);
}

bool BoundQuiver::contains_relation_factor(const Path& p) const {
  for (const Path& r : relations_) {
    if (is_factor(r.arrows(), p.arrows())) return true;
  }
  return false;
}

Path BoundQuiver::concat(const Path& first, const Path& second) const {
  if (first.target() != second.source()) {
    throw NotComposable("paths " + path_key(first) + " and " + path_key(second) +
                        " do not concatenate");
  }
  std::vector<int> seq = first.arrows();
  seq.insert(seq.end(), second.arrows().begin(), second.arrows().end());
  return Path(first.source(), second.target(), std::move(seq));
}

std::string BoundQuiver::path_key(const Path& p) const {
  if (p.trivial()) return "e(" + vertex_label(p.source()) + ")";
  std::string key;
  for (std::size_t k = 0; k < p.arrows().size(); ++k) {
    if (k) key += '.';
    key += arrow(p.arrows()[k]).name;
  }
  return key;
}

bool path_before(const BoundQuiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source() != b.source()) return a.source() < b.source();
  for (int k = 0; k < a.length(); ++k) {
    const std::string& an = q.arrow(a.arrows()[k]).name;
    const std::string& bn = q.arrow(b.arrows()[k]).name;
    if (an != bn) return an < bn;
  }
  return false;
}

}  // namespace qhb
