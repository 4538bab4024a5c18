#include "qhb/algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qhb {

namespace {

// Aho-Corasick machine over the arrow alphabet for the relation generators.
// A state is "dead" when some generator is a suffix of the word read so far.
struct ForbiddenFactorMachine {
  struct Node {
    std::map<int, int> next;  // arrow -> child
    int fail = 0;
    bool dead = false;
  };
  std::vector<Node> nodes;

  explicit ForbiddenFactorMachine(const std::vector<Path>& patterns) {
    nodes.emplace_back();
    for (const Path& p : patterns) {
      int cur = 0;
      for (int a : p.arrows()) {
        auto it = nodes[cur].next.find(a);
        if (it == nodes[cur].next.end()) {
          nodes.emplace_back();
          it = nodes[cur].next.emplace(a, static_cast<int>(nodes.size()) - 1).first;
        }
        cur = it->second;
      }
      nodes[cur].dead = true;
    }
    // BFS failure links; dead flags propagate along them.
    std::vector<int> queue;
    for (auto [a, child] : nodes[0].next) {
      nodes[child].fail = 0;
      queue.push_back(child);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (nodes[nodes[u].fail].dead) nodes[u].dead = true;
      for (auto [a, child] : nodes[u].next) {
        nodes[child].fail = step(nodes[u].fail, a);
        queue.push_back(child);
      }
    }
  }

  int step(int state, int arrow) const {
    while (true) {
      auto it = nodes[state].next.find(arrow);
      if (it != nodes[state].next.end()) return it->second;
      if (state == 0) return 0;
      state = nodes[state].fail;
    }
  }
};

}  // namespace

MonomialAlgebra MonomialAlgebra::enumerate(BoundQuiver quiver) {
  MonomialAlgebra alg(std::move(quiver));
  const BoundQuiver& q = alg.quiver_;
  const int n = q.vertex_count();

  ForbiddenFactorMachine machine(q.relation_generators());

  // Product automaton state: (current vertex, machine node).  Allowed words
  // are in bijection with walks from some (v, root); the basis is finite iff
  // the reachable allowed subgraph is acyclic.
  std::vector<std::vector<int>> out_arrows(n);
  for (int a = 0; a < q.arrow_count(); ++a) out_arrows[q.arrow(a).source].push_back(a);

  std::map<std::pair<int, int>, int> state_id;
  std::vector<std::pair<int, int>> states;
  struct Edge {
    int arrow;
    int to;
  };
  std::vector<std::vector<Edge>> edges;

  auto intern = [&](int v, int node) {
    auto [it, inserted] = state_id.try_emplace({v, node}, static_cast<int>(states.size()));
    if (inserted) {
      states.emplace_back(v, node);
      edges.emplace_back();
    }
    return it->second;
  };

  std::vector<int> starts(n);
  for (int v = 0; v < n; ++v) starts[v] = intern(v, 0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [v, node] = states[s];
    for (int a : out_arrows[v]) {
      int next_node = machine.step(node, a);
      if (machine.nodes[next_node].dead) continue;
      // intern may grow the edge table, so resolve the target first
      int to = intern(q.arrow(a).target, next_node);
      edges[s].push_back({a, to});
    }
  }

  // Cycle detection with an explicit stack; colors: 0 white, 1 gray, 2 black.
  std::vector<int> color(states.size(), 0);
  std::vector<int> via_arrow(states.size(), -1);
  std::vector<int> parent(states.size(), -1);
  for (int root : starts) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [s, next_edge] = stack.back();
      if (next_edge == edges[s].size()) {
        color[s] = 2;
        stack.pop_back();
        continue;
      }
      const Edge e = edges[s][next_edge++];
      if (color[e.to] == 0) {
        color[e.to] = 1;
        parent[e.to] = s;
        via_arrow[e.to] = e.arrow;
        stack.emplace_back(e.to, 0);
      } else if (color[e.to] == 1) {
        // Reconstruct the cycle e.to -> ... -> s -> e.to as a witness word.
        std::vector<int> rev{e.arrow};
        for (int cur = s; cur != e.to; cur = parent[cur]) rev.push_back(via_arrow[cur]);
        std::reverse(rev.begin(), rev.end());
        Path witness = q.make_path(rev);
        throw InfiniteDimensional(
            "algebra is infinite-dimensional: ideal-avoiding cycle " + q.path_key(witness),
            q.path_key(witness));
      }
    }
  }

  // Acyclic: enumerate every allowed word by walking the word tree.
  alg.basis_.clear();
  for (int v = 0; v < n; ++v) alg.basis_.push_back(q.trivial_path(v));
  std::vector<int> word;
  auto grow = [&](auto&& self, int s, int source) -> void {
    for (const Edge& e : edges[s]) {
      word.push_back(e.arrow);
      alg.basis_.push_back(Path(source, q.arrow(e.arrow).target, word));
      if (static_cast<int>(alg.basis_.size()) > kMaxBasisSize) {
        throw Error("basis enumeration exceeded the size cap");
      }
      self(self, e.to, source);
      word.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) grow(grow, starts[v], v);

  std::sort(alg.basis_.begin(), alg.basis_.end(),
            [&q](const Path& a, const Path& b) { return path_before(q, a, b); });
  alg.index_basis();
  return alg;
}

void MonomialAlgebra::index_basis() {
  const int n = quiver_.vertex_count();
  trivial_index_.assign(n, -1);
  by_source_.assign(n, {});
  by_target_.assign(n, {});
  visited_.clear();
  visited_.reserve(basis_.size());
  for (int idx = 0; idx < dimension(); ++idx) {
    const Path& p = basis_[idx];
    index_.emplace(quiver_.path_key(p), idx);
    if (p.trivial()) trivial_index_[p.source()] = idx;
    by_source_[p.source()].push_back(idx);
    by_target_[p.target()].push_back(idx);
    visited_.push_back(quiver_.visited_vertices(p));
  }
}

int MonomialAlgebra::index_of(const Path& p) const {
  auto it = index_.find(quiver_.path_key(p));
  if (it == index_.end()) return -1;
  return basis_[it->second] == p ? it->second : -1;
}

int MonomialAlgebra::index_of_key(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

Path MonomialAlgebra::product_word(int a_idx, int b_idx) const {
  return quiver_.concat(basis_.at(b_idx), basis_.at(a_idx));
}

std::optional<int> MonomialAlgebra::product(int a_idx, int b_idx) const {
  const Path& a = basis_.at(a_idx);
  const Path& b = basis_.at(b_idx);
  if (b.target() != a.source()) {
    throw NotComposable("product " + quiver_.path_key(a) + " * " + quiver_.path_key(b) +
                        ": t(right) != s(left)");
  }
  Path word = quiver_.concat(b, a);
  if (quiver_.contains_relation_factor(word)) return std::nullopt;
  int idx = index_of(word);
  if (idx < 0) throw Error("internal: ideal-avoiding product missing from basis");
  return idx;
}

int MonomialAlgebra::max_vertex_of(const Path& p, const VertexOrder& ord) const {
  std::vector<int> vis = quiver_.visited_vertices(p);
  if (!ord.total()) {
    for (std::size_t x = 0; x < vis.size(); ++x) {
      for (std::size_t y = x + 1; y < vis.size(); ++y) {
        if (!ord.comparable(vis[x], vis[y])) {
          throw IncomparableVertices("path " + quiver_.path_key(p) +
                                     " visits incomparable vertices " +
                                     quiver_.vertex_label(vis[x]) + ", " +
                                     quiver_.vertex_label(vis[y]));
        }
      }
    }
  }
  int best = vis[0];
  for (int v : vis) {
    if (ord.less(best, v)) best = v;
  }
  return best;
}

int MonomialAlgebra::max_vertex(int idx, const VertexOrder& ord) const {
  return max_vertex_of(basis_.at(idx), ord);
}

bool ideal_contains(const MonomialAlgebra& alg, const Path& p) {
  return alg.quiver().contains_relation_factor(p);
}

}  // namespace qhb
