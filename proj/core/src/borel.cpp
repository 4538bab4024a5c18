#include "qhb/borel.hpp"

#include <algorithm>
#include <set>

namespace qhb {

namespace {

// Occurrence positions of the rank-maximum vertex along the visited sequence.
std::vector<int> max_positions(const MonomialAlgebra& alg, int idx, const VertexOrder& ord) {
  const std::vector<int>& vis = alg.visited_of(idx);
  int best = vis[0];
  for (int v : vis) {
    if (ord.less(best, v)) best = v;
  }
  std::vector<int> pos;
  for (std::size_t k = 0; k < vis.size(); ++k) {
    if (vis[k] == best) pos.push_back(static_cast<int>(k));
  }
  return pos;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool PathSubalgebra::contains(int idx) const {
  return std::binary_search(basis.begin(), basis.end(), idx);
}

const std::vector<int>& DpPathFamilies::at(int i, int j) const {
  static const std::vector<int> empty;
  auto it = by_pair.find({i, j});
  return it == by_pair.end() ? empty : it->second;
}

bool is_direction_preserving(const MonomialAlgebra& alg, int path_idx, const VertexOrder& ord) {
  return ord.less(alg.source_of(path_idx), alg.target_of(path_idx));
}

DpPathFamilies right_minimal_dp_paths(const MonomialAlgebra& alg, const VertexOrder& ord) {
  DpPathFamilies fam;
  fam.by_source.assign(alg.vertex_count(), {});
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (!is_direction_preserving(alg, idx, ord)) continue;
    const int src = alg.source_of(idx);
    const std::vector<int>& vis = alg.visited_of(idx);
    bool minimal = true;
    for (std::size_t k = 1; k + 1 < vis.size(); ++k) {
      if (ord.less(src, vis[k])) {  // interior vertex above the source
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    fam.by_pair[{src, alg.target_of(idx)}].push_back(idx);
    fam.by_source[src].push_back(idx);
  }
  return fam;
}

std::vector<int> close_under_products(const MonomialAlgebra& alg,
                                      const std::vector<int>& generators) {
  std::vector<int> seed;
  for (int v = 0; v < alg.vertex_count(); ++v) seed.push_back(alg.trivial_index(v));
  seed.insert(seed.end(), generators.begin(), generators.end());

  std::vector<char> in(alg.dimension(), 0);
  std::vector<int> members;
  std::vector<int> queue;
  auto push = [&](int idx) {
    if (!in[idx]) {
      in[idx] = 1;
      members.push_back(idx);
      queue.push_back(idx);
    }
  };
  for (int idx : sorted_unique(std::move(seed))) push(idx);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    // products x*m and m*x against everything currently in the set
    for (std::size_t k = 0; k < members.size(); ++k) {
      int m = members[k];
      if (alg.target_of(m) == alg.source_of(x)) {
        if (auto z = alg.product(x, m)) push(*z);
      }
      if (alg.target_of(x) == alg.source_of(m)) {
        if (auto z = alg.product(m, x)) push(*z);
      }
    }
  }
  return sorted_unique(std::move(members));
}

PathSubalgebra borel_max_basis(const MonomialAlgebra& alg, const VertexOrder& ord) {
  std::vector<int> gens;
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (is_direction_preserving(alg, idx, ord)) gens.push_back(idx);
  }
  return PathSubalgebra{&alg, SubalgebraTag::Bmax, close_under_products(alg, gens)};
}

PathSubalgebra borel_min_basis(const MonomialAlgebra& alg, const VertexOrder& ord) {
  // Products of right-minimal direction-preserving paths are exactly the
  // direction-preserving paths with every interior vertex strictly below the
  // target.
  std::vector<int> basis;
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (alg.length_of(idx) == 0) {
      basis.push_back(idx);
      continue;
    }
    if (!is_direction_preserving(alg, idx, ord)) continue;
    const int tgt = alg.target_of(idx);
    const std::vector<int>& vis = alg.visited_of(idx);
    bool ok = true;
    for (std::size_t k = 1; k + 1 < vis.size(); ++k) {
      if (!ord.less(vis[k], tgt)) {
        ok = false;
        break;
      }
    }
    if (ok) basis.push_back(idx);
  }
  return PathSubalgebra{&alg, SubalgebraTag::Bmin, std::move(basis)};
}

PathSubalgebra delta_sub_basis(const MonomialAlgebra& alg, const VertexOrder& ord) {
  std::vector<int> basis;
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (alg.length_of(idx) == 0) {
      basis.push_back(idx);
      continue;
    }
    const int src = alg.source_of(idx);
    if (!ord.less(alg.target_of(idx), src)) continue;
    const std::vector<int>& vis = alg.visited_of(idx);
    bool ok = true;
    for (std::size_t k = 1; k + 1 < vis.size(); ++k) {
      if (!ord.less(vis[k], src)) {
        ok = false;
        break;
      }
    }
    if (ok) basis.push_back(idx);
  }
  return PathSubalgebra{&alg, SubalgebraTag::CminOp, std::move(basis)};
}

ReedyOutcome reedy_factorize(const MonomialAlgebra& alg, const VertexOrder& ord) {
  ReedyOutcome out;
  PathSubalgebra bmin = borel_min_basis(alg, ord);
  PathSubalgebra cmin = delta_sub_basis(alg, ord);

  ReedyFactorization fact;
  fact.pairs.assign(alg.dimension(), {-1, -1});
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    std::vector<int> pos = max_positions(alg, idx, ord);
    if (pos.size() > 1) {
      out.failure = ReedyFailure{ReedyFailure::Kind::MaxVisitedTwice, alg.key_of(idx), {}};
      return out;
    }
    const Path& p = alg.basis_path(idx);
    const int cut = pos[0];
    std::vector<int> prefix(p.arrows().begin(), p.arrows().begin() + cut);
    std::vector<int> suffix(p.arrows().begin() + cut, p.arrows().end());
    Path b = prefix.empty() ? alg.quiver().trivial_path(p.source())
                            : alg.quiver().make_path(prefix);
    Path c = suffix.empty() ? alg.quiver().trivial_path(p.target())
                            : alg.quiver().make_path(suffix);
    fact.pairs[idx] = {alg.index_of(c), alg.index_of(b)};
  }

  // The pair map (c, b) -> c*b over all composable C x B pairs must be a
  // bijection onto the basis.
  std::vector<char> hit(alg.dimension(), 0);
  for (int c : cmin.basis) {
    for (int b : bmin.basis) {
      if (alg.target_of(b) != alg.source_of(c)) continue;
      std::optional<int> z = alg.product(c, b);
      if (!z) {
        Path word = alg.product_word(c, b);
        out.failure = ReedyFailure{ReedyFailure::Kind::ZeroProduct,
                                   alg.quiver().path_key(word), std::make_pair(c, b)};
        return out;
      }
      if (hit[*z]) {
        out.failure = ReedyFailure{ReedyFailure::Kind::Collision, alg.key_of(*z),
                                   std::make_pair(c, b)};
        return out;
      }
      hit[*z] = 1;
    }
  }

  out.factorization = std::move(fact);
  return out;
}

std::vector<std::pair<int, int>> right_module_decomposition(const MonomialAlgebra& alg,
                                                            const VertexOrder& ord) {
  ReedyOutcome outcome = reedy_factorize(alg, ord);
  if (!outcome.ok()) {
    throw Error("right module decomposition needs a Reedy factorization; failed at " +
                outcome.failure->witness_key);
  }
  PathSubalgebra bmin = borel_min_basis(alg, ord);
  PathSubalgebra cmin = delta_sub_basis(alg, ord);
  std::vector<std::pair<int, int>> result;
  for (int q : cmin.basis) {
    int dim = 0;
    for (int b : bmin.basis) {
      if (alg.target_of(b) == alg.source_of(q)) ++dim;
    }
    result.emplace_back(q, dim);
  }
  return result;
}

std::optional<int> normal_splitting(const MonomialAlgebra& alg, const ReedyFactorization& reedy,
                                    int path_idx) {
  auto [c, b] = reedy.pairs.at(path_idx);
  if (alg.length_of(c) == 0) return path_idx;
  return std::nullopt;
}

TruncateReport truncate_check(const MonomialAlgebra& alg, const VertexOrder& ord,
                              int cutoff_rank) {
  TruncateReport report;
  report.cutoff_rank = cutoff_rank;
  std::vector<char> kept(alg.vertex_count(), 0);
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (ord.rank(v) >= cutoff_rank) {
      kept[v] = 1;
      report.kept_vertices.push_back(v);
    }
  }

  PathSubalgebra bmin = borel_min_basis(alg, ord);
  for (int idx : bmin.basis) {
    if (kept[alg.source_of(idx)] && kept[alg.target_of(idx)]) {
      report.truncated_bmin.push_back(idx);
    }
  }

  // Intrinsically right-minimal direction-preserving paths of eAe: endpoints
  // kept, and no kept interior vertex above the source.
  std::vector<int> generators;
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (alg.length_of(idx) == 0) continue;
    if (!kept[alg.source_of(idx)] || !kept[alg.target_of(idx)]) continue;
    if (!is_direction_preserving(alg, idx, ord)) continue;
    const int src = alg.source_of(idx);
    const std::vector<int>& vis = alg.visited_of(idx);
    bool minimal = true;
    for (std::size_t k = 1; k + 1 < vis.size(); ++k) {
      if (kept[vis[k]] && ord.less(src, vis[k])) {
        minimal = false;
        break;
      }
    }
    if (minimal) generators.push_back(idx);
  }

  // Close under products inside eAe; only the kept trivial paths belong.
  std::vector<char> in(alg.dimension(), 0);
  std::vector<int> members;
  std::vector<int> queue;
  auto push = [&](int idx) {
    if (!in[idx]) {
      in[idx] = 1;
      members.push_back(idx);
      queue.push_back(idx);
    }
  };
  for (int v : report.kept_vertices) push(alg.trivial_index(v));
  for (int g : generators) push(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t k = 0; k < members.size(); ++k) {
      int m = members[k];
      if (alg.target_of(m) == alg.source_of(x)) {
        if (auto z = alg.product(x, m)) push(*z);
      }
      if (alg.target_of(x) == alg.source_of(m)) {
        if (auto z = alg.product(m, x)) push(*z);
      }
    }
  }
  report.intrinsic_bmin = sorted_unique(std::move(members));

  report.equal = report.truncated_bmin == report.intrinsic_bmin;
  if (!report.equal) {
    std::vector<int> diff;
    std::set_symmetric_difference(report.truncated_bmin.begin(), report.truncated_bmin.end(),
                                  report.intrinsic_bmin.begin(), report.intrinsic_bmin.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) report.counterexample = diff.front();
  }
  return report;
}

QuotientResult quotient(const MonomialAlgebra& alg, const VertexOrder& ord,
                        const std::vector<Path>& gens) {
  const BoundQuiver& q = alg.quiver();
  for (const Path& g : gens) {
    if (alg.index_of(g) < 0) {
      throw Error("quotient generator " + q.path_key(g) + " is not a basis path");
    }
  }

  std::vector<char> vertex_deleted(q.vertex_count(), 0);
  std::vector<char> arrow_deleted(q.arrow_count(), 0);
  std::vector<Path> ideal_gens;
  for (const Path& g : gens) {
    if (g.length() == 0) {
      vertex_deleted[g.source()] = 1;
    } else if (g.length() == 1) {
      arrow_deleted[g.arrows()[0]] = 1;
    } else {
      ideal_gens.push_back(g);
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (vertex_deleted[q.arrow(a).source] || vertex_deleted[q.arrow(a).target]) {
      arrow_deleted[a] = 1;
    }
  }

  std::vector<std::string> new_vertices;
  std::vector<int> vertex_map(q.vertex_count(), -1);
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (!vertex_deleted[v]) {
      vertex_map[v] = static_cast<int>(new_vertices.size());
      new_vertices.push_back(q.vertex_label(v));
    }
  }
  std::vector<Arrow> new_arrows;
  std::vector<int> arrow_map(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (arrow_deleted[a]) continue;
    arrow_map[a] = static_cast<int>(new_arrows.size());
    new_arrows.push_back(
        {q.arrow(a).name, vertex_map[q.arrow(a).source], vertex_map[q.arrow(a).target]});
  }

  auto remap = [&](const Path& p) -> std::optional<Path> {
    std::vector<int> seq;
    seq.reserve(p.arrows().size());
    for (int a : p.arrows()) {
      if (arrow_map[a] < 0) return std::nullopt;
      seq.push_back(arrow_map[a]);
    }
    if (seq.empty()) {
      if (vertex_map[p.source()] < 0) return std::nullopt;
      return Path(vertex_map[p.source()]);
    }
    return Path(vertex_map[p.source()], vertex_map[p.target()], std::move(seq));
  };

  std::vector<Path> new_relations;
  for (const Path& r : q.relation_generators()) {
    if (auto mapped = remap(r)) new_relations.push_back(*mapped);
  }
  for (const Path& g : ideal_gens) {
    if (auto mapped = remap(g)) new_relations.push_back(*mapped);
  }

  BoundQuiver new_quiver(new_vertices, new_arrows, new_relations);
  MonomialAlgebra quotient_alg = MonomialAlgebra::enumerate(std::move(new_quiver));
  VertexOrder induced = ord.restrict(vertex_map, static_cast<int>(new_vertices.size()));

  bool transfer_ok = false;
  std::vector<int> bmin_quotient;
  std::vector<int> bmin_image;
  if (induced.total()) {
    bmin_quotient = borel_min_basis(quotient_alg, induced).basis;
    for (int idx : borel_min_basis(alg, ord).basis) {
      auto mapped = remap(alg.basis_path(idx));
      if (!mapped) continue;
      int mapped_idx = quotient_alg.index_of(*mapped);
      if (mapped_idx >= 0) bmin_image.push_back(mapped_idx);
    }
    bmin_image = sorted_unique(std::move(bmin_image));
    transfer_ok = bmin_image == bmin_quotient;
  }
  return QuotientResult{std::move(quotient_alg), std::move(induced),    std::move(vertex_map),
                        transfer_ok,             std::move(bmin_quotient),
                        std::move(bmin_image)};
}

}  // namespace qhb
