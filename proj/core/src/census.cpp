#include "qhb/census.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "qhb/borel.hpp"
#include "qhb/homalg.hpp"
#include "qhb/regularity.hpp"
#include "qhb/report.hpp"

namespace qhb {

long long catalan(int n) {
  if (n < 0) throw Error("catalan: negative index");
  // the intermediate product c * 2 * (2k - 1) stays below 2^63 up to k = 33
  if (n > 33) throw Error("catalan: index too large for exact 64-bit arithmetic");
  long long c = 1;
  for (int k = 1; k <= n; ++k) {
    c = c * 2 * (2 * k - 1) / (k + 1);
  }
  return c;
}

BoundQuiver family_quiver(const FamilySpec& f) {
  if (f.na < 0 || f.nb < 0 || f.nc < 0) throw Error("family spec needs n_a, n_b, n_c >= 0");
  std::vector<std::string> vertices;
  for (int k = f.na; k >= 0; --k) vertices.push_back("a" + std::to_string(k));
  for (int k = 1; k <= f.nb; ++k) vertices.push_back("b" + std::to_string(k));
  for (int k = 1; k <= f.nc; ++k) vertices.push_back("c" + std::to_string(k));

  auto index = [&](const std::string& label) {
    return static_cast<int>(std::find(vertices.begin(), vertices.end(), label) -
                            vertices.begin());
  };
  std::vector<Arrow> arrows;
  auto add_arrow = [&](const std::string& from, const std::string& to) {
    if (f.opposite) {
      arrows.push_back({to + "_" + from, index(to), index(from)});
    } else {
      arrows.push_back({from + "_" + to, index(from), index(to)});
    }
  };
  for (int k = f.na; k >= 1; --k) {
    add_arrow("a" + std::to_string(k), "a" + std::to_string(k - 1));
  }
  if (f.nb >= 1) add_arrow("a0", "b1");
  for (int k = 1; k < f.nb; ++k) add_arrow("b" + std::to_string(k), "b" + std::to_string(k + 1));
  if (f.nc >= 1) add_arrow("a0", "c1");
  for (int k = 1; k < f.nc; ++k) add_arrow("c" + std::to_string(k), "c" + std::to_string(k + 1));

  return BoundQuiver(std::move(vertices), std::move(arrows), {});
}

bool adaptedness_check(const MonomialAlgebra& alg, const VertexOrder& ord) {
  if (!alg.quiver().relation_generators().empty()) {
    throw HasRelations("adaptedness check applies to relation-free quivers");
  }
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    if (alg.length_of(idx) == 0) continue;
    const int i = alg.source_of(idx);
    const int j = alg.target_of(idx);
    if (ord.comparable(i, j)) continue;
    const std::vector<int>& vis = alg.visited_of(idx);
    bool detour = false;
    for (std::size_t k = 1; k + 1 < vis.size(); ++k) {
      if (ord.less(i, vis[k]) && ord.less(j, vis[k])) {
        detour = true;
        break;
      }
    }
    if (!detour) return false;
  }
  return true;
}

Fingerprint order_fingerprint(const MonomialAlgebra& alg, const VertexOrder& ord) {
  Fingerprint fp;
  fp.delta.resize(alg.vertex_count());
  fp.nabla.resize(alg.vertex_count());
  const std::vector<int>& rank = ord.ranks();
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    const std::vector<int>& vis = alg.visited_of(idx);
    const int src = alg.source_of(idx);
    const int tgt = alg.target_of(idx);
    int max_after_source = 0;
    for (std::size_t k = 1; k < vis.size(); ++k) {
      max_after_source = std::max(max_after_source, rank[vis[k]]);
    }
    if (max_after_source <= rank[src]) fp.delta[src].push_back(idx);
    if (std::max(max_after_source, rank[src]) == rank[tgt]) fp.nabla[tgt].push_back(idx);
  }
  return fp;
}

std::string Fingerprint::canonical_text(const MonomialAlgebra& alg) const {
  std::string text;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    text += alg.quiver().vertex_label(v);
    text += ":D{";
    std::vector<std::string> keys;
    for (int idx : delta[v]) keys.push_back(alg.key_of(idx));
    std::sort(keys.begin(), keys.end());
    for (const std::string& k : keys) {
      text += k;
      text += ',';
    }
    text += "};N{";
    keys.clear();
    for (int idx : nabla[v]) keys.push_back(alg.key_of(idx));
    std::sort(keys.begin(), keys.end());
    for (const std::string& k : keys) {
      text += k;
      text += ',';
    }
    text += "}\n";
  }
  return text;
}

std::string Fingerprint::digest(const MonomialAlgebra& alg) const {
  return sha256_hex(canonical_text(alg));
}

// ---------------------------------------------------------------------------
// Census enumeration

namespace {

// factorial-number-system unranking of the k-th permutation of 0..n-1
std::vector<int> unrank_permutation(int n, long long index) {
  std::vector<long long> fact(n, 1);
  for (int k = 1; k < n; ++k) fact[k] = fact[k - 1] * k;
  std::vector<int> pool(n);
  for (int v = 0; v < n; ++v) pool[v] = v;
  std::vector<int> out;
  for (int k = n - 1; k >= 0; --k) {
    long long digit = index / fact[k];
    index %= fact[k];
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + digit);
  }
  return out;
}

struct ClassAccum {
  long long count = 0;
  std::vector<int> min_ranks;
  std::vector<uint64_t> intersection;  // n*n bits of the strict relation
};

using ClassMap = std::map<std::vector<uint64_t>, ClassAccum>;

struct ScanContext {
  const MonomialAlgebra* alg;
  int n;
  int blocks;  // 64-bit words per path set
};

// One total order: fingerprint masks and the strict-relation bits.
void scan_order(const ScanContext& ctx, const std::vector<int>& chain, ClassMap& classes) {
  const MonomialAlgebra& alg = *ctx.alg;
  const int n = ctx.n;
  thread_local std::vector<int> rank;
  rank.assign(n, 0);
  for (int k = 0; k < n; ++k) rank[chain[k]] = k + 1;

  std::vector<uint64_t> key(2 * n * ctx.blocks, 0);
  for (int idx = 0; idx < alg.dimension(); ++idx) {
    const std::vector<int>& vis = alg.visited_of(idx);
    const int src = alg.source_of(idx);
    const int tgt = alg.target_of(idx);
    int max_after_source = 0;
    for (std::size_t k = 1; k < vis.size(); ++k) {
      max_after_source = std::max(max_after_source, rank[vis[k]]);
    }
    const int word = idx / 64;
    const uint64_t bit = uint64_t(1) << (idx % 64);
    if (max_after_source <= rank[src]) {
      key[(2 * src) * ctx.blocks + word] |= bit;
    }
    if (std::max(max_after_source, rank[src]) == rank[tgt]) {
      key[(2 * tgt + 1) * ctx.blocks + word] |= bit;
    }
  }

  ClassAccum& acc = classes[key];
  if (acc.count == 0) {
    acc.min_ranks = rank;
    acc.intersection.assign((n * n + 63) / 64, ~uint64_t(0));
  } else if (rank < acc.min_ranks) {
    acc.min_ranks = rank;
  }
  ++acc.count;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (rank[u] < rank[v]) continue;
      const int bitpos = u * n + v;
      acc.intersection[bitpos / 64] &= ~(uint64_t(1) << (bitpos % 64));
    }
  }
}

void merge_classes(ClassMap& into, ClassMap&& from) {
  for (auto& [key, acc] : from) {
    auto [it, inserted] = into.try_emplace(key, std::move(acc));
    if (inserted) continue;
    ClassAccum& dst = it->second;
    dst.count += acc.count;
    if (acc.min_ranks < dst.min_ranks) dst.min_ranks = acc.min_ranks;
    for (std::size_t w = 0; w < dst.intersection.size(); ++w) {
      dst.intersection[w] &= acc.intersection[w];
    }
  }
}

}  // namespace

StructureCensus enumerate_structures(const MonomialAlgebra& alg, int max_n, int threads) {
  const int n = alg.vertex_count();
  if (n > max_n) {
    throw TooManyVertices("census over " + std::to_string(n) + " vertices exceeds the cap " +
                          std::to_string(max_n));
  }
  long long num_orders = 1;
  for (int k = 2; k <= n; ++k) num_orders *= k;

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<long long>(threads, num_orders));

  ScanContext ctx{&alg, n, (alg.dimension() + 63) / 64};

  std::vector<ClassMap> partial(threads);
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    long long lo = num_orders * t / threads;
    long long hi = num_orders * (t + 1) / threads;
    workers.emplace_back([&, t, lo, hi]() {
      std::vector<int> chain = unrank_permutation(n, lo);
      for (long long k = lo; k < hi; ++k) {
        scan_order(ctx, chain, partial[t]);
        std::next_permutation(chain.begin(), chain.end());
      }
    });
  }
  for (std::thread& w : workers) w.join();

  ClassMap classes = std::move(partial[0]);
  for (int t = 1; t < threads; ++t) merge_classes(classes, std::move(partial[t]));

  const bool relation_free = alg.quiver().relation_generators().empty();

  StructureCensus census;
  census.num_orders = num_orders;
  for (auto& [key, acc] : classes) {
    CensusClass cls;
    cls.size = acc.count;
    cls.representative_ranks = acc.min_ranks;
    VertexOrder rep = VertexOrder::total_from_ranks(acc.min_ranks);
    cls.digest = order_fingerprint(alg, rep).digest(alg);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const int bitpos = u * n + v;
        if (acc.intersection[bitpos / 64] & (uint64_t(1) << (bitpos % 64))) {
          cls.essential_pairs.emplace_back(u, v);
        }
      }
    }
    if (relation_free) {
      cls.quasi_hereditary = true;
      cls.regular = regular_borel_hereditary(alg, rep).regular;
    } else {
      cls.quasi_hereditary = check_quasi_hereditary(alg, rep).quasi_hereditary;
      cls.regular = cls.quasi_hereditary && regular_borel_criterion(alg, rep).regular;
    }
    census.classes.push_back(std::move(cls));
  }

  std::sort(census.classes.begin(), census.classes.end(),
            [](const CensusClass& a, const CensusClass& b) { return a.digest < b.digest; });
  census.num_classes = static_cast<int>(census.classes.size());
  for (const CensusClass& cls : census.classes) {
    if (cls.regular) ++census.num_regular;
  }
  return census;
}

VertexOrder essential_order(const MonomialAlgebra& alg, const VertexOrder& representative,
                            int max_n) {
  StructureCensus census = enumerate_structures(alg, max_n, 1);
  std::string digest = order_fingerprint(alg, representative).digest(alg);
  for (const CensusClass& cls : census.classes) {
    if (cls.digest == digest) {
      return VertexOrder::partial_from_pairs(alg.vertex_count(), cls.essential_pairs);
    }
  }
  throw Error("internal: representative order not found in its own census");
}

bool family_regular_criterion(const FamilySpec& f, const BoundQuiver& q,
                              const VertexOrder& ord) {
  auto rank_of = [&](const std::string& label) { return ord.rank(q.vertex_index(label)); };
  const int a0 = rank_of("a0");

  if (f.opposite) {
    // a_0 above the whole b-chain, or above the whole c-chain
    bool above_b = true;
    for (int k = 1; k <= f.nb; ++k) above_b &= a0 > rank_of("b" + std::to_string(k));
    bool above_c = true;
    for (int k = 1; k <= f.nc; ++k) above_c &= a0 > rank_of("c" + std::to_string(k));
    return above_b || above_c;
  }

  auto direct_case = [&](char branch, int len) {
    for (int k = 1; k <= len + 1; ++k) {
      bool a0_max = true;  // a_0 maximal in Q(0, k-1, 0)
      for (int s = 1; s < k; ++s) {
        a0_max &= a0 > rank_of(branch + std::to_string(s));
      }
      if (!a0_max) continue;
      if (k > len) return true;
      bool bk_top = true;  // branch vertex k above the whole a-chain
      const int bk = rank_of(branch + std::to_string(k));
      for (int j = 0; j <= f.na; ++j) {
        bk_top &= bk > rank_of("a" + std::to_string(j));
      }
      if (bk_top) return true;
    }
    return false;
  };
  return direct_case('b', f.nb) || direct_case('c', f.nc);
}

long long predicted_regular_count(const FamilySpec& f) {
  if (f.opposite) {
    return catalan(f.nb) * catalan(f.na + f.nc + 1) + catalan(f.nc) * catalan(f.na + f.nb + 1) -
           catalan(f.nb) * catalan(f.nc) * catalan(f.na + 1);
  }
  return catalan(f.nb + 1) * catalan(f.na + f.nc + 1) +
         catalan(f.nc + 1) * catalan(f.na + f.nb + 1) -
         catalan(f.na + 1) * catalan(f.nb + 1) * catalan(f.nc + 1);
}

}  // namespace qhb
