#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qhb/algebra.hpp"
#include "qhb/order.hpp"

namespace qhb {

enum class SubalgebraTag { Bmax, Bmin, CminOp, Custom };

// Subalgebra of a monomial algebra spanned by a set of basis paths that is
// closed under nonzero products and contains every trivial path.
struct PathSubalgebra {
  const MonomialAlgebra* algebra = nullptr;
  SubalgebraTag tag = SubalgebraTag::Custom;
  std::vector<int> basis;  // sorted basis indices

  bool contains(int idx) const;
  int dimension() const { return static_cast<int>(basis.size()); }
};

// True iff rank(s(p)) < rank(t(p)).
bool is_direction_preserving(const MonomialAlgebra& alg, int path_idx, const VertexOrder& ord);

// The families E_ij of nonzero right-minimal direction-preserving paths:
// rank(s) < rank(t) and every interior vertex bounded by the source.
struct DpPathFamilies {
  std::map<std::pair<int, int>, std::vector<int>> by_pair;  // (source, target) -> paths
  std::vector<std::vector<int>> by_source;                  // E_i, sorted by basis index

  const std::vector<int>& at(int i, int j) const;
};
DpPathFamilies right_minimal_dp_paths(const MonomialAlgebra& alg, const VertexOrder& ord);

// Multiplicative closure of a set of basis paths together with the trivial
// paths; the workhorse behind the generated subalgebras.
std::vector<int> close_under_products(const MonomialAlgebra& alg,
                                      const std::vector<int>& generators);

// B_max: generated by the semisimple part and all direction-preserving paths.
PathSubalgebra borel_max_basis(const MonomialAlgebra& alg, const VertexOrder& ord);

// B_min: generated by the right-minimal direction-preserving paths.  Its
// nontrivial basis paths are exactly the direction-preserving paths whose
// interior vertices all lie strictly below the target.
PathSubalgebra borel_min_basis(const MonomialAlgebra& alg, const VertexOrder& ord);

// C_min^op: the mirror image of B_min in the opposite algebra; spanned by the
// paths whose source is their unique order-maximum (the set P), including all
// trivial paths.
PathSubalgebra delta_sub_basis(const MonomialAlgebra& alg, const VertexOrder& ord);

// Reedy factorization p = c * b, cutting each basis path at the unique
// occurrence of its order-maximum vertex.
struct ReedyFactorization {
  // per basis index: (c, b) with c in the C_min^op basis, b in the B_min basis
  std::vector<std::pair<int, int>> pairs;
};

struct ReedyFailure {
  enum class Kind { MaxVisitedTwice, ZeroProduct, Collision };
  Kind kind;
  std::string witness_key;            // the violating path/word
  std::optional<std::pair<int, int>> pair;  // (c, b) for product failures
};

struct ReedyOutcome {
  std::optional<ReedyFactorization> factorization;
  std::optional<ReedyFailure> failure;
  bool ok() const { return factorization.has_value(); }
};

ReedyOutcome reedy_factorize(const MonomialAlgebra& alg, const VertexOrder& ord);

// A = sum over q in P of q * B_min; returns (generator, dim e_{s(q)} B_min)
// per generator.  Requires a successful Reedy factorization.
std::vector<std::pair<int, int>> right_module_decomposition(const MonomialAlgebra& alg,
                                                            const VertexOrder& ord);

// Splitting of the inclusion B_min -> A: identity on B_min, zero on the
// complement q * B_min for nontrivial q in P.  Empty optional is zero.
std::optional<int> normal_splitting(const MonomialAlgebra& alg, const ReedyFactorization& reedy,
                                    int path_idx);

// e B_min(A) e versus the intrinsic B_min of eAe for the upward-closed
// idempotent e spanned by the vertices of rank >= cutoff_rank.
struct TruncateReport {
  int cutoff_rank = 0;
  std::vector<int> kept_vertices;
  std::vector<int> truncated_bmin;   // (a) e B_min(A) e
  std::vector<int> intrinsic_bmin;   // (b) closure of the intrinsic generators
  bool equal = false;
  std::optional<int> counterexample;
};
TruncateReport truncate_check(const MonomialAlgebra& alg, const VertexOrder& ord,
                              int cutoff_rank);

// Quotient by the monomial ideal generated by `gens` (trivial generators
// delete vertices, arrows delete arrows, longer paths join the ideal), with
// the transfer check B_min(A/J) = image of B_min(A).
struct QuotientResult {
  MonomialAlgebra algebra;
  VertexOrder induced_order;
  std::vector<int> vertex_map;  // old vertex -> new vertex or -1
  bool transfer_ok = false;
  std::vector<int> bmin_quotient;  // basis indices in the quotient algebra
  std::vector<int> bmin_image;
};
QuotientResult quotient(const MonomialAlgebra& alg, const VertexOrder& ord,
                        const std::vector<Path>& gens);

}  // namespace qhb
