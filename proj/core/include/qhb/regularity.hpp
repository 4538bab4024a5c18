#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/algebra.hpp"
#include "qhb/order.hpp"

namespace qhb {

// Pair (p, q) contributing to Ext^1(Delta_i, Delta_j): p in E_ik for some
// k <= j, q a path from j with max(q) = j and t(q) = k (trivial when k = j),
// such that every annihilator of p bounded by j also annihilates q.
struct EPrimePair {
  int i = -1;
  int j = -1;
  int p = -1;  // basis index
  int q = -1;  // basis index, possibly trivial
};

// All pairs of E'_{ij}, sorted by (key of p, key of q).  Precondition:
// (A, ord) quasi-hereditary and rank(i) < rank(j); not re-checked here.
std::vector<EPrimePair> e_prime(const MonomialAlgebra& alg, const VertexOrder& ord, int i,
                                int j);

// dim Ext^1(Delta_i, L_j) = |E_ij|.
int dim_ext_delta_simple(const MonomialAlgebra& alg, const VertexOrder& ord, int i, int j);

// dim Ext^1(Delta_i, Delta_j) = |E'_ij| minus the number of paths q'': j -> i
// for which some p in E_i has (p, p*q'') in E'_ij.
int dim_ext_delta_delta(const MonomialAlgebra& alg, const VertexOrder& ord, int i, int j);

struct RegularityVerdict {
  bool regular = false;
  // first violation in canonical order: (rank(j), rank(i), path keys)
  std::optional<EPrimePair> witness;
  std::string reason;
};

// Annihilator-pair criterion: every (p, q) has q trivial or q = p*q''
// with p'q'' zero for all other p' in E_i reaching max exactly j.  Throws
// NotQuasiHereditary.
RegularityVerdict regular_borel_criterion(const MonomialAlgebra& alg, const VertexOrder& ord);

// Hereditary shortcut (relation-free algebras only; throws HasRelations):
// (1) every path q: j -> k from above k factors through each path p: i -> k
//     with max(p) = k > i, and
// (2) for every path q: j -> i with j > i there is at most one right-minimal
//     direction-preserving path from i ending below j.
RegularityVerdict regular_borel_hereditary(const MonomialAlgebra& alg, const VertexOrder& ord);

struct NablaShape {
  int vertex = -1;
  bool injective = false;
  bool uniserial = false;
};
struct NablaShapeVerdict {
  bool pass = false;  // every costandard module injective or uniserial
  std::vector<NablaShape> per_vertex;
};

// Necessary-condition screen for regularity on relation-free algebras.
NablaShapeVerdict nabla_shape_check(const MonomialAlgebra& alg, const VertexOrder& ord);

}  // namespace qhb
