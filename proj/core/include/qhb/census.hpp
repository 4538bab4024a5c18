#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhb/algebra.hpp"
#include "qhb/order.hpp"

namespace qhb {

// Exact Catalan number; throws on overflow (n <= 35).
long long catalan(int n);

// The quiver Q(n_a, n_b, n_c): a chain a_{n_a} -> ... -> a_0 branching into
// chains a_0 -> b_1 -> ... -> b_{n_b} and a_0 -> c_1 -> ... -> c_{n_c}.
// `opposite` reverses every arrow.
struct FamilySpec {
  int na = 0;
  int nb = 0;
  int nc = 0;
  bool opposite = false;
  int vertex_count() const { return na + nb + nc + 1; }
};
BoundQuiver family_quiver(const FamilySpec& f);

// A partial order is adapted iff every path between incomparable endpoints
// has an inner vertex above both.  Relation-free quivers only.
bool adaptedness_check(const MonomialAlgebra& alg, const VertexOrder& ord);

// Equivalence data of a total order: the standard and costandard module
// bases per vertex.  Two total orders are equivalent iff their fingerprints
// agree.
struct Fingerprint {
  std::vector<std::vector<int>> delta;  // per vertex, sorted basis indices
  std::vector<std::vector<int>> nabla;

  bool operator==(const Fingerprint&) const = default;
  std::string canonical_text(const MonomialAlgebra& alg) const;
  std::string digest(const MonomialAlgebra& alg) const;  // sha256 of the text
};
Fingerprint order_fingerprint(const MonomialAlgebra& alg, const VertexOrder& ord);

struct CensusClass {
  std::string digest;
  std::vector<int> representative_ranks;  // ranks per vertex, lexicographically minimal
  long long size = 0;
  std::vector<std::pair<int, int>> essential_pairs;  // intersection of all members
  bool quasi_hereditary = false;
  bool regular = false;
};

struct StructureCensus {
  long long num_orders = 0;
  std::vector<CensusClass> classes;  // sorted by digest
  int num_classes = 0;
  int num_regular = 0;  // quasi-hereditary classes admitting a regular exact Borel
};

// Groups all n! total orders by fingerprint, decides quasi-heredity and the
// regular-Borel verdict per class, and computes the essential order of each
// class as the intersection of its members.  Throws TooManyVertices above
// the cap.  threads == 0 picks the hardware concurrency.
StructureCensus enumerate_structures(const MonomialAlgebra& alg, int max_n = 10,
                                     int threads = 1);

// Essential partial order of the class of the given total order: the
// intersection of all equivalent total orders.
VertexOrder essential_order(const MonomialAlgebra& alg, const VertexOrder& representative,
                            int max_n = 10);

// Closed-form evaluation of the regular-Borel condition for the family
// quiver under a total order, without enumerating paths.
bool family_regular_criterion(const FamilySpec& f, const BoundQuiver& q,
                              const VertexOrder& ord);

// Closed counting formula for the structures admitting a regular exact Borel
// subalgebra.
long long predicted_regular_count(const FamilySpec& f);

}  // namespace qhb
