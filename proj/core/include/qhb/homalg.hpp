#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/algebra.hpp"
#include "qhb/borel.hpp"
#include "qhb/order.hpp"
#include "qhb/rational.hpp"

namespace qhb {

enum class ModuleKind { Delta, Nabla };

// Basis of a standard or costandard module, read off the path basis.  For
// Delta the basis paths live in P_i; for Nabla they label the dual basis
// inside the injective at i.  kernel is the complement in the ambient
// projective/injective.
struct ModulePresentation {
  int apex = -1;
  ModuleKind kind = ModuleKind::Delta;
  std::vector<int> basis;
  std::vector<int> kernel;
  int dimension() const { return static_cast<int>(basis.size()); }
};

ModulePresentation standard_basis(const MonomialAlgebra& alg, const VertexOrder& ord, int i);
ModulePresentation costandard_basis(const MonomialAlgebra& alg, const VertexOrder& ord, int i);

// Three-term projective presentation of Delta_i:
//   sum over p in E_i, q in E_p of P_{t(q)}  ->  sum over p in E_i of P_{t(p)}
//       ->  P_i  ->  Delta_i  ->  0,
// with differentials given by right multiplication with the labels.
struct PresentationData {
  int apex = -1;
  std::vector<int> p1;                      // labels p in E_i; summand apex t(p)
  std::vector<std::pair<int, int>> p2;      // (position into p1, label q in E_p)
  int p1_apex(const MonomialAlgebra& alg, int k) const { return alg.target_of(p1[k]); }
};
PresentationData delta_presentation(const MonomialAlgebra& alg, const VertexOrder& ord, int i);

// Iterated split-heredity-ideal test, from the top of the order downwards.
struct QhLayerFailure {
  int layer_vertex = -1;
  std::optional<int> cycle_path;                 // nontrivial v -> v path
  std::optional<std::pair<int, int>> witness;    // (p from v, q into v), p*q = 0
};
struct QhVerdict {
  bool quasi_hereditary = false;
  std::vector<int> layers;  // vertices peeled off, top rank first
  std::optional<QhLayerFailure> failure;
};
QhVerdict check_quasi_hereditary(const MonomialAlgebra& alg, const VertexOrder& ord);

// dim Ext^1(Delta_i, Delta_j) or dim Ext^1(Delta_i, L_j), computed as
// cocycles modulo coboundaries over the projective presentations with exact
// rational rank computations.  Throws NotQuasiHereditary.
enum class ExtTarget { Delta, Simple };
int ext1_dim(const MonomialAlgebra& alg, const VertexOrder& ord, int i, ExtTarget target, int j);

// Subalgebra given by spanning vectors over the path basis.
struct SpannedSubalgebra {
  const MonomialAlgebra* algebra = nullptr;
  std::vector<std::vector<Rational>> spanning;  // each of size dim A
};

struct BorelCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct BorelReport {
  bool all_pass = false;
  std::vector<BorelCheck> checks;
};

// Verifies that B is an exact Borel subalgebra of (A, ord): multiplicative
// closure, radical compatibility, projectivity of A as a right B-module,
// A rad(B) e_i = eta_{>i} P_i for every i, and strict directedness.
// Throws MissingSemisimplePart when B does not span the trivial paths.
BorelReport verify_exact_borel(const MonomialAlgebra& alg, const VertexOrder& ord,
                               const SpannedSubalgebra& B);

// Convenience: the span of a path subalgebra (unit coordinate vectors).
SpannedSubalgebra span_of(const PathSubalgebra& sub);

}  // namespace qhb
