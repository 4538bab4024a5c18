#pragma once

// Shared quiver fixtures used across the unit and acceptance suites.

#include <string>

#include "qhb/algebra.hpp"
#include "qhb/order.hpp"
#include "qhb/spec_io.hpp"

namespace qhb::testing {

struct Fixture {
  ProblemSpec spec;
  MonomialAlgebra algebra;
  static Fixture from_text(const std::string& text) {
    ProblemSpec spec = parse_spec(text);
    BoundQuiver q = spec.quiver;
    MonomialAlgebra algebra = MonomialAlgebra::enumerate(std::move(q));
    return Fixture{std::move(spec), std::move(algebra)};
  }
  const VertexOrder& order() const { return spec.order; }
};

// Three vertices, gamma parallel to beta*alpha; hereditary.
inline Fixture fix_a() {
  return Fixture::from_text(R"(
    quiver fixA {
      vertices: 1 2 3 ;
      arrows:
        alpha : 1 -> 3 ;
        beta  : 3 -> 2 ;
        gamma : 1 -> 2 ;
      order: 1 < 2 < 3 ;
    })");
}

// Five vertices with one length-three relation.
inline Fixture fix_b() {
  return Fixture::from_text(R"(
    quiver fixB {
      vertices: 1 2 3 4 5 ;
      arrows:
        alpha  : 2 -> 1 ;
        alphap : 2 -> 4 ;
        beta   : 1 -> 3 ;
        betap  : 4 -> 3 ;
        gamma  : 3 -> 5 ;
      relations: alpha.beta.gamma ;
      order: 1 < 2 < 3 < 4 < 5 ;
    })");
}

// Two vertices, two arrows, all length-two paths are relations.
inline Fixture fix_c() {
  return Fixture::from_text(R"(
    quiver fixC {
      vertices: 1 2 ;
      arrows:
        a : 1 -> 2 ;
        b : 2 -> 1 ;
      relations: a.b ; b.a ;
      order: 1 < 2 ;
    })");
}

// Q(1,1,1) with a natural-ish order.
inline Fixture fix_d() {
  return Fixture::from_text(R"(
    quiver fixD {
      vertices: a1 a0 b1 c1 ;
      arrows:
        a1_a0 : a1 -> a0 ;
        a0_b1 : a0 -> b1 ;
        a0_c1 : a0 -> c1 ;
      order: a1 < a0 < b1 < c1 ;
    })");
}

// Four vertices, relation alpha.gamma; admits a regular exact Borel.
inline Fixture fix_e() {
  return Fixture::from_text(R"(
    quiver fixE {
      vertices: 1 2 3 4 ;
      arrows:
        alpha : 1 -> 2 ;
        beta  : 4 -> 2 ;
        gamma : 2 -> 3 ;
      relations: alpha.gamma ;
      order: 1 < 2 < 3 < 4 ;
    })");
}

// Star with arms into 2 and a tail out of it, relation alpha.gamma.
inline Fixture star_with_tail() {
  return Fixture::from_text(R"(
    quiver star {
      vertices: 1 2 3 4 5 ;
      arrows:
        beta  : 5 -> 2 ;
        alpha : 1 -> 2 ;
        betap : 3 -> 2 ;
        gamma : 2 -> 4 ;
      relations: alpha.gamma ;
      order: 1 < 2 < 3 < 4 < 5 ;
    })");
}

// A_3 with a central sink: 1 -> 2 <- 3.
inline Fixture sink_path() {
  return Fixture::from_text(R"(
    quiver sink {
      vertices: 1 2 3 ;
      arrows:
        alpha : 1 -> 2 ;
        beta  : 3 -> 2 ;
      order: 1 < 2 < 3 ;
    })");
}

// A_3 with a central source: 1 <- 2 -> 3.
inline Fixture source_path() {
  return Fixture::from_text(R"(
    quiver source {
      vertices: 1 2 3 ;
      arrows:
        alpha : 2 -> 1 ;
        beta  : 2 -> 3 ;
      order: 1 < 2 < 3 ;
    })");
}

// Diamond 4 -> 1 -> 3 and 4 -> 2 -> 3.
inline Fixture diamond() {
  return Fixture::from_text(R"(
    quiver diamond {
      vertices: 1 2 3 4 ;
      arrows:
        alpha : 4 -> 1 ;
        delta : 1 -> 3 ;
        beta  : 4 -> 2 ;
        gamma : 2 -> 3 ;
      order: 1 < 2 < 3 < 4 ;
    })");
}

}  // namespace qhb::testing
