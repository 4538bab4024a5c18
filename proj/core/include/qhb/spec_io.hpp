#pragma once

#include <string>
#include <string_view>

#include "qhb/order.hpp"
#include "qhb/quiver.hpp"

namespace qhb {

// A named bound quiver together with a vertex order, as read from the DSL.
struct ProblemSpec {
  std::string name;
  BoundQuiver quiver;
  VertexOrder order;
};

// Input DSL, one spec per file:
//
//   quiver fixA {                  # '#' starts a comment
//     vertices: 1 2 3 ;
//     arrows:
//       alpha : 1 -> 3 ;
//       beta  : 3 -> 2 ;
//       gamma : 1 -> 2 ;
//     relations: alpha.beta ;      # traversal order: first arrow first
//     order: 1 < 2 < 3 ;           # chains; several chains give a partial order
//   }
//
// The vertices section is required; arrows, relations and order are optional.
ProblemSpec parse_spec(std::string_view text);

// Canonical rendering; parse_spec(render_spec(s)) == s, and rendering a
// parsed spec is idempotent.  Partial orders are emitted as their covering
// chains (the transitive reduction).
std::string render_spec(const ProblemSpec& spec);

// SHA-256 over the canonical serialization.
std::string input_digest(const ProblemSpec& spec);

bool operator==(const ProblemSpec& a, const ProblemSpec& b);

}  // namespace qhb
