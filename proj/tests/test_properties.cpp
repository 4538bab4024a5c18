#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Cross-module property suite over randomly generated acyclic monomial
// algebras.  The full 200-instance sweep lives in the acceptance binary;
// here a smaller deterministic slice keeps the unit run fast.

#include "qhb/borel.hpp"
#include "qhb/census.hpp"
#include "qhb/homalg.hpp"
#include "qhb/regularity.hpp"
#include "support/random_algebras.hpp"

using namespace qhb;
using qhb::testing::RandomInstance;
using qhb::testing::random_acyclic_monomial;

TEST_CASE("heredity chains match Reedy factorization on random instances") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    bool qh = check_quasi_hereditary(inst.algebra, inst.order).quasi_hereditary;
    bool reedy = reedy_factorize(inst.algebra, inst.order).ok();
    CHECK(qh == reedy);
  }
}

TEST_CASE("Ext dimensions agree between both routes on random qh instances") {
  int seen_qh = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    if (!check_quasi_hereditary(inst.algebra, inst.order).quasi_hereditary) continue;
    ++seen_qh;
    const int n = inst.algebra.vertex_count();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!inst.order.less(i, j)) continue;
        CHECK(dim_ext_delta_simple(inst.algebra, inst.order, i, j) ==
              ext1_dim(inst.algebra, inst.order, i, ExtTarget::Simple, j));
        CHECK(dim_ext_delta_delta(inst.algebra, inst.order, i, j) ==
              ext1_dim(inst.algebra, inst.order, i, ExtTarget::Delta, j));
      }
    }
  }
  CHECK(seen_qh > 5);  // the generator must actually produce qh instances
}

TEST_CASE("dimension bookkeeping dim A = sum dim Delta dim Nabla on random qh instances") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    if (!check_quasi_hereditary(inst.algebra, inst.order).quasi_hereditary) continue;
    long long sum = 0;
    for (int v = 0; v < inst.algebra.vertex_count(); ++v) {
      sum += static_cast<long long>(standard_basis(inst.algebra, inst.order, v).dimension()) *
             costandard_basis(inst.algebra, inst.order, v).dimension();
    }
    CHECK(sum == inst.algebra.dimension());
  }
}

TEST_CASE("normal splitting kernels are right ideals on random qh instances") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    ReedyOutcome outcome = reedy_factorize(inst.algebra, inst.order);
    if (!outcome.ok()) continue;
    const MonomialAlgebra& alg = inst.algebra;
    for (int x = 0; x < alg.dimension(); ++x) {
      if (normal_splitting(alg, *outcome.factorization, x).has_value()) continue;
      for (int a = 0; a < alg.dimension(); ++a) {
        if (alg.target_of(a) != alg.source_of(x)) continue;
        auto z = alg.product(x, a);
        if (z) CHECK(!normal_splitting(alg, *outcome.factorization, *z).has_value());
      }
    }
  }
}

TEST_CASE("truncation equality holds for every cutoff on random qh instances") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    if (!check_quasi_hereditary(inst.algebra, inst.order).quasi_hereditary) continue;
    for (int cutoff = 1; cutoff <= inst.algebra.vertex_count(); ++cutoff) {
      CHECK(truncate_check(inst.algebra, inst.order, cutoff).equal);
    }
  }
}

TEST_CASE("B_min passes the exact Borel verifier on random qh instances") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    if (!check_quasi_hereditary(inst.algebra, inst.order).quasi_hereditary) continue;
    BorelReport report = verify_exact_borel(
        inst.algebra, inst.order, span_of(borel_min_basis(inst.algebra, inst.order)));
    CHECK(report.all_pass);
  }
}

TEST_CASE("both regularity routes agree on relation-free random instances") {
  for (uint64_t seed = 100; seed <= 160; ++seed) {
    RandomInstance inst = random_acyclic_monomial(seed);
    if (!inst.algebra.quiver().relation_generators().empty()) continue;
    CHECK(regular_borel_hereditary(inst.algebra, inst.order).regular ==
          regular_borel_criterion(inst.algebra, inst.order).regular);
  }
}

TEST_CASE("family bullets match the hereditary criterion on direct orientations") {
  // exhaustive over every direct family quiver with at most 7 vertices;
  // opposite orientations diverge by design of the closed-form bullets
  for (int na = 0; na <= 6; ++na) {
    for (int nb = 0; nb <= 6; ++nb) {
      for (int nc = 0; nc <= 6; ++nc) {
        if (na + nb + nc + 1 > 7) continue;
        FamilySpec f{na, nb, nc, false};
        BoundQuiver quiver = family_quiver(f);
        MonomialAlgebra alg = MonomialAlgebra::enumerate(quiver);
        const int n = alg.vertex_count();
        std::vector<int> chain(n);
        for (int v = 0; v < n; ++v) chain[v] = v;
        do {
          VertexOrder ord = VertexOrder::total_from_chain(chain);
          CHECK(family_regular_criterion(f, alg.quiver(), ord) ==
                regular_borel_hereditary(alg, ord).regular);
        } while (std::next_permutation(chain.begin(), chain.end()));
      }
    }
  }
}

TEST_CASE("regular instances pass the costandard shape screen") {
  for (uint64_t seed = 200; seed <= 320; ++seed) {
    auto inst = qhb::testing::random_acyclic_monomial(seed);
    if (!inst.algebra.quiver().relation_generators().empty()) continue;
    if (regular_borel_hereditary(inst.algebra, inst.order).regular) {
      CHECK(nabla_shape_check(inst.algebra, inst.order).pass);
    }
  }
}

TEST_CASE("census regular verdicts are constant on equivalence classes") {
  MonomialAlgebra alg = MonomialAlgebra::enumerate(family_quiver({1, 1, 1, true}));
  const int n = alg.vertex_count();
  std::vector<int> chain(n);
  for (int v = 0; v < n; ++v) chain[v] = v;
  std::map<std::string, bool> verdict_by_class;
  do {
    VertexOrder ord = VertexOrder::total_from_chain(chain);
    bool regular = regular_borel_hereditary(alg, ord).regular;
    std::string digest = order_fingerprint(alg, ord).digest(alg);
    auto [it, inserted] = verdict_by_class.emplace(digest, regular);
    if (!inserted) CHECK(it->second == regular);
  } while (std::next_permutation(chain.begin(), chain.end()));
}
