#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qhb/borel.hpp"
#include "qhb/homalg.hpp"
#include "qhb/regularity.hpp"
#include "support/fixtures.hpp"

using namespace qhb;
using qhb::testing::Fixture;

namespace {

std::set<std::pair<std::string, std::string>> pair_keys(const MonomialAlgebra& alg,
                                                        const std::vector<EPrimePair>& pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const EPrimePair& p : pairs) out.emplace(alg.key_of(p.p), alg.key_of(p.q));
  return out;
}

int vx(const Fixture& fx, const std::string& label) {
  return fx.algebra.quiver().vertex_index(label);
}

}  // namespace

TEST_CASE("E' pairs of the star-with-tail example") {
  Fixture fx = testing::star_with_tail();
  auto e13 = e_prime(fx.algebra, fx.order(), vx(fx, "1"), vx(fx, "3"));
  CHECK(pair_keys(fx.algebra, e13).count({"alpha", "betap"}) == 1);

  // gamma kills alpha but not beta, with max(gamma.beta) below 5
  auto e15 = e_prime(fx.algebra, fx.order(), vx(fx, "1"), vx(fx, "5"));
  CHECK(pair_keys(fx.algebra, e15).count({"alpha", "beta"}) == 0);
}

TEST_CASE("E' tables of fixE match the worked example") {
  Fixture fx = testing::fix_e();
  auto at = [&](const std::string& i, const std::string& j) {
    return pair_keys(fx.algebra, e_prime(fx.algebra, fx.order(), vx(fx, i), vx(fx, j)));
  };
  CHECK(at("1", "2") ==
        std::set<std::pair<std::string, std::string>>{{"alpha", "e(2)"}});
  CHECK(at("2", "3") ==
        std::set<std::pair<std::string, std::string>>{{"gamma", "e(3)"}});
  CHECK(at("2", "4") ==
        std::set<std::pair<std::string, std::string>>{{"gamma", "beta.gamma"}});
  CHECK(at("1", "3").empty());
  CHECK(at("1", "4").empty());
  CHECK(at("3", "4").empty());
}

TEST_CASE("(p, e_j) belongs to E' for every right-minimal p on qh fixtures") {
  for (Fixture fx : {testing::fix_a(), testing::fix_b(), testing::fix_d(), testing::fix_e()}) {
    DpPathFamilies dp = right_minimal_dp_paths(fx.algebra, fx.order());
    for (const auto& [pair, paths] : dp.by_pair) {
      auto eprime = e_prime(fx.algebra, fx.order(), pair.first, pair.second);
      for (int p : paths) {
        int ej = fx.algebra.trivial_index(pair.second);
        bool found = false;
        for (const EPrimePair& e : eprime) {
          if (e.p == p && e.q == ej) found = true;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("combinatorial Ext dimensions") {
  Fixture fa = testing::fix_a();
  CHECK(dim_ext_delta_simple(fa.algebra, fa.order(), vx(fa, "1"), vx(fa, "3")) == 1);
  CHECK(dim_ext_delta_delta(fa.algebra, fa.order(), vx(fa, "1"), vx(fa, "3")) == 2);

  Fixture fb = testing::fix_b();
  CHECK(dim_ext_delta_simple(fb.algebra, fb.order(), vx(fb, "2"), vx(fb, "3")) == 1);
  CHECK(dim_ext_delta_simple(fb.algebra, fb.order(), vx(fb, "1"), vx(fb, "5")) == 0);

  Fixture fe = testing::fix_e();
  CHECK(dim_ext_delta_delta(fe.algebra, fe.order(), vx(fe, "2"), vx(fe, "4")) == 0);
}

TEST_CASE("combinatorial Ext dimensions agree with the linear-algebra oracle") {
  for (Fixture fx : {testing::fix_a(), testing::fix_b(), testing::fix_d(), testing::fix_e()}) {
    const int n = fx.algebra.vertex_count();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!fx.order().less(i, j)) continue;
        CHECK(dim_ext_delta_simple(fx.algebra, fx.order(), i, j) ==
              ext1_dim(fx.algebra, fx.order(), i, ExtTarget::Simple, j));
        CHECK(dim_ext_delta_delta(fx.algebra, fx.order(), i, j) ==
              ext1_dim(fx.algebra, fx.order(), i, ExtTarget::Delta, j));
      }
    }
  }
}

TEST_CASE("regular Borel criterion verdicts") {
  SUBCASE("fixA fails with the canonical witness (gamma, beta)") {
    Fixture fx = testing::fix_a();
    RegularityVerdict verdict = regular_borel_criterion(fx.algebra, fx.order());
    CHECK(!verdict.regular);
    REQUIRE(verdict.witness.has_value());
    CHECK(fx.algebra.key_of(verdict.witness->p) == "gamma");
    CHECK(fx.algebra.key_of(verdict.witness->q) == "beta");
  }
  SUBCASE("fixE passes") {
    Fixture fx = testing::fix_e();
    CHECK(regular_borel_criterion(fx.algebra, fx.order()).regular);
  }
  SUBCASE("the source quiver passes") {
    Fixture fx = testing::source_path();
    CHECK(regular_borel_criterion(fx.algebra, fx.order()).regular);
  }
  SUBCASE("non-quasi-hereditary input is rejected") {
    Fixture fc = testing::fix_c();
    CHECK_THROWS_AS(regular_borel_criterion(fc.algebra, fc.order()), NotQuasiHereditary);
  }
}

TEST_CASE("hereditary criterion verdicts") {
  SUBCASE("sink quiver fails condition (1)") {
    Fixture fx = testing::sink_path();
    RegularityVerdict verdict = regular_borel_hereditary(fx.algebra, fx.order());
    CHECK(!verdict.regular);
    REQUIRE(verdict.witness.has_value());
    CHECK(fx.algebra.key_of(verdict.witness->q) == "beta");
  }
  SUBCASE("diamond fails: each arm blocks the other") {
    Fixture fx = testing::diamond();
    RegularityVerdict verdict = regular_borel_hereditary(fx.algebra, fx.order());
    CHECK(!verdict.regular);
    REQUIRE(verdict.witness.has_value());
    // canonically first violation; the mirror (gamma, alpha.delta) is equally real
    CHECK(fx.algebra.key_of(verdict.witness->p) == "delta");
    CHECK(fx.algebra.key_of(verdict.witness->q) == "beta.gamma");
  }
  SUBCASE("linear quiver passes under both orders") {
    Fixture fx = Fixture::from_text(R"(
      quiver lin { vertices: 1 2 ; arrows: a : 1 -> 2 ; order: 1 < 2 ; })");
    CHECK(regular_borel_hereditary(fx.algebra, fx.order()).regular);
    CHECK(regular_borel_hereditary(fx.algebra, VertexOrder::total_from_ranks({2, 1})).regular);
  }
  SUBCASE("bound algebras are rejected") {
    Fixture fe = testing::fix_e();
    CHECK_THROWS_AS(regular_borel_hereditary(fe.algebra, fe.order()), HasRelations);
  }
}

TEST_CASE("both criteria agree on relation-free fixtures") {
  for (Fixture fx : {testing::fix_a(), testing::fix_d(), testing::sink_path(),
                     testing::source_path(), testing::diamond()}) {
    CHECK(regular_borel_hereditary(fx.algebra, fx.order()).regular ==
          regular_borel_criterion(fx.algebra, fx.order()).regular);
  }
}

TEST_CASE("costandard shapes") {
  SUBCASE("fixA is all-uniserial yet not regular") {
    Fixture fx = testing::fix_a();
    NablaShapeVerdict verdict = nabla_shape_check(fx.algebra, fx.order());
    CHECK(verdict.pass);
    for (const NablaShape& s : verdict.per_vertex) CHECK(s.uniserial);
    CHECK(!regular_borel_hereditary(fx.algebra, fx.order()).regular);
  }
  SUBCASE("source quiver passes") {
    Fixture fx = testing::source_path();
    CHECK(nabla_shape_check(fx.algebra, fx.order()).pass);
  }
  SUBCASE("single vertex is injective") {
    BoundQuiver q({"v"}, {}, {});
    MonomialAlgebra alg = MonomialAlgebra::enumerate(std::move(q));
    NablaShapeVerdict verdict = nabla_shape_check(alg, VertexOrder::total_from_ranks({1}));
    CHECK(verdict.pass);
    CHECK(verdict.per_vertex[0].injective);
  }
}

TEST_CASE("regularity implies the costandard shape condition, never conversely") {
  for (Fixture fx : {testing::fix_a(), testing::fix_d(), testing::sink_path(),
                     testing::source_path(), testing::diamond()}) {
    if (regular_borel_hereditary(fx.algebra, fx.order()).regular) {
      CHECK(nabla_shape_check(fx.algebra, fx.order()).pass);
    }
  }
}
