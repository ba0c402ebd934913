#include <doctest.h>

#include "maw/instances.hpp"
#include "maw/lawcheck.hpp"
#include "maw/stoned.hpp"
#include "maw/suites.hpp"
#include "support.hpp"

using namespace maw;
using test::fb;
using test::uniform;

// Every checker must catch its own planted violation (mutation-style
// self-tests), otherwise a passing report means nothing.

TEST_CASE("functor law checker catches a corrupted morphism map") {
  auto c = opposite(bool_instance(bool_pool(1, 2)));
  auto d = stone_instance(stone_pool(1, 2));
  auto corrupted = [](const BoolHom& f) {
    PointMap pm = stone_map(f);
    if (pm.map.size() == 2 && pm.source.point_count() == 2) {
      auto swapped = pm.map;
      std::swap(swapped[0], swapped[1]);
      return PointMap(pm.source, pm.target, swapped);
    }
    return pm;
  };
  auto report = check_functor_laws(c, d, [](const FinBool& b) { return stone(b); }, corrupted);
  CHECK_FALSE(report.pass());
}

TEST_CASE("naturality checker catches a wrong component") {
  auto c = bool_instance(bool_pool(1, 2));
  auto planted = [](const FinBool& b) {
    if (b.atom_count() == 2) return BoolHom(b, b, {1, 0});  // swap instead of identity
    return BoolHom::identity(b);
  };
  auto report = check_naturality(
      c, c, [](const BoolHom& f) { return f; },
      [](const BoolHom& f) { return clopen_map(stone_map(f)); }, planted);
  CHECK_FALSE(report.pass());
}

TEST_CASE("universal property checker catches a broken projection") {
  auto op = opposite(bool_instance(bool_pool(1, 2, true)));
  FinBool b2 = fb({"a", "b"});
  std::vector<FinBool> factors{b2, b2};
  Coproduct cp = coproduct(factors);

  SUBCASE("the honest coproduct passes") {
    auto report =
        check_universal_product(op, cp.algebra, std::span<const BoolHom>(cp.injections),
                                std::span<const FinBool>(factors),
                                std::span<const FinBool>(op.objects));
    CHECK(report.pass());
    CHECK(report.checked > 0);
  }
  SUBCASE("replacing one injection with a constant is caught") {
    std::vector<BoolHom> broken = cp.injections;
    broken[1] = BoolHom(b2, cp.algebra, std::vector<std::size_t>(4, 0));
    auto report = check_universal_product(op, cp.algebra, std::span<const BoolHom>(broken),
                                          std::span<const FinBool>(factors),
                                          std::span<const FinBool>(op.objects));
    CHECK_FALSE(report.pass());
  }
}

TEST_CASE("brute-force mono/epi agrees with the structural predicates") {
  auto c = bool_instance(bool_pool(0, 3));
  auto probes = std::span<const FinBool>(c.objects);

  SUBCASE("identity is mono and epi") {
    FinBool b = fb({"a", "b"});
    auto [mono, epi] = check_mono_epi(c, BoolHom::identity(b), b, b, probes);
    CHECK(mono);
    CHECK(epi);
  }
  SUBCASE("injective non-surjective hom") {
    FinBool b1 = fb({"a"});
    FinBool b2 = fb({"x", "y"});
    BoolHom phi(b1, b2, {0, 0});  // element map {a} -> {x,y}: injective, not surjective
    CHECK(is_mono(phi));
    CHECK_FALSE(is_epi(phi));
    auto [mono, epi] = check_mono_epi(c, phi, b1, b2, probes);
    CHECK(mono);
    CHECK_FALSE(epi);
  }
  SUBCASE("exhaustive agreement on small instances") {
    for (const auto& b : bool_pool(0, 2))
      for (const auto& d : bool_pool(0, 2))
        for (const auto& f : all_bool_homs(b, d)) {
          auto [mono, epi] = check_mono_epi(c, f, b, d, probes);
          CHECK(mono == is_mono(f));
          CHECK(epi == is_epi(f));
        }
  }
  SUBCASE("probability morphisms are always brute-force epi") {
    std::vector<ProbAlgebra> objs = {uniform({"a", "b"}), uniform({"u", "v"}),
                                     uniform({"p", "q", "r", "s"}), point_algebra()};
    auto pc = prob_instance(objs);
    auto pprobes = std::span<const ProbAlgebra>(pc.objects);
    ProbAlgebra x4 = objs[2], y2 = objs[0];
    for (const auto& t : all_prob_morphisms(x4, y2)) {
      auto [mono, epi] = check_mono_epi(pc, t, x4, y2, pprobes);
      (void)mono;
      CHECK(epi);
    }
  }
}

TEST_CASE("monoidal coherence checker catches a fake associator") {
  auto structure = bool_cocartesian();
  std::vector<FinBool> pool = {fb({"g", "h"})};
  auto c = bool_instance(pool);

  SUBCASE("the honest structure passes") {
    auto report = check_monoidal_coherence(c, structure, std::span<const FinBool>(pool));
    CHECK(report.pass());
  }
  SUBCASE("a non-rebracketing bijection breaks the pentagon") {
    auto planted = structure;
    planted.associator = [structure](const FinBool& x, const FinBool& y, const FinBool& z) {
      // Keep the endpoints but swap the last two tuple slots whenever the
      // three factors coincide (they do on this pool).
      if (!(x == y && y == z)) return structure.associator(x, y, z);
      Coproduct xyz = coproduct(std::vector<FinBool>{x, y, z});
      std::vector<std::size_t> dual(xyz.algebra.atom_count());
      for (std::size_t cc = 0; cc < dual.size(); ++cc) {
        const std::string name = x.atom_name(xyz.injections[0].dual_map()[cc]) + "|" +
                                 y.atom_name(xyz.injections[2].dual_map()[cc]) + "|" +
                                 z.atom_name(xyz.injections[1].dual_map()[cc]);
        dual[cc] = xyz.algebra.index_of(name);
      }
      return BoolHom(xyz.algebra, xyz.algebra, std::move(dual));
    };
    auto report = check_monoidal_coherence(c, planted, std::span<const FinBool>(pool));
    CHECK_FALSE(report.pass());
    bool pentagon = false;
    for (const auto& v : report.violations)
      if (v.find("pentagon") != std::string::npos) pentagon = true;
    CHECK(pentagon);
  }
}

TEST_CASE("enumerated instances are closed categories") {
  auto bools = bool_instance(bool_pool(0, 2, true));
  CHECK(check_instance(bools).pass());
  auto stones = stone_instance(stone_pool(0, 2));
  CHECK(check_instance(stones).pass());
  std::vector<ProbAlgebra> objs = {point_algebra(), uniform({"a", "b"}),
                                   uniform({"p", "q"})};
  auto probs = prob_instance(objs);
  CHECK(check_instance(probs).pass());
}

TEST_CASE("reports are reproducible bit-exactly") {
  SuiteOptions opt{2, 5, 1};
  auto first = run_suite("monoidal", opt);
  auto second = run_suite("monoidal", opt);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].law == second[i].law);
    CHECK(first[i].checked == second[i].checked);
    CHECK(first[i].violations == second[i].violations);
  }
}

TEST_CASE("suites pass: disint and monoidal") {
  for (const auto& name : {"disint", "monoidal"})
    for (const auto& report : run_suite(name, SuiteOptions{3, 0, 2})) {
      INFO(report.law);
      CHECK(report.pass());
      CHECK(report.checked > 0);
    }
}
