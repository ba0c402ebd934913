#include <doctest.h>

#include <algorithm>

#include "maw/funcalg.hpp"
#include "maw/instances.hpp"
#include "maw/random_gen.hpp"
#include "support.hpp"

using namespace maw;
using test::pa;
using test::real_elem;
using test::rq;
using test::uniform;

TEST_CASE("trace is linear, unital and faithful") {
  FuncAlg a = linfty(pa({"a", "b"}, {"1/3", "2/3"}));
  CHECK(integrate(a, a.one()) == GaussRat(Rat(1)));
  CHECK(integrate(a, a.indicator(a.base().algebra().atom_element(0))) ==
        GaussRat(rq("1/3")));
  CHECK(integrate(linfty(uniform({"a", "b"})), real_elem({"2", "4"})) == GaussRat(Rat(3)));

  SUBCASE("faithfulness on random vectors") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      FuncElem f = random_gauss_elem(rng, 2);
      Rat norm2 = integrate(a, mul(f, conj(f))).re;
      CHECK(norm2 >= 0);
      bool zero = std::all_of(f.begin(), f.end(), [](const GaussRat& z) { return z.is_zero(); });
      CHECK((norm2 == 0) == zero);
    }
  }
}

TEST_CASE("projections are exactly the 0/1 vectors") {
  FuncAlg a = linfty(pa({"a", "b", "c"}, {"1/2", "1/3", "1/6"}));
  auto projections = all_projections(a);
  CHECK(projections.size() == 8);
  for (const auto& p : projections) {
    CHECK(is_projection(a, p));
    CHECK(mul(p, p) == p);
    CHECK(conj(p) == p);
  }
  SUBCASE("algebraic characterization, random probes") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
      FuncElem f = random_gauss_elem(rng, 3);
      CHECK(is_projection(a, f) == (mul(f, f) == f && conj(f) == f));
    }
  }
  SUBCASE("sup-norm splitting identity on squared magnitudes") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      FuncElem f = random_gauss_elem(rng, 3);
      for (const auto& p : projections) {
        FuncElem fp = mul(f, p);
        FuncElem fq = mul(f, sub(a.one(), p));
        CHECK(sup_norm_sq(f) == std::max(sup_norm_sq(fp), sup_norm_sq(fq)));
      }
    }
  }
}

TEST_CASE("Koopman operators") {
  ProbAlgebra x = uniform({"a", "b", "c", "d"});
  ProbAlgebra y = uniform({"u", "v"});
  ProbMorphism t(x, y, {0, 0, 1, 1});

  SUBCASE("identity gives the identity operator") {
    FuncElem f = real_elem({"1", "2", "3", "4"});
    CHECK(koopman_apply(ProbMorphism::identity(x), f) == f);
  }
  SUBCASE("two-to-one duplicates coordinates and preserves the trace") {
    FuncElem g = real_elem({"5", "7"});
    FuncElem pulled = koopman_apply(t, g);
    CHECK(pulled == real_elem({"5", "5", "7", "7"}));
    CHECK(integrate(linfty(x), pulled) == integrate(linfty(y), g));
  }
  SUBCASE("unital, *-preserving, multiplicative") {
    FuncAlg ly = linfty(y);
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
      FuncElem g = random_gauss_elem(rng, 2), h = random_gauss_elem(rng, 2);
      CHECK(koopman_apply(t, mul(g, h)) == mul(koopman_apply(t, g), koopman_apply(t, h)));
      CHECK(koopman_apply(t, conj(g)) == conj(koopman_apply(t, g)));
    }
    CHECK(koopman_apply(t, ly.one()) == linfty(x).one());
  }
}

TEST_CASE("Idem recovers the probability algebra, objects and morphisms") {
  ProbAlgebra x = pa({"a", "b"}, {"1/4", "3/4"});
  CHECK(idem(linfty(x)) == x);
  CHECK(idem(linfty(pa({"only"}, {"1"}))) == pa({"only"}, {"1"}));

  ProbAlgebra y = uniform({"u", "v"});
  ProbAlgebra x4 = uniform({"a", "b", "c", "d"});
  for (const auto& t : all_prob_morphisms(x4, y)) {
    ProbMorphism back = idem_of_operator(
        linfty(y), linfty(x4), [&](const FuncElem& g) { return koopman_apply(t, g); });
    CHECK(back == t);
  }
  SUBCASE("operators that break the projection lattice are rejected") {
    auto bad = [&](const FuncElem&) { return real_elem({"1/2", "0"}); };
    CHECK_THROWS_WITH_AS(idem_of_operator(linfty(y), linfty(y), bad),
                         doctest::Contains("NotAHomomorphism"), DomainError);
  }
}

TEST_CASE("conditional expectation") {
  SUBCASE("onto the trivial factor it is the mean") {
    ProbAlgebra x = uniform({"a", "b"});
    ProbMorphism to_point(x, point_algebra(), {0, 0});
    CHECK(cond_exp(to_point, real_elem({"2", "4"})) == real_elem({"3"}));
  }
  SUBCASE("fixes functions pulled back from the factor") {
    ProbAlgebra x = uniform({"a", "b", "c", "d"});
    ProbAlgebra y = uniform({"u", "v"});
    ProbMorphism t(x, y, {0, 0, 1, 1});
    FuncElem g = real_elem({"3", "-5"});
    CHECK(cond_exp(t, koopman_apply(t, g)) == g);
  }
  SUBCASE("fiber-weighted averages, with the projection identity as oracle") {
    ProbAlgebra x = pa({"a", "b", "c"}, {"1/6", "1/3", "1/2"});
    ProbAlgebra y = pa({"y1", "y2"}, {"1/2", "1/2"});
    ProbMorphism t(x, y, {0, 0, 1});
    FuncElem f = real_elem({"1", "4", "7"});
    FuncElem e = cond_exp(t, f);
    CHECK(e == real_elem({"3", "7"}));
    // integral of f (g o pi) = integral of E(f|Y) g on the indicator basis.
    FuncAlg lx = linfty(x), ly = linfty(y);
    for (std::size_t b = 0; b < y.atom_count(); ++b) {
      FuncElem g = ly.indicator(y.algebra().atom_element(b));
      CHECK(integrate(lx, mul(f, koopman_apply(t, g))) == integrate(ly, mul(e, g)));
    }
  }
  SUBCASE("contractive on real elements") {
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
      ProbAlgebra y = random_prob_algebra(rng, 2, "y");
      ProbMorphism t = random_fibered_morphism(rng, y, 3);
      FuncElem f = random_real_elem(rng, t.source().atom_count());
      CHECK(sup_norm_sq(cond_exp(t, f)) <= sup_norm_sq(f));
    }
  }
  SUBCASE("tower property") {
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
      ProbAlgebra z = random_prob_algebra(rng, 2, "z");
      ProbMorphism pi2 = random_fibered_morphism(rng, z, 2, "y");
      ProbMorphism pi1 = random_fibered_morphism(rng, pi2.source(), 2, "w");
      FuncElem f = random_gauss_elem(rng, pi1.source().atom_count());
      CHECK(cond_exp(pi2, cond_exp(pi1, f)) == cond_exp(compose(pi2, pi1), f));
    }
  }
}

TEST_CASE("abstract L^p quantities") {
  SUBCASE("level-set and direct evaluations agree on the examples") {
    CHECK(lp_norm(linfty(uniform({"a", "b"})), real_elem({"1", "-1"}), LpExponent::One) == 1);
    FuncAlg single = linfty(pa({"a"}, {"1"}));
    CHECK(lp_norm(single, real_elem({"3"}), LpExponent::One) == 3);
    CHECK(lp_norm(single, real_elem({"3"}), LpExponent::Two) == 9);
    CHECK(lp_norm(single, real_elem({"3"}), LpExponent::Infinity) == 9);
    FuncAlg a = linfty(pa({"a", "b", "c"}, {"1/2", "1/3", "1/6"}));
    CHECK(lp_norm(a, real_elem({"1", "2", "3"}), LpExponent::One) == rq("5/3"));
  }
  SUBCASE("complex entries work for p = 2 and p = inf") {
    FuncAlg a = linfty(uniform({"a", "b"}));
    FuncElem f = {GaussRat(rq("1"), rq("1")), GaussRat(rq("0"), rq("2"))};
    CHECK(lp_norm(a, f, LpExponent::Two) == rq("3"));  // (2 + 4) / 2
    CHECK(lp_norm(a, f, LpExponent::Infinity) == rq("4"));
  }
  SUBCASE("p = 1 requires real entries") {
    FuncAlg a = linfty(uniform({"a", "b"}));
    FuncElem f = {GaussRat(rq("1"), rq("1")), GaussRat(rq("0"), rq("0"))};
    CHECK_THROWS_WITH_AS(lp_norm(a, f, LpExponent::One),
                         doctest::Contains("RealValuedRequired"), DomainError);
  }
  SUBCASE("the two L1 routes agree on random vectors") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
      ProbAlgebra x = random_prob_algebra(rng, 4);
      FuncElem f = random_real_elem(rng, 4);
      // lp_norm computes both routes and asserts them equal internally; the
      // direct sum recomputed here keeps an oracle outside the library.
      Rat direct = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        Rat a = f[k].re < 0 ? Rat(-f[k].re) : f[k].re;
        direct += a * x.mass(k);
      }
      CHECK(lp_norm(linfty(x), f, LpExponent::One) == direct);
    }
  }
}

TEST_CASE("finite Riesz representation") {
  SUBCASE("values on indicators are the measure") {
    FiniteState s{{"p", "q"}, {rq("1/3"), rq("2/3")}};
    CHECK(riesz_finite(s) == std::vector<Rat>{rq("1/3"), rq("2/3")});
  }
  SUBCASE("point mass gives a Dirac measure") {
    FiniteState s{{"p", "q"}, {rq("1"), rq("0")}};
    CHECK(riesz_finite(s) == std::vector<Rat>{rq("1"), rq("0")});
  }
  SUBCASE("uniqueness: the measure reproduces the state on simple functions") {
    FiniteState s{{"k1", "k2", "k3", "k4", "k5"}, std::vector<Rat>(5, rq("1/5"))};
    auto mu = riesz_finite(s);
    Rng rng(18);
    for (int i = 0; i < 10; ++i) {
      auto coeffs = random_rationals(rng, 5);
      Rat by_state = 0, by_measure = 0;
      for (std::size_t k = 0; k < 5; ++k) {
        by_state += coeffs[k] * s.values[k];
        by_measure += coeffs[k] * mu[k];
      }
      CHECK(by_state == by_measure);
    }
  }
  SUBCASE("non-states are rejected") {
    CHECK_THROWS_WITH_AS(riesz_finite(FiniteState{{"p"}, {rq("2")}}),
                         doctest::Contains("NotAState"), DomainError);
    CHECK_THROWS_WITH_AS(riesz_finite(FiniteState{{"p", "q"}, {rq("-1/2"), rq("3/2")}}),
                         doctest::Contains("NotAState"), DomainError);
  }
}
