#include <doctest.h>

#include "maw/random_gen.hpp"
#include "maw/serialize.hpp"
#include "support.hpp"

using namespace maw;
using test::fb;
using test::pa;
using test::rq;
using test::uniform;

TEST_CASE("rational literals") {
  CHECK(rat_to_string(rq("2/4")) == "1/2");
  CHECK(rat_to_string(rq("3/1")) == "3");
  CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
  CHECK(rq("6/8") == rq("3/4"));
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("canonical serialization round trips") {
  SUBCASE("algebras") {
    FinBool b = fb({"a", "b", "c"});
    CHECK(parse_algebra(serialize_algebra(b)) == b);
    FinBool t = FinBool::with_tuple_atoms({"a|x", "a|y", "b|x", "b|y"});
    CHECK(parse_algebra(serialize_algebra(t)) == t);
  }
  SUBCASE("homs") {
    BoolHom h(fb({"a", "b"}), fb({"x", "y", "z"}), {0, 0, 1});
    CHECK(parse_hom(serialize_hom(h)) == h);
  }
  SUBCASE("stone and delete spaces") {
    StoneSpace s({"p", "q"});
    CHECK(parse_stone_space(serialize_stone_space(s)) == s);
    Bitset nulls(2);
    nulls.set(0);
    DeleteSpace d(s, nulls);
    CHECK(parse_delete_space(serialize_delete_space(d)) == d);
  }
  SUBCASE("probability algebras and morphisms") {
    ProbAlgebra x = pa({"a", "b", "c"}, {"1/2", "1/3", "1/6"});
    CHECK(parse_prob_algebra(serialize_prob_algebra(x)) == x);
    ProbMorphism t(x, pa({"u"}, {"1"}), {0, 0, 0});
    CHECK(parse_morphism(serialize_morphism(t)) == t);
  }
  SUBCASE("measured algebras keep zero masses") {
    MeasuredBool m(fb({"a", "b"}), {rq("1"), rq("0")});
    CHECK(parse_measured(serialize_measured(m)) == m);
  }
  SUBCASE("function elements") {
    FuncAlg a = linfty(pa({"a", "b"}, {"1/3", "2/3"}));
    FuncElem f = {GaussRat(rq("1/2"), rq("-1")), GaussRat(rq("0"), rq("7/3"))};
    CHECK(parse_elem(a, serialize_elem(a, f)) == f);
  }
  SUBCASE("states") {
    FiniteState s{{"p", "q"}, {rq("1/3"), rq("2/3")}};
    FiniteState back = parse_state(serialize_state(s));
    CHECK(back.points == s.points);
    CHECK(back.values == s.values);
  }
}

TEST_CASE("round-trip property on random instances") {
  Rng rng(51);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    ProbAlgebra x = random_prob_algebra(rng, size(rng));
    CHECK(parse_prob_algebra(serialize_prob_algebra(x)) == x);
    ProbMorphism t = random_fibered_morphism(rng, x, 3, "s");
    CHECK(parse_morphism(serialize_morphism(t)) == t);
    FuncAlg a = linfty(x);
    FuncElem f = random_gauss_elem(rng, x.atom_count());
    CHECK(parse_elem(a, serialize_elem(a, f)) == f);
  }
}

TEST_CASE("serialization is canonical") {
  // Atom names are sorted on construction; masses index the canonical order.
  ProbAlgebra x = pa({"b", "a"}, {"1/3", "2/3"});
  CHECK(x.atoms() == std::vector<std::string>{"a", "b"});
  std::string once = serialize_prob_algebra(x);
  std::string twice = serialize_prob_algebra(parse_prob_algebra(once));
  CHECK(once == twice);
  CHECK(once.find("\"a\": \"1/3\"") != std::string::npos);
  // Keys come out sorted.
  CHECK(once.find("\"atoms\"") < once.find("\"measure\""));
}

TEST_CASE("identifier guards in the text format") {
  CHECK_THROWS_AS(parse_algebra(R"({"atoms":["a|"]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"atoms":["|a"]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"atoms":["a||b"]})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"atoms":[""]})"), ParseError);
  CHECK_NOTHROW(parse_algebra(R"({"atoms":["a|b","c&d"]})"));
  CHECK_THROWS_AS(parse_algebra("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"atoms": 3})"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({})"), ParseError);
}

TEST_CASE("composite parsers for the CLI") {
  SUBCASE("family files") {
    ConsistentFamily iid = parse_family(
        R"({"constructor":"iid","factor":{"atoms":["h","t"],"measure":{"h":"1/2","t":"1/2"}}})");
    CHECK(iid.marginal({1, 2}) == std::vector<Rat>(4, rq("1/4")));
    ConsistentFamily markov = parse_family(R"({
      "constructor": "markov",
      "states": ["s0", "s1"],
      "initial": {"s0": "1", "s1": "0"},
      "transition": {"s0": {"s0": "1/2", "s1": "1/2"}, "s1": {"s0": "1", "s1": "0"}}
    })");
    CylinderMeasure mu(markov);
    CHECK(mu.query({1, 2, 3}, {{"s0", "s1", "s0"}}) == rq("1/2"));
    CHECK_THROWS_AS(parse_family(R"({"constructor":"nope"})"), ParseError);
  }
  SUBCASE("cylinder queries") {
    CylinderQuery q = parse_cylinder(R"({"F":[1,3],"E":[["h","h"],["t","t"]]})");
    CHECK(q.indices == std::vector<Index>{1, 3});
    CHECK(q.tuples.size() == 2);
  }
  SUBCASE("actions") {
    ActionSpec spec = parse_action(R"({
      "algebra": {"atoms":["a","b"],"measure":{"a":"1/2","b":"1/2"}},
      "generators": [{"map":{"a":"b","b":"a"}}]
    })");
    CHECK(spec.generators.size() == 1);
    CHECK(spec.generators[0].point_map() == std::vector<std::size_t>{1, 0});
  }
  SUBCASE("represent spec") {
    RepresentSpec spec = parse_represent(R"({
      "algebra": {"atoms":["a","b"],"measure":{"a":"1/2","b":"1/2"}},
      "points": ["k1","k2"],
      "hom": {"k1":["a"],"k2":["b"]}
    })");
    CHECK(spec.points.point_count() == 2);
    CHECK(spec.element_map[0].count() == 1);
  }
  SUBCASE("lp queries") {
    LpQuery q = parse_lpnorm(R"({
      "algebra": {"atoms":["a"],"measure":{"a":"1"}},
      "f": {"re":{"a":"3"},"im":{"a":"0"}},
      "p": "inf"
    })");
    CHECK(q.p == LpExponent::Infinity);
    CHECK_THROWS_AS(parse_lpnorm(R"({
      "algebra": {"atoms":["a"],"measure":{"a":"1"}},
      "f": {"re":{"a":"3"}},
      "p": "3"
    })"),
                    ParseError);
  }
}

TEST_CASE("kernel and report serialization shapes") {
  ProbAlgebra x = pa({"a", "b", "c"}, {"1/6", "1/3", "1/2"});
  ProbAlgebra y = pa({"y1", "y2"}, {"1/2", "1/2"});
  Kernel k = disintegrate(ProbMorphism(x, y, {0, 0, 1}));
  std::string text = serialize_kernel(k);
  CHECK(text.find("\"y1\"") != std::string::npos);
  CHECK(text.find("\"2/3\"") != std::string::npos);

  LawReport r{"demo", 3, {"bad thing"}};
  std::string reports = serialize_reports({r});
  CHECK(reports.find("\"law\": \"demo\"") != std::string::npos);
  CHECK(reports.find("\"bad thing\"") != std::string::npos);
}
