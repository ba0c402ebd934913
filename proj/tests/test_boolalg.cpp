#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "maw/boolalg.hpp"
#include "maw/instances.hpp"
#include "support.hpp"

using namespace maw;
using test::fb;

namespace {

// Independent refinement oracle: points fall in the same block iff no
// generator separates them.
std::map<std::string, std::vector<std::string>> refine_oracle(
    const std::vector<std::string>& universe,
    const std::vector<std::vector<std::string>>& generators) {
  std::map<std::string, std::vector<std::string>> blocks;
  for (const auto& p : universe) {
    std::string signature;
    for (const auto& g : generators)
      signature += std::count(g.begin(), g.end(), p) ? '1' : '0';
    blocks[signature].push_back(p);
  }
  std::map<std::string, std::vector<std::string>> named;
  for (auto& [sig, pts] : blocks) {
    std::sort(pts.begin(), pts.end());
    named[pts.front()] = pts;
  }
  return named;
}

}  // namespace

TEST_CASE("from_generators computes the common refinement") {
  SUBCASE("complement closure") {
    auto g = from_generators({"1", "2", "3", "4"}, {{"1", "2"}, {"3"}});
    CHECK(g.algebra.atoms() == std::vector<std::string>{"1", "3", "4"});
    CHECK(g.block_of.at("1") == "1");
    CHECK(g.block_of.at("2") == "1");
    CHECK(g.block_of.at("3") == "3");
    CHECK(g.block_of.at("4") == "4");
  }
  SUBCASE("overlapping generators split everything") {
    auto g = from_generators({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(g.algebra.atoms() == std::vector<std::string>{"1", "2", "3"});
  }
  SUBCASE("no generators, one block") {
    auto g = from_generators({"1"}, {});
    CHECK(g.algebra.atom_count() == 1);
    CHECK(g.block_of.at("1") == "1");
  }
  SUBCASE("agrees with the brute-force oracle") {
    std::vector<std::string> universe = {"p", "q", "r", "s", "t"};
    std::vector<std::vector<std::string>> gens = {{"p", "q", "r"}, {"q", "s"}, {"t", "q"}};
    auto expected = refine_oracle(universe, gens);
    auto got = from_generators(universe, gens);
    CHECK(got.algebra.atom_count() == expected.size());
    for (const auto& [name, members] : expected)
      for (const auto& m : members) CHECK(got.block_of.at(m) == name);
  }
  SUBCASE("point outside the universe") {
    CHECK_THROWS_WITH_AS(from_generators({"1"}, {{"2"}}), doctest::Contains("InvalidGenerator"),
                         DomainError);
  }
}

TEST_CASE("element operations satisfy Boolean laws") {
  FinBool b = fb({"a", "b", "c"});
  auto elements = b.all_elements();
  for (const auto& e : elements)
    for (const auto& f : elements) {
      CHECK((e & f) == (f & e));
      CHECK((e | f) == (f | e));
      CHECK((~(e & f)) == (~e | ~f));
      CHECK((e & (e | f)) == e);
      for (const auto& g : elements)
        CHECK((e & (f | g)) == ((e & f) | (e & g)));
    }
  CHECK(~b.zero() == b.one());
}

TEST_CASE("validate_hom extends an atom-image map") {
  FinBool s = fb({"a", "b"});
  FinBool t = fb({"x", "y", "z"});

  SUBCASE("identity") {
    std::vector<Bitset> images;
    for (std::size_t i = 0; i < s.atom_count(); ++i) images.push_back(s.atom_element(i));
    CHECK(validate_hom(s, s, images) == BoolHom::identity(s));
  }
  SUBCASE("partition map and its dual") {
    std::vector<Bitset> images = {t.element(std::vector<std::string>{"x", "y"}),
                                  t.element(std::vector<std::string>{"z"})};
    BoolHom h = validate_hom(s, t, images);
    CHECK(h.dual_map() == std::vector<std::size_t>{0, 0, 1});
    // The element map preserves all Boolean structure (checked exhaustively).
    auto es = s.all_elements();
    for (const auto& e : es)
      for (const auto& f : es) {
        CHECK(h.apply(e & f) == (h.apply(e) & h.apply(f)));
        CHECK(h.apply(e | f) == (h.apply(e) | h.apply(f)));
        CHECK(h.apply(~e) == ~h.apply(e));
      }
    CHECK(h.apply(s.zero()) == t.zero());
    CHECK(h.apply(s.one()) == t.one());
  }
  SUBCASE("overlapping images rejected") {
    std::vector<Bitset> images = {t.element(std::vector<std::string>{"x"}), t.one()};
    CHECK_THROWS_WITH_AS(validate_hom(s, t, images), doctest::Contains("NotAHomomorphism"),
                         DomainError);
  }
  SUBCASE("uncovered unit rejected") {
    std::vector<Bitset> images = {t.element(std::vector<std::string>{"x"}),
                                  t.element(std::vector<std::string>{"y"})};
    CHECK_THROWS_WITH_AS(validate_hom(s, t, images), doctest::Contains("NotAHomomorphism"),
                         DomainError);
  }
}

TEST_CASE("composition laws") {
  FinBool b2 = fb({"a", "b"});
  FinBool b3 = fb({"x", "y", "z"});

  SUBCASE("identity absorbs") {
    for (const auto& f : all_bool_homs(b2, b3)) {
      CHECK(compose(f, BoolHom::identity(b2)) == f);
      CHECK(compose(BoolHom::identity(b3), f) == f);
    }
  }
  SUBCASE("constants absorb") {
    BoolHom c1(b2, b3, {0, 0, 0});
    BoolHom c2(b3, b2, {1, 1});
    BoolHom c = compose(c2, c1);  // wait: c1 : b2 -> b3, c2 : b3 -> b2
    CHECK(c.source() == b2);
    CHECK(c.target() == b2);
    CHECK(c.dual_map() == std::vector<std::size_t>{0, 0});
  }
  SUBCASE("element map of a composite is the composition") {
    for (const auto& f : all_bool_homs(b2, b3))
      for (const auto& g : all_bool_homs(b3, b2)) {
        BoolHom gf = compose(g, f);
        for (const auto& e : b2.all_elements()) CHECK(gf.apply(e) == g.apply(f.apply(e)));
      }
  }
  SUBCASE("mismatched endpoints") {
    BoolHom f = BoolHom::identity(b2);
    BoolHom g = BoolHom::identity(b3);
    CHECK_THROWS_WITH_AS(compose(g, f), doctest::Contains("CompositionMismatch"), DomainError);
  }
}

TEST_CASE("mono/epi structural predicates") {
  SUBCASE("identity is mono and epi") {
    BoolHom id = BoolHom::identity(fb({"a", "b", "c"}));
    CHECK(is_mono(id));
    CHECK(is_epi(id));
  }
  SUBCASE("constant dual map is neither") {
    FinBool s = fb({"a", "b"});
    FinBool t = fb({"w", "x", "y", "z"});
    BoolHom phi(s, t, {0, 0, 0, 0});
    CHECK_FALSE(is_mono(phi));  // Phi({b}) = 0 = Phi(0)
    CHECK(phi.apply(s.atom_element(1)).none());
    CHECK_FALSE(is_epi(phi));
  }
  SUBCASE("bijective dual map gives an isomorphism with two-sided inverse") {
    FinBool s = fb({"a", "b", "c"});
    BoolHom phi(s, fb({"x", "y", "z"}), {2, 0, 1});
    CHECK(is_mono(phi));
    CHECK(is_epi(phi));
    CHECK(is_isomorphism(phi));
    BoolHom inv = inverse(phi);
    CHECK(compose(inv, phi) == BoolHom::identity(s));
    CHECK(compose(phi, inv) == BoolHom::identity(phi.target()));
  }
  SUBCASE("structural predicates match element-map injectivity/surjectivity") {
    FinBool b2 = fb({"a", "b"});
    FinBool b3 = fb({"x", "y", "z"});
    for (const auto& f : all_bool_homs(b2, b3)) {
      std::set<Bitset> image;
      std::set<Bitset> domain_images;
      bool injective = true;
      for (const auto& e : b2.all_elements()) {
        Bitset fe = f.apply(e);
        if (!domain_images.insert(fe).second) injective = false;
        image.insert(fe);
      }
      CHECK(is_mono(f) == injective);
      CHECK(is_epi(f) == (image.size() == (std::size_t{1} << b3.atom_count())));
    }
  }
}

TEST_CASE("coproduct") {
  FinBool b2 = fb({"a", "b"});
  FinBool b3 = fb({"x", "y", "z"});

  SUBCASE("2 x 3 atoms gives 6 disjoint rectangles") {
    Coproduct cp = coproduct(std::vector<FinBool>{b2, b3});
    CHECK(cp.algebra.atom_count() == 6);
    CHECK(cp.algebra.atoms() ==
          std::vector<std::string>{"a|x", "a|y", "a|z", "b|x", "b|y", "b|z"});
    // Rectangle check: injected elements meet as rectangles should.
    Bitset ea = cp.injections[0].apply(b2.atom_element(0));
    Bitset ey = cp.injections[1].apply(b3.atom_element(1));
    Bitset rect = ea & ey;
    CHECK(rect.count() == 1);
    CHECK(cp.algebra.element_names(rect) == std::vector<std::string>{"a|y"});
  }
  SUBCASE("unit factor is a unitor") {
    Coproduct cp = coproduct(std::vector<FinBool>{b2, fb({"u"})});
    CHECK(cp.algebra.atom_count() == b2.atom_count());
    CHECK(find_isomorphism(b2, cp.algebra).has_value());
  }
  SUBCASE("injections are mono for non-degenerate factors") {
    Coproduct cp = coproduct(std::vector<FinBool>{b2, b3});
    for (const auto& inj : cp.injections) CHECK(is_mono(inj));
  }
  SUBCASE("degenerate factor collapses the coproduct, flagged") {
    Coproduct cp = coproduct(std::vector<FinBool>{b2, FinBool{}});
    CHECK(cp.algebra.degenerate());
    CHECK(cp.injections.size() == 2);
  }
}

TEST_CASE("quotient by a null ideal") {
  FinBool b = fb({"a", "b", "c"});

  SUBCASE("empty ideal is the identity") {
    Quotient q = quotient(b, BoolIdeal(b, b.zero()));
    CHECK(q.algebra == b);
    CHECK(q.map == BoolHom::identity(b));
  }
  SUBCASE("dropping one atom") {
    Bitset nulls(3);
    nulls.set(b.index_of("c"));
    Quotient q = quotient(b, BoolIdeal(b, nulls));
    CHECK(q.algebra.atoms() == std::vector<std::string>{"a", "b"});
    CHECK(is_epi(q.map));
    SUBCASE("kernel is exactly the ideal") {
      for (const auto& e : b.all_elements())
        CHECK((q.map.apply(e).none()) == e.is_subset_of(nulls));
    }
    SUBCASE("any section splits the quotient") {
      // Section dual: quotient atoms map to themselves inside b.
      for (const auto& e : q.algebra.all_elements()) {
        Bitset lifted(b.atom_count());
        for (std::size_t i = 0; i < q.algebra.atom_count(); ++i)
          if (e.test(i)) lifted.set(b.index_of(q.algebra.atom_name(i)));
        CHECK(q.map.apply(lifted) == e);
      }
    }
  }
  SUBCASE("all atoms null gives the degenerate algebra") {
    Quotient q = quotient(b, BoolIdeal(b, b.one()));
    CHECK(q.algebra.degenerate());
  }
}

TEST_CASE("null ideals are downward closed and join closed") {
  FinBool b = fb({"a", "b", "c", "d"});
  Bitset nulls(4);
  nulls.set(b.index_of("b"));
  nulls.set(b.index_of("d"));
  BoolIdeal ideal(b, nulls);
  auto elements = b.all_elements();
  for (const auto& e : elements) {
    if (!ideal.contains(e)) continue;
    for (const auto& f : elements) {
      if (f.is_subset_of(e)) CHECK(ideal.contains(f));
      if (ideal.contains(f)) CHECK(ideal.contains(e | f));
    }
  }
  CHECK(ideal.contains(b.zero()));
  CHECK_FALSE(ideal.contains(b.one()));
}

TEST_CASE("identifier guards") {
  CHECK_THROWS_WITH_AS(fb({"a|b"}), doctest::Contains("InvalidAtomName"), DomainError);
  CHECK_THROWS_WITH_AS(fb({"a&b"}), doctest::Contains("InvalidAtomName"), DomainError);
  CHECK_THROWS_WITH_AS(fb({""}), doctest::Contains("InvalidAtomName"), DomainError);
  CHECK_THROWS_WITH_AS(fb({"a", "a"}), doctest::Contains("InvalidAtomName"), DomainError);
  CHECK_NOTHROW(FinBool::with_tuple_atoms({"a|b", "a|c"}));
}

TEST_CASE("generated subalgebra by partition refinement") {
  FinBool b = fb({"a", "b", "c", "d"});
  SUBCASE("no generators give {0, 1}") {
    CHECK(generated_subalgebra(b, {}).size() == 2);
  }
  SUBCASE("atoms generate everything") {
    std::vector<Bitset> gens;
    for (std::size_t i = 0; i < b.atom_count(); ++i) gens.push_back(b.atom_element(i));
    CHECK(generated_subalgebra(b, gens).size() == 16);
  }
  SUBCASE("one proper element generates a 4-element subalgebra") {
    std::vector<Bitset> gens = {b.element(std::vector<std::string>{"a", "b"})};
    auto sub = generated_subalgebra(b, gens);
    CHECK(sub.size() == 4);
    // Closed under complement and join.
    for (const auto& e : sub) {
      CHECK(std::count(sub.begin(), sub.end(), ~e) == 1);
      for (const auto& f : sub) CHECK(std::count(sub.begin(), sub.end(), e | f) == 1);
    }
  }
}
