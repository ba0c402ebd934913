#include "maw/instances.hpp"

#include <string>

namespace maw {

namespace {

/// Enumerates all functions {0..domain-1} -> {0..range-1}.
std::vector<std::vector<std::size_t>> all_functions(std::size_t domain, std::size_t range) {
  std::vector<std::vector<std::size_t>> out;
  if (domain == 0) {
    out.push_back({});
    return out;
  }
  if (range == 0) return out;
  std::vector<std::size_t> f(domain, 0);
  while (true) {
    out.push_back(f);
    std::size_t k = 0;
    for (; k < domain; ++k) {
      if (++f[k] < range) break;
      f[k] = 0;
    }
    if (k == domain) break;
  }
  return out;
}

std::string label_of(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

std::vector<BoolHom> all_bool_homs(const FinBool& b, const FinBool& c) {
  std::vector<BoolHom> out;
  for (auto& dual : all_functions(c.atom_count(), b.atom_count()))
    out.emplace_back(b, c, std::move(dual));
  return out;
}

std::vector<PointMap> all_point_maps(const StoneSpace& s, const StoneSpace& t) {
  std::vector<PointMap> out;
  for (auto& m : all_functions(s.point_count(), t.point_count()))
    out.emplace_back(s, t, std::move(m));
  return out;
}

std::vector<ProbMorphism> all_prob_morphisms(const ProbAlgebra& x, const ProbAlgebra& y) {
  std::vector<ProbMorphism> out;
  for (auto& m : all_functions(x.atom_count(), y.atom_count())) {
    std::vector<Rat> pushed(y.atom_count(), Rat(0));
    for (std::size_t a = 0; a < m.size(); ++a) pushed[m[a]] += x.mass(a);
    if (pushed == y.masses()) out.emplace_back(x, y, std::move(m));
  }
  return out;
}

CategoryInstance<FinBool, BoolHom> bool_instance(std::vector<FinBool> objects) {
  CategoryInstance<FinBool, BoolHom> c;
  c.name = "Bool";
  c.objects = std::move(objects);
  c.homs = [](const FinBool& b, const FinBool& d) { return all_bool_homs(b, d); };
  c.identity = [](const FinBool& b) { return BoolHom::identity(b); };
  c.compose = [](const BoolHom& later, const BoolHom& earlier) {
    return compose(later, earlier);
  };
  c.mor_equal = [](const BoolHom& a, const BoolHom& b) { return a == b; };
  c.obj_label = [](const FinBool& b) { return label_of(b.atoms()); };
  return c;
}

CategoryInstance<StoneSpace, PointMap> stone_instance(std::vector<StoneSpace> objects) {
  CategoryInstance<StoneSpace, PointMap> c;
  c.name = "Stone";
  c.objects = std::move(objects);
  c.homs = [](const StoneSpace& s, const StoneSpace& t) { return all_point_maps(s, t); };
  c.identity = [](const StoneSpace& s) { return PointMap::identity(s); };
  c.compose = [](const PointMap& later, const PointMap& earlier) {
    return compose(later, earlier);
  };
  c.mor_equal = [](const PointMap& a, const PointMap& b) { return a == b; };
  c.obj_label = [](const StoneSpace& s) { return label_of(s.points()); };
  return c;
}

CategoryInstance<ProbAlgebra, ProbMorphism> prob_instance(std::vector<ProbAlgebra> objects) {
  CategoryInstance<ProbAlgebra, ProbMorphism> c;
  c.name = "ProbAlg";
  c.objects = std::move(objects);
  c.homs = [](const ProbAlgebra& x, const ProbAlgebra& y) { return all_prob_morphisms(x, y); };
  c.identity = [](const ProbAlgebra& x) { return ProbMorphism::identity(x); };
  c.compose = [](const ProbMorphism& later, const ProbMorphism& earlier) {
    return compose(later, earlier);
  };
  c.mor_equal = [](const ProbMorphism& a, const ProbMorphism& b) { return a == b; };
  c.obj_label = [](const ProbAlgebra& x) { return label_of(x.atoms()); };
  return c;
}

MonoidalStructure<FinBool, BoolHom> bool_cocartesian() {
  MonoidalStructure<FinBool, BoolHom> m;
  m.unit = FinBool({"u"});
  m.tensor_obj = [](const FinBool& a, const FinBool& b) {
    return coproduct(std::vector<FinBool>{a, b}).algebra;
  };
  m.tensor_mor = [](const BoolHom& f, const BoolHom& g) {
    Coproduct src = coproduct(std::vector<FinBool>{f.source(), g.source()});
    Coproduct tgt = coproduct(std::vector<FinBool>{f.target(), g.target()});
    std::vector<std::size_t> dual(tgt.algebra.atom_count());
    for (std::size_t c = 0; c < dual.size(); ++c) {
      const std::size_t c1 = tgt.injections[0].dual_map()[c];
      const std::size_t c2 = tgt.injections[1].dual_map()[c];
      const std::size_t a1 = f.dual_map()[c1];
      const std::size_t a2 = g.dual_map()[c2];
      // Atom of the source product with coordinates (a1, a2).
      const std::string name =
          f.source().atom_name(a1) + "|" + g.source().atom_name(a2);
      dual[c] = src.algebra.index_of(name);
    }
    return BoolHom(src.algebra, tgt.algebra, std::move(dual));
  };
  m.associator = [m](const FinBool& x, const FinBool& y, const FinBool& z) {
    // Tuple names flatten, so both bracketings are the same canonical
    // algebra and the component is the identity.
    FinBool lhs = coproduct(std::vector<FinBool>{
                                coproduct(std::vector<FinBool>{x, y}).algebra, z})
                      .algebra;
    return BoolHom::identity(lhs);
  };
  m.left_unitor = [m](const FinBool& x) {
    // I|X -> X, dually the renaming x -> "u|x".
    FinBool ix = coproduct(std::vector<FinBool>{m.unit, x}).algebra;
    std::vector<std::size_t> dual(x.atom_count());
    for (std::size_t c = 0; c < x.atom_count(); ++c)
      dual[c] = ix.index_of("u|" + x.atom_name(c));
    return BoolHom(ix, x, std::move(dual));
  };
  m.right_unitor = [m](const FinBool& x) {
    FinBool xi = coproduct(std::vector<FinBool>{x, m.unit}).algebra;
    std::vector<std::size_t> dual(x.atom_count());
    for (std::size_t c = 0; c < x.atom_count(); ++c)
      dual[c] = xi.index_of(x.atom_name(c) + "|u");
    return BoolHom(xi, x, std::move(dual));
  };
  m.braiding = [](const FinBool& x, const FinBool& y) {
    Coproduct xy = coproduct(std::vector<FinBool>{x, y});
    Coproduct yx = coproduct(std::vector<FinBool>{y, x});
    std::vector<std::size_t> dual(yx.algebra.atom_count());
    for (std::size_t c = 0; c < dual.size(); ++c) {
      const std::string name = x.atom_name(yx.injections[1].dual_map()[c]) + "|" +
                               y.atom_name(yx.injections[0].dual_map()[c]);
      dual[c] = xy.algebra.index_of(name);
    }
    return BoolHom(xy.algebra, yx.algebra, std::move(dual));
  };
  m.incl1 = [](const FinBool& x, const FinBool& y) {
    return coproduct(std::vector<FinBool>{x, y}).injections[0];
  };
  m.incl2 = [](const FinBool& x, const FinBool& y) {
    return coproduct(std::vector<FinBool>{x, y}).injections[1];
  };
  return m;
}

MonoidalStructure<ProbAlgebra, ProbMorphism> prob_semicartesian() {
  MonoidalStructure<ProbAlgebra, ProbMorphism> m{.unit = point_algebra()};
  m.tensor_obj = [](const ProbAlgebra& a, const ProbAlgebra& b) {
    return tensor(std::vector<ProbAlgebra>{a, b}).product;
  };
  m.tensor_mor = [](const ProbMorphism& f, const ProbMorphism& g) {
    Tensor src = tensor(std::vector<ProbAlgebra>{f.source(), g.source()});
    Tensor tgt = tensor(std::vector<ProbAlgebra>{f.target(), g.target()});
    std::vector<std::size_t> map(src.product.atom_count());
    for (std::size_t i = 0; i < map.size(); ++i) {
      const std::size_t b1 = f.apply(src.marginals[0].apply(i));
      const std::size_t b2 = g.apply(src.marginals[1].apply(i));
      const std::string name =
          f.target().algebra().atom_name(b1) + "|" + g.target().algebra().atom_name(b2);
      map[i] = tgt.product.algebra().index_of(name);
    }
    return ProbMorphism(src.product, tgt.product, std::move(map));
  };
  m.associator = [m](const ProbAlgebra& x, const ProbAlgebra& y, const ProbAlgebra& z) {
    ProbAlgebra lhs =
        tensor(std::vector<ProbAlgebra>{m.tensor_obj(x, y), z}).product;
    return ProbMorphism::identity(lhs);
  };
  m.left_unitor = [m](const ProbAlgebra& x) {
    Tensor ix = tensor(std::vector<ProbAlgebra>{m.unit, x});
    return ix.marginals[1];
  };
  m.right_unitor = [m](const ProbAlgebra& x) {
    Tensor xi = tensor(std::vector<ProbAlgebra>{x, m.unit});
    return xi.marginals[0];
  };
  m.braiding = [](const ProbAlgebra& x, const ProbAlgebra& y) {
    Tensor xy = tensor(std::vector<ProbAlgebra>{x, y});
    Tensor yx = tensor(std::vector<ProbAlgebra>{y, x});
    std::vector<std::size_t> map(xy.product.atom_count());
    for (std::size_t i = 0; i < map.size(); ++i) {
      const std::string name = y.algebra().atom_name(xy.marginals[1].apply(i)) + "|" +
                               x.algebra().atom_name(xy.marginals[0].apply(i));
      map[i] = yx.product.algebra().index_of(name);
    }
    return ProbMorphism(xy.product, yx.product, std::move(map));
  };
  m.proj1 = [](const ProbAlgebra& x, const ProbAlgebra& y) {
    return tensor(std::vector<ProbAlgebra>{x, y}).marginals[0];
  };
  m.proj2 = [](const ProbAlgebra& x, const ProbAlgebra& y) {
    return tensor(std::vector<ProbAlgebra>{x, y}).marginals[1];
  };
  return m;
}

std::vector<FinBool> bool_pool(std::size_t min_atoms, std::size_t max_atoms,
                               bool name_variants) {
  std::vector<FinBool> pool;
  static const std::vector<std::string> primary = {"a", "b", "c", "d", "e", "f"};
  static const std::vector<std::string> variant = {"p", "q", "r", "s", "t", "v"};
  for (std::size_t n = min_atoms; n <= max_atoms; ++n) {
    pool.emplace_back(std::vector<std::string>(primary.begin(), primary.begin() + n));
    if (name_variants && n >= 1)
      pool.emplace_back(std::vector<std::string>(variant.begin(), variant.begin() + n));
  }
  return pool;
}

std::vector<StoneSpace> stone_pool(std::size_t min_points, std::size_t max_points) {
  std::vector<StoneSpace> pool;
  for (const auto& b : bool_pool(min_points, max_points)) pool.push_back(stone(b));
  return pool;
}

}  // namespace maw
