#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace maw {

/// Outcome of one law suite; empty violations means pass.  Reports are
/// deterministic given the instance and caps, reproducible bit-exactly.
struct LawReport {
  std::string law;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
  void note(std::size_t n = 1) { checked += n; }
  void violate(std::string witness) { violations.push_back(std::move(witness)); }
};

/**
 * A finite category presented by explicit enumerators — objects, a hom-set
 * enumerator, identities, composition and structural equality.  Checkers
 * take instances rather than reflecting over types, which keeps the harness
 * generic across every workbench category.
 *
 * compose(later, earlier) is "later after earlier".
 */
template <class Obj, class Mor>
struct CategoryInstance {
  std::string name;
  std::vector<Obj> objects;
  std::function<std::vector<Mor>(const Obj&, const Obj&)> homs;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;
  std::function<bool(const Mor&, const Mor&)> mor_equal;
  std::function<std::string(const Obj&)> obj_label;
};

/// The opposite category: hom(X,Y) = hom(Y,X) and composition flipped.
/// Contravariant functors are covariant functors out of this.
template <class Obj, class Mor>
CategoryInstance<Obj, Mor> opposite(CategoryInstance<Obj, Mor> c) {
  auto homs = c.homs;
  auto comp = c.compose;
  c.name += "^op";
  c.homs = [homs](const Obj& x, const Obj& y) { return homs(y, x); };
  c.compose = [comp](const Mor& later, const Mor& earlier) { return comp(earlier, later); };
  return c;
}

/// F(id) = id and F(g after f) = F(g) after F(f) over every object and every
/// composable pair of enumerated morphisms.
template <class CObj, class CMor, class DObj, class DMor, class FObj, class FMor>
LawReport check_functor_laws(const CategoryInstance<CObj, CMor>& c,
                             const CategoryInstance<DObj, DMor>& d, FObj&& fobj, FMor&& fmor,
                             std::string law = "functor laws") {
  LawReport report{std::move(law)};
  for (const auto& x : c.objects) {
    report.note();
    if (!d.mor_equal(fmor(c.identity(x)), d.identity(fobj(x))))
      report.violate("F(id) != id at " + c.obj_label(x));
  }
  for (const auto& x : c.objects)
    for (const auto& y : c.objects)
      for (const auto& z : c.objects)
        for (const auto& f : c.homs(x, y))
          for (const auto& g : c.homs(y, z)) {
            report.note();
            if (!d.mor_equal(fmor(c.compose(g, f)), d.compose(fmor(g), fmor(f))))
              report.violate("F(g.f) != F(g).F(f) between " + c.obj_label(x) + ", " +
                             c.obj_label(y) + ", " + c.obj_label(z));
          }
  return report;
}

/// Naturality squares G(f) after eta_X = eta_Y after F(f) for every
/// enumerated f : X -> Y.
template <class CObj, class CMor, class DObj, class DMor, class FMor, class GMor, class Eta>
LawReport check_naturality(const CategoryInstance<CObj, CMor>& c,
                           const CategoryInstance<DObj, DMor>& d, FMor&& f_of, GMor&& g_of,
                           Eta&& eta, std::string law = "naturality") {
  LawReport report{std::move(law)};
  for (const auto& x : c.objects)
    for (const auto& y : c.objects)
      for (const auto& f : c.homs(x, y)) {
        report.note();
        if (!d.mor_equal(d.compose(g_of(f), eta(x)), d.compose(eta(y), f_of(f))))
          report.violate("square fails for a morphism " + c.obj_label(x) + " -> " +
                         c.obj_label(y));
      }
  return report;
}

/**
 * Universal property of a product candidate: for every probe Y and every
 * cone (f_alpha : Y -> X_alpha) there is exactly one phi : Y -> P with
 * pi_alpha after phi = f_alpha, found by exhaustive search over Hom(Y, P).
 * Run against an opposite instance, this checks coproducts.
 */
template <class Obj, class Mor>
LawReport check_universal_product(const CategoryInstance<Obj, Mor>& c, const Obj& candidate,
                                  std::span<const Mor> projections,
                                  std::span<const Obj> factors, std::span<const Obj> probes,
                                  std::string law = "universal property") {
  LawReport report{std::move(law)};
  for (const auto& y : probes) {
    // All cones out of y, as index tuples into the factor hom-sets.  An
    // empty hom-set in some leg means there are no cones from this probe.
    std::vector<std::vector<Mor>> legs;
    bool no_cones = factors.empty();
    for (const auto& x : factors) {
      legs.push_back(c.homs(y, x));
      if (legs.back().empty()) no_cones = true;
    }
    if (no_cones) continue;
    std::vector<Mor> into_candidate = c.homs(y, candidate);

    std::vector<std::size_t> pick(factors.size(), 0);
    bool done = false;
    while (!done) {
      report.note();
      std::size_t matches = 0;
      for (const auto& phi : into_candidate) {
        bool ok = true;
        for (std::size_t k = 0; k < factors.size() && ok; ++k)
          ok = c.mor_equal(c.compose(projections[k], phi), legs[k][pick[k]]);
        if (ok) ++matches;
      }
      if (matches != 1)
        report.violate("cone from " + c.obj_label(y) + " has " + std::to_string(matches) +
                       " mediating morphisms");
      std::size_t k = 0;
      for (; k < pick.size(); ++k) {
        if (++pick[k] < legs[k].size()) break;
        pick[k] = 0;
      }
      if (k == pick.size()) done = true;
    }
  }
  return report;
}

/// Instance well-formedness: identities occur in the enumerated hom-sets and
/// composites of enumerated morphisms are enumerated too.
template <class Obj, class Mor>
LawReport check_instance(const CategoryInstance<Obj, Mor>& c,
                         std::string law = "instance closure") {
  LawReport report{std::move(law)};
  auto contains = [&](const std::vector<Mor>& homs, const Mor& m) {
    for (const auto& h : homs)
      if (c.mor_equal(h, m)) return true;
    return false;
  };
  for (const auto& x : c.objects) {
    report.note();
    if (!contains(c.homs(x, x), c.identity(x)))
      report.violate("identity missing at " + c.obj_label(x));
  }
  for (const auto& x : c.objects)
    for (const auto& y : c.objects)
      for (const auto& z : c.objects) {
        const auto xz = c.homs(x, z);
        for (const auto& f : c.homs(x, y))
          for (const auto& g : c.homs(y, z)) {
            report.note();
            if (!contains(xz, c.compose(g, f)))
              report.violate("composite escapes the enumeration at " + c.obj_label(x) +
                             " -> " + c.obj_label(z));
          }
      }
  return report;
}

/// Brute-force categorical mono/epi against the probe pool, by the raw
/// cancellation definitions.
template <class Obj, class Mor>
std::pair<bool, bool> check_mono_epi(const CategoryInstance<Obj, Mor>& c, const Mor& f,
                                     const Obj& dom, const Obj& cod,
                                     std::span<const Obj> probes) {
  bool mono = true, epi = true;
  for (const auto& z : probes) {
    const auto into = c.homs(z, dom);
    for (std::size_t i = 0; i < into.size() && mono; ++i)
      for (std::size_t j = i + 1; j < into.size() && mono; ++j)
        if (c.mor_equal(c.compose(f, into[i]), c.compose(f, into[j])) &&
            !c.mor_equal(into[i], into[j]))
          mono = false;
    const auto outof = c.homs(cod, z);
    for (std::size_t i = 0; i < outof.size() && epi; ++i)
      for (std::size_t j = i + 1; j < outof.size() && epi; ++j)
        if (c.mor_equal(c.compose(outof[i], f), c.compose(outof[j], f)) &&
            !c.mor_equal(outof[i], outof[j]))
          epi = false;
  }
  return {mono, epi};
}

/// Symmetric monoidal structure data on an instance.  Exactly one of the
/// projection pair (semicartesian) or inclusion pair (cosemicartesian)
/// should be set; the other side is left empty.
template <class Obj, class Mor>
struct MonoidalStructure {
  Obj unit;
  std::function<Obj(const Obj&, const Obj&)> tensor_obj;
  std::function<Mor(const Mor&, const Mor&)> tensor_mor;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> associator;  // (X@Y)@Z -> X@(Y@Z)
  std::function<Mor(const Obj&)> left_unitor;                         // I@X -> X
  std::function<Mor(const Obj&)> right_unitor;                        // X@I -> X
  std::function<Mor(const Obj&, const Obj&)> braiding;                // X@Y -> Y@X
  std::function<Mor(const Obj&, const Obj&)> proj1, proj2;  // X@Y -> X, X@Y -> Y
  std::function<Mor(const Obj&, const Obj&)> incl1, incl2;  // X -> X@Y, Y -> X@Y
};

/**
 * Pentagon, triangle, hexagon, braiding involutivity, and the semicartesian
 * marginalization (or cosemicartesian inclusion) naturality squares, all as
 * exact equalities of composed morphisms over the object pool.
 */
template <class Obj, class Mor>
LawReport check_monoidal_coherence(const CategoryInstance<Obj, Mor>& c,
                                   const MonoidalStructure<Obj, Mor>& m,
                                   std::span<const Obj> pool,
                                   std::string law = "monoidal coherence") {
  LawReport report{std::move(law)};
  auto eq = [&](const Mor& a, const Mor& b) { return c.mor_equal(a, b); };
  auto comp = [&](const Mor& a, const Mor& b) { return c.compose(a, b); };

  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& w : pool)
        for (const auto& z : pool) {
          report.note();
          // Pentagon on (((X@Y)@W)@Z).
          const Obj xy = m.tensor_obj(x, y);
          const Obj wz = m.tensor_obj(w, z);
          const Mor leg1 = comp(m.associator(x, y, wz), m.associator(xy, w, z));
          const Mor leg2 =
              comp(m.tensor_mor(c.identity(x), m.associator(y, w, z)),
                   comp(m.associator(x, m.tensor_obj(y, w), z),
                        m.tensor_mor(m.associator(x, y, w), c.identity(z))));
          if (!eq(leg1, leg2))
            report.violate("pentagon fails at (" + c.obj_label(x) + "," + c.obj_label(y) +
                           "," + c.obj_label(w) + "," + c.obj_label(z) + ")");
        }

  for (const auto& x : pool)
    for (const auto& y : pool) {
      report.note();
      // Triangle on (X@I)@Y.
      const Mor via_assoc =
          comp(m.tensor_mor(c.identity(x), m.left_unitor(y)), m.associator(x, m.unit, y));
      const Mor direct = m.tensor_mor(m.right_unitor(x), c.identity(y));
      if (!eq(via_assoc, direct))
        report.violate("triangle fails at (" + c.obj_label(x) + "," + c.obj_label(y) + ")");

      report.note();
      // beta . beta = id.
      if (!eq(comp(m.braiding(y, x), m.braiding(x, y)),
              c.identity(m.tensor_obj(x, y))))
        report.violate("braiding does not square to the identity at (" + c.obj_label(x) +
                       "," + c.obj_label(y) + ")");
    }

  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool) {
        report.note();
        // Hexagon on (X@Y)@Z.
        const Mor leg1 = comp(m.associator(y, z, x),
                              comp(m.braiding(x, m.tensor_obj(y, z)), m.associator(x, y, z)));
        const Mor leg2 = comp(m.tensor_mor(c.identity(y), m.braiding(x, z)),
                              comp(m.associator(y, x, z),
                                   m.tensor_mor(m.braiding(x, y), c.identity(z))));
        if (!eq(leg1, leg2))
          report.violate("hexagon fails at (" + c.obj_label(x) + "," + c.obj_label(y) + "," +
                         c.obj_label(z) + ")");
      }

  // Naturality of the marginalizations / inclusions in both slots.
  for (const auto& x : pool)
    for (const auto& x2 : pool)
      for (const auto& y : pool)
        for (const auto& f : c.homs(x, x2)) {
          report.note();
          if (m.proj1) {
            if (!eq(comp(f, m.proj1(x, y)),
                    comp(m.proj1(x2, y), m.tensor_mor(f, c.identity(y)))))
              report.violate("first marginalization is not natural at " + c.obj_label(x) +
                             " -> " + c.obj_label(x2));
            if (!eq(comp(f, m.proj2(y, x)),
                    comp(m.proj2(y, x2), m.tensor_mor(c.identity(y), f))))
              report.violate("second marginalization is not natural at " + c.obj_label(x) +
                             " -> " + c.obj_label(x2));
          }
          if (m.incl1) {
            if (!eq(comp(m.incl1(x2, y), f),
                    comp(m.tensor_mor(f, c.identity(y)), m.incl1(x, y))))
              report.violate("first inclusion is not natural at " + c.obj_label(x) + " -> " +
                             c.obj_label(x2));
            if (!eq(comp(m.incl2(y, x2), f),
                    comp(m.tensor_mor(c.identity(y), f), m.incl2(y, x))))
              report.violate("second inclusion is not natural at " + c.obj_label(x) + " -> " +
                             c.obj_label(x2));
          }
        }
  return report;
}

}  // namespace maw
