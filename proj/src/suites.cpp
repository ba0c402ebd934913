#include "maw/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iterator>

#include "maw/canmodel.hpp"
#include "maw/disint.hpp"
#include "maw/funcalg.hpp"
#include "maw/instances.hpp"
#include "maw/random_gen.hpp"
#include "maw/stoned.hpp"

namespace maw {

namespace {

using Job = std::function<LawReport()>;

std::vector<LawReport> run_jobs(const std::vector<Job>& jobs, std::size_t parallelism) {
  std::vector<LawReport> out(jobs.size());
  if (parallelism <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::vector<std::future<LawReport>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = futures[i].get();
  return out;
}

/// Abstract probability morphism between measured algebras: a point map with
/// the exact pushforward property, zero masses allowed.
struct MeasuredMap {
  MeasuredBool source;
  MeasuredBool target;
  std::vector<std::size_t> map;

  friend bool operator==(const MeasuredMap& a, const MeasuredMap& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
  }
};

std::vector<MeasuredMap> all_measured_maps(const MeasuredBool& m, const MeasuredBool& n) {
  std::vector<MeasuredMap> out;
  std::vector<std::size_t> f(m.algebra().atom_count(), 0);
  const std::size_t range = n.algebra().atom_count();
  if (m.algebra().atom_count() == 0) {
    if (range == 0) out.push_back(MeasuredMap{m, n, {}});
    return out;
  }
  while (true) {
    std::vector<Rat> pushed(range, Rat(0));
    for (std::size_t a = 0; a < f.size(); ++a) pushed[f[a]] += m.mass(a);
    if (pushed == n.masses()) out.push_back(MeasuredMap{m, n, f});
    std::size_t k = 0;
    for (; k < f.size(); ++k) {
      if (++f[k] < range) break;
      f[k] = 0;
    }
    if (k == f.size()) break;
  }
  return out;
}

CategoryInstance<MeasuredBool, MeasuredMap> measured_instance(
    std::vector<MeasuredBool> objects) {
  CategoryInstance<MeasuredBool, MeasuredMap> c;
  c.name = "AbsProb";
  c.objects = std::move(objects);
  c.homs = all_measured_maps;
  c.identity = [](const MeasuredBool& m) {
    std::vector<std::size_t> id(m.algebra().atom_count());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return MeasuredMap{m, m, std::move(id)};
  };
  c.compose = [](const MeasuredMap& later, const MeasuredMap& earlier) {
    std::vector<std::size_t> m(earlier.map.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = later.map[earlier.map[i]];
    return MeasuredMap{earlier.source, later.target, std::move(m)};
  };
  c.mor_equal = [](const MeasuredMap& a, const MeasuredMap& b) { return a == b; };
  c.obj_label = [](const MeasuredBool& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.algebra().atom_count(); ++i)
      out += (i ? "," : "") + m.algebra().atom_name(i);
    return out + "}";
  };
  return c;
}

/// Mes on a measured morphism: restriction to the surviving atoms.
ProbMorphism descend(const MeasuredMap& t) {
  MesResult src = mes(t.source);
  MesResult tgt = mes(t.target);
  std::vector<std::size_t> map(src.algebra.atom_count());
  for (std::size_t a = 0; a < map.size(); ++a) {
    const std::size_t original = t.source.algebra().index_of(src.algebra.atoms()[a]);
    map[a] = tgt.algebra.algebra().index_of(
        t.target.algebra().atom_name(t.map[original]));
  }
  return ProbMorphism(src.algebra, tgt.algebra, std::move(map));
}

MeasuredMap as_measured_map(const ProbMorphism& t) {
  return MeasuredMap{t.source().as_measured(), t.target().as_measured(), t.point_map()};
}

std::vector<ProbAlgebra> prob_battery(std::size_t max_atoms, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ProbAlgebra> battery;
  for (std::size_t n = 1; n <= max_atoms; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
      names.push_back("a" + std::string(i < 10 ? "0" : "") + std::to_string(i));
    battery.emplace_back(FinBool(names), std::vector<Rat>(n, Rat(1, static_cast<long>(n))));
    battery.push_back(random_prob_algebra(rng, n, "b"));
  }
  return battery;
}

std::vector<Job> stone_duality_jobs(const SuiteOptions& opt) {
  const std::size_t law_cap = std::min<std::size_t>(opt.max_atoms, 3);
  const std::size_t obj_cap = std::max<std::size_t>(opt.max_atoms, 4);
  std::vector<Job> jobs;

  jobs.push_back([law_cap] {
    auto c = opposite(bool_instance(bool_pool(0, law_cap, true)));
    auto d = stone_instance(stone_pool(0, law_cap));
    return check_functor_laws(c, d, [](const FinBool& b) { return stone(b); },
                              [](const BoolHom& f) { return stone_map(f); },
                              "Stone functor laws (Bool^op -> Stone)");
  });

  jobs.push_back([law_cap] {
    auto c = opposite(stone_instance(stone_pool(0, law_cap)));
    auto d = bool_instance(bool_pool(0, law_cap, true));
    return check_functor_laws(c, d, [](const StoneSpace& s) { return clopen(s); },
                              [](const PointMap& f) { return clopen_map(f); },
                              "Clopen functor laws (Stone^op -> Bool)");
  });

  jobs.push_back([obj_cap] {
    LawReport report{"Clopen(Stone(B)) = B and Stone(Clopen(S)) = S, objects"};
    for (const auto& b : bool_pool(0, obj_cap, true)) {
      report.note();
      if (clopen(stone(b)) != b) report.violate("algebra round trip fails");
      report.note();
      StoneSpace s = stone(b);
      if (stone(clopen(s)) != s) report.violate("space round trip fails");
    }
    return report;
  });

  jobs.push_back([law_cap] {
    LawReport report{"duality round trip on morphisms"};
    auto pool = bool_pool(0, law_cap, true);
    for (const auto& b : pool)
      for (const auto& c : pool)
        for (const auto& f : all_bool_homs(b, c)) {
          report.note();
          if (clopen_map(stone_map(f)) != f) report.violate("hom round trip fails");
        }
    return report;
  });

  jobs.push_back([law_cap] {
    // Unit of the duality: components are identities in canonical form, and
    // the round trip is natural in the morphism.
    auto c = bool_instance(bool_pool(0, law_cap, true));
    return check_naturality(
        c, c, [](const BoolHom& f) { return f; },
        [](const BoolHom& f) { return clopen_map(stone_map(f)); },
        [](const FinBool& b) { return BoolHom::identity(b); },
        "naturality of the Clopen.Stone unit");
  });

  jobs.push_back([obj_cap, law_cap] {
    LawReport report{"Loomis-Sikorski: deletion of loomis is the identity"};
    for (const auto& b : bool_pool(0, obj_cap, true)) {
      report.note();
      Quotient q = delete_quotient(loomis(b));
      if (q.algebra != b || q.map != BoolHom::identity(b))
        report.violate("deletion quotient is not the identity");
    }
    auto pool = bool_pool(0, law_cap, true);
    for (const auto& b : pool)
      for (const auto& c : pool)
        for (const auto& f : all_bool_homs(b, c)) {
          report.note();
          if (clopen_map(loomis_map(f).as_point_map()) != f)
            report.violate("loomis morphism does not recover the hom");
        }
    return report;
  });

  jobs.push_back([law_cap] {
    LawReport report{"hom census |Hom(B->C)| = |atoms(B)|^|atoms(C)|"};
    auto pool = bool_pool(0, law_cap, true);
    for (const auto& b : pool)
      for (const auto& c : pool) {
        if (b.degenerate()) continue;
        report.note();
        std::size_t expected = 1;
        for (std::size_t i = 0; i < c.atom_count(); ++i) expected *= b.atom_count();
        if (all_bool_homs(b, c).size() != expected ||
            all_point_maps(stone(c), stone(b)).size() != expected)
          report.violate("census mismatch");
      }
    return report;
  });

  jobs.push_back([law_cap] {
    LawReport report{"abstract measurable product = dual coproduct, universal"};
    auto pool = bool_pool(1, law_cap, false);
    auto op = opposite(bool_instance(bool_pool(1, law_cap, true)));
    for (const auto& b : pool)
      for (const auto& c : pool) {
        report.note();
        std::vector<FinBool> factors{b, c};
        AbsMesProduct ap = absmes_product(factors);
        Coproduct cp = coproduct(factors);
        if (ap.algebra != cp.algebra || ap.projections != cp.injections) {
          report.violate("product disagrees with the dual coproduct");
          continue;
        }
        auto sub = check_universal_product(
            op, ap.algebra, std::span<const BoolHom>(ap.projections),
            std::span<const FinBool>(factors), std::span<const FinBool>(op.objects));
        report.checked += sub.checked;
        for (auto& v : sub.violations) report.violate(std::move(v));
      }
    return report;
  });

  return jobs;
}

std::vector<Job> prob_duality_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const auto battery = prob_battery(std::min<std::size_t>(opt.max_atoms, 4), opt.seed);

  jobs.push_back([battery] {
    LawReport report{"Idem(Linfty(X)) = X on objects"};
    for (const auto& x : battery) {
      report.note();
      if (idem(linfty(x)) != x) report.violate("object round trip fails");
    }
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"projection lattice has 2^n elements"};
    for (const auto& x : battery) {
      report.note();
      FuncAlg a = linfty(x);
      auto projections = all_projections(a);
      if (projections.size() != (std::size_t{1} << x.atom_count()))
        report.violate("wrong projection count");
      for (const auto& p : projections)
        if (!is_projection(a, p) || mul(p, p) != p || conj(p) != p)
          report.violate("non-idempotent projection");
    }
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"Idem(Linfty(T)) = T on morphisms"};
    for (const auto& x : battery)
      for (const auto& y : battery)
        for (const auto& t : all_prob_morphisms(x, y)) {
          report.note();
          FuncAlg ly = linfty(y), lx = linfty(x);
          ProbMorphism back = idem_of_operator(
              ly, lx, [&t](const FuncElem& g) { return koopman_apply(t, g); });
          if (back != t) report.violate("morphism round trip fails");
        }
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"Koopman contravariant functor laws and trace"};
    for (const auto& x : battery)
      for (const auto& y : battery)
        for (const auto& t : all_prob_morphisms(x, y)) {
          FuncAlg ly = linfty(y);
          for (std::size_t b = 0; b < y.atom_count(); ++b) {
            report.note();
            FuncElem g = ly.indicator(y.algebra().atom_element(b));
            if (integrate(linfty(x), koopman_apply(t, g)) != integrate(ly, g))
              report.violate("Koopman is not trace preserving");
          }
          for (const auto& z : battery)
            for (const auto& s : all_prob_morphisms(y, z))
              for (std::size_t cidx = 0; cidx < z.atom_count(); ++cidx) {
                report.note();
                FuncElem h = linfty(z).indicator(z.algebra().atom_element(cidx));
                if (koopman_apply(compose(s, t), h) != koopman_apply(t, koopman_apply(s, h)))
                  report.violate("Koopman reverses composition incorrectly");
              }
        }
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"Mes(Inc(X)) = X"};
    for (const auto& x : battery) {
      report.note();
      MesResult r = mes(x.as_measured());
      if (r.algebra != x || r.quotient != BoolHom::identity(x.algebra()))
        report.violate("already strictly positive measure must quotient trivially");
    }
    return report;
  });

  jobs.push_back([battery] {
    // Measured battery: strictly positive instances plus null-atom variants.
    std::vector<MeasuredBool> objects;
    for (const auto& x : battery) {
      if (x.atom_count() > 2) continue;
      objects.push_back(x.as_measured());
      std::vector<std::string> names = x.atoms();
      names.push_back("z99");
      FinBool algebra(names);
      std::vector<Rat> mass(algebra.atom_count(), Rat(0));
      for (std::size_t a = 0; a < x.atom_count(); ++a)
        mass[algebra.index_of(x.algebra().atom_name(a))] = x.mass(a);
      objects.emplace_back(algebra, mass);
    }
    auto inst = measured_instance(objects);

    LawReport report = check_instance(inst, "Mes on measured instances");
    // Functor laws of Mes into the probability-algebra category.
    auto functor = check_functor_laws(
        inst, prob_instance({}), [](const MeasuredBool& m) { return mes(m).algebra; },
        [](const MeasuredMap& t) { return descend(t); });
    report.checked += functor.checked;
    for (auto& v : functor.violations) report.violate(std::move(v));

    // Natural monomorphism from Inc(Mes(-)) to the identity: components are
    // the survivor inclusions, squares checked through the harness.
    auto eta = [](const MeasuredBool& m) {
      MesResult r = mes(m);
      std::vector<std::size_t> incl(r.algebra.atom_count());
      for (std::size_t a = 0; a < incl.size(); ++a)
        incl[a] = m.algebra().index_of(r.algebra.algebra().atom_name(a));
      return MeasuredMap{r.algebra.as_measured(), m, std::move(incl)};
    };
    for (const auto& m : objects) {
      report.note();
      MeasuredMap component = eta(m);
      std::vector<bool> hit(m.algebra().atom_count(), false);
      for (std::size_t p : component.map) {
        if (hit[p]) report.violate("inclusion component is not injective");
        hit[p] = true;
      }
    }
    auto naturality = check_naturality(
        inst, inst,
        [](const MeasuredMap& t) { return as_measured_map(descend(t)); },
        [](const MeasuredMap& t) { return t; }, eta,
        "naturality of the Inc(Mes) monomorphism");
    report.checked += naturality.checked;
    for (auto& v : naturality.violations) report.violate(std::move(v));
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"Mes(Inc(T)) = T on morphisms"};
    for (const auto& x : battery)
      for (const auto& y : battery)
        for (const auto& t : all_prob_morphisms(x, y)) {
          report.note();
          if (descend(as_measured_map(t)) != t) report.violate("morphism round trip fails");
        }
    return report;
  });

  jobs.push_back([battery] {
    LawReport report{"Inc(Mes(M)) -> M is a natural monomorphism"};
    for (const auto& x : battery) {
      // Adjoin null atoms to build a genuinely measured instance.
      std::vector<std::string> names = x.atoms();
      names.push_back("z98");
      names.push_back("z99");
      FinBool algebra(names);
      std::vector<Rat> mass(algebra.atom_count(), Rat(0));
      for (std::size_t a = 0; a < x.atom_count(); ++a)
        mass[algebra.index_of(x.algebra().atom_name(a))] = x.mass(a);
      MeasuredBool m(algebra, mass);
      MesResult r = mes(m);
      report.note();
      if (r.algebra != x) report.violate("mes must drop exactly the null atoms");
      // The natural monomorphism of abstract measurable spaces is dually the
      // quotient sigma-hom; mono there = surjective sigma-hom.
      report.note();
      if (!is_epi(r.quotient)) report.violate("quotient must be a surjective sigma-hom");
      // Kernel of the quotient is exactly the ideal below the null atoms.
      Bitset nulls(algebra.atom_count());
      nulls.set(algebra.index_of("z98"));
      nulls.set(algebra.index_of("z99"));
      for (const auto& e : algebra.all_elements()) {
        report.note();
        const bool killed = r.quotient.apply(e).none();
        if (killed != e.is_subset_of(nulls)) report.violate("kernel mismatch");
      }
    }
    return report;
  });

  return jobs;
}

std::vector<Job> disint_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const std::uint64_t seed = opt.seed;

  jobs.push_back([seed] {
    LawReport report{"disintegration invariants and identity (random)"};
    Rng rng(seed + 1);
    for (int i = 0; i < 200; ++i) {
      std::uniform_int_distribution<std::size_t> ysize(1, 4);
      ProbAlgebra y = random_prob_algebra(rng, ysize(rng), "y");
      ProbMorphism pi = random_fibered_morphism(rng, y, 3);
      Kernel k = disintegrate(pi);
      report.note();
      if (!kernel_invariants_ok(k)) report.violate("kernel invariants fail");
      report.note();
      if (!verify_uniqueness(pi, k)) report.violate("closed form fails its own identity");
    }
    return report;
  });

  jobs.push_back([seed] {
    LawReport report{"perturbed kernels are rejected"};
    Rng rng(seed + 2);
    for (int i = 0; i < 100; ++i) {
      ProbAlgebra y = random_prob_algebra(rng, 2, "y");
      ProbMorphism pi = random_fibered_morphism(rng, y, 3);
      Kernel k = disintegrate(pi);
      // Move mass 1/100 between two entries of one fiber (rebalanced, so the
      // fiber still sums to 1) or break the support condition.
      std::size_t yidx = 0;
      std::size_t first = pi.source().atom_count(), second = first;
      for (std::size_t yy = 0; yy < y.atom_count() && second == first; ++yy) {
        std::vector<std::size_t> fiber;
        for (std::size_t a = 0; a < pi.source().atom_count(); ++a)
          if (pi.apply(a) == yy) fiber.push_back(a);
        if (fiber.size() >= 2) {
          yidx = yy;
          first = fiber[0];
          second = fiber[1];
        }
      }
      report.note();
      if (second == first) continue;  // all fibers are singletons; skip
      Kernel perturbed = k;
      perturbed.fibers[yidx][first] += Rat(1, 100);
      perturbed.fibers[yidx][second] -= Rat(1, 100);
      if (verify_uniqueness(pi, perturbed)) report.violate("perturbed kernel accepted");
      // Support violation with intact marginals within the fiber.
      Kernel off_support = k;
      std::size_t other = (yidx + 1) % y.atom_count();
      off_support.fibers[other][first] = off_support.fibers[yidx][first];
      if (verify_uniqueness(pi, off_support)) report.violate("off-support kernel accepted");
    }
    return report;
  });

  jobs.push_back([seed] {
    LawReport report{"relative product identity (f1 f2 on indicators)"};
    Rng rng(seed + 3);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<std::size_t> ysize(1, 3);
      ProbAlgebra y = random_prob_algebra(rng, ysize(rng), "y");
      ProbMorphism pi1 = random_fibered_morphism(rng, y, 3, "l");
      ProbMorphism pi2 = random_fibered_morphism(rng, y, 3, "r");
      RelProduct rp = rel_product(pi1, pi2);
      report.note();
      if (compose(pi1, rp.proj1) != compose(pi2, rp.proj2)) {
        report.violate("square does not commute");
        continue;
      }
      FuncAlg la = linfty(rp.product);
      bool ok = true;
      for (std::size_t a1 = 0; a1 < pi1.source().atom_count() && ok; ++a1)
        for (std::size_t a2 = 0; a2 < pi2.source().atom_count() && ok; ++a2) {
          FuncElem f1 = koopman_apply(rp.proj1,
                                      linfty(pi1.source())
                                          .indicator(pi1.source().algebra().atom_element(a1)));
          FuncElem f2 = koopman_apply(rp.proj2,
                                      linfty(pi2.source())
                                          .indicator(pi2.source().algebra().atom_element(a2)));
          GaussRat lhs = integrate(la, mul(f1, f2));
          FuncElem e1 = cond_exp(pi1, linfty(pi1.source())
                                          .indicator(pi1.source().algebra().atom_element(a1)));
          FuncElem e2 = cond_exp(pi2, linfty(pi2.source())
                                          .indicator(pi2.source().algebra().atom_element(a2)));
          GaussRat rhs = integrate(linfty(y), mul(e1, e2));
          ok = lhs == rhs;
        }
      report.note();
      if (!ok) report.violate("relative independence identity fails");
      // Generation: the two coordinate pullbacks generate everything.
      std::vector<Bitset> gens;
      for (std::size_t a1 = 0; a1 < pi1.source().atom_count(); ++a1)
        gens.push_back(rp.proj1.pull_back(pi1.source().algebra().atom_element(a1)));
      for (std::size_t a2 = 0; a2 < pi2.source().atom_count(); ++a2)
        gens.push_back(rp.proj2.pull_back(pi2.source().algebra().atom_element(a2)));
      report.note();
      if (generated_subalgebra(rp.product.algebra(), gens).size() !=
          (std::size_t{1} << rp.product.atom_count()))
        report.violate("coordinate pullbacks do not generate");
    }
    return report;
  });

  jobs.push_back([seed] {
    LawReport report{"relative product degenerations"};
    Rng rng(seed + 4);
    for (int i = 0; i < 50; ++i) {
      // Trivial base: relative product = tensor, up to the &/| naming.
      ProbAlgebra y = point_algebra();
      ProbMorphism pi1 = random_fibered_morphism(rng, y, 4, "l");
      ProbMorphism pi2 = random_fibered_morphism(rng, y, 4, "r");
      RelProduct rp = rel_product(pi1, pi2);
      Tensor tn = tensor(std::vector<ProbAlgebra>{pi1.source(), pi2.source()});
      report.note();
      bool same = rp.product.atom_count() == tn.product.atom_count();
      for (std::size_t a = 0; same && a < rp.product.atom_count(); ++a) {
        std::string renamed = rp.product.algebra().atom_name(a);
        std::replace(renamed.begin(), renamed.end(), '&', '|');
        same = tn.product.algebra().has_atom(renamed) &&
               tn.product.mass(tn.product.algebra().index_of(renamed)) == rp.product.mass(a);
      }
      if (!same) report.violate("trivial-base relative product differs from tensor");

      // Diagonal: both projections of id (x)_Y id are isomorphisms onto Y.
      ProbAlgebra z = random_prob_algebra(rng, 3, "z");
      RelProduct diag = rel_product(ProbMorphism::identity(z), ProbMorphism::identity(z));
      report.note();
      if (diag.product.atom_count() != z.atom_count() ||
          !find_measure_isomorphism(diag.product, z) ||
          diag.product.masses() != z.masses())
        report.violate("diagonal relative product is not the base");
    }
    return report;
  });

  jobs.push_back([seed] {
    LawReport report{"ergodic components of random finite actions"};
    Rng rng(seed + 5);
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<std::size_t> size(1, 6), gens(1, 3);
      RandomAction action = random_permutation_action(rng, size(rng), gens(rng));
      ErgodicComponents ec = ergodic_components(action.space, action.generators);
      report.note();
      if (!std::all_of(ec.ergodic.begin(), ec.ergodic.end(), [](bool b) { return b; }))
        report.violate("non-ergodic fiber over the invariant factor");
      report.note();
      if (!kernel_invariants_ok(ec.kernel)) report.violate("component kernel invalid");
      for (const auto& g : action.generators) {
        report.note();
        if (compose(ec.factor.projection, g) != ec.factor.projection)
          report.violate("projection is not invariant under a generator");
      }
    }
    return report;
  });

  return jobs;
}

std::vector<Job> monoidal_jobs(const SuiteOptions&) {
  std::vector<Job> jobs;

  jobs.push_back([] {
    auto structure = prob_semicartesian();
    std::vector<ProbAlgebra> pool = {
        point_algebra(),
        ProbAlgebra(FinBool({"g", "h"}), {Rat(1, 2), Rat(1, 2)}),
        ProbAlgebra(FinBool({"m", "n"}), {Rat(1, 3), Rat(2, 3)}),
    };
    auto c = prob_instance(pool);
    return check_monoidal_coherence(c, structure, std::span<const ProbAlgebra>(pool),
                                    "ProbAlg tensor coherence");
  });

  jobs.push_back([] {
    auto structure = bool_cocartesian();
    std::vector<FinBool> pool = {FinBool({"u"}), FinBool({"g", "h"}), FinBool({"m", "n"})};
    auto c = bool_instance(pool);
    return check_monoidal_coherence(c, structure, std::span<const FinBool>(pool),
                                    "Bool coproduct coherence");
  });

  return jobs;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"stone-duality", "prob-duality", "disint", "monoidal"};
}

std::vector<LawReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<LawReport> out;
    for (const auto& n : suite_names()) {
      auto sub = run_suite(n, options);
      out.insert(out.end(), std::make_move_iterator(sub.begin()),
                 std::make_move_iterator(sub.end()));
    }
    return out;
  }
  std::vector<Job> jobs;
  if (name == "stone-duality")
    jobs = stone_duality_jobs(options);
  else if (name == "prob-duality")
    jobs = prob_duality_jobs(options);
  else if (name == "disint")
    jobs = disint_jobs(options);
  else if (name == "monoidal")
    jobs = monoidal_jobs(options);
  else
    fail("UnknownSuite", "no suite named \"" + name + "\"");
  return run_jobs(jobs, options.jobs);
}

}  // namespace maw
