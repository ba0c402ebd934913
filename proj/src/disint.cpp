#include "maw/disint.hpp"

#include <algorithm>

namespace maw {

Kernel disintegrate(const ProbMorphism& pi) {
  const std::size_t nx = pi.source().atom_count();
  const std::size_t ny = pi.target().atom_count();
  std::vector<std::vector<Rat>> fibers(ny, std::vector<Rat>(nx, Rat(0)));
  for (std::size_t a = 0; a < nx; ++a) {
    const std::size_t y = pi.apply(a);
    fibers[y][a] = Rat(pi.source().mass(a) / pi.target().mass(y));
  }
  return Kernel{pi, std::move(fibers)};
}

bool kernel_invariants_ok(const Kernel& k) {
  const ProbMorphism& pi = k.base;
  const std::size_t nx = pi.source().atom_count();
  const std::size_t ny = pi.target().atom_count();
  if (k.fibers.size() != ny) return false;
  std::vector<Rat> mixture(nx, Rat(0));
  for (std::size_t y = 0; y < ny; ++y) {
    if (k.fibers[y].size() != nx) return false;
    Rat total = 0;
    for (std::size_t a = 0; a < nx; ++a) {
      const Rat& v = k.fibers[y][a];
      if (v != 0 && pi.apply(a) != y) return false;  // support condition
      total += v;
      mixture[a] += pi.target().mass(y) * v;
    }
    if (total != 1) return false;
  }
  for (std::size_t a = 0; a < nx; ++a)
    if (mixture[a] != pi.source().mass(a)) return false;
  return true;
}

bool verify_uniqueness(const ProbMorphism& pi, const Kernel& candidate) {
  const std::size_t nx = pi.source().atom_count();
  const std::size_t ny = pi.target().atom_count();
  if (candidate.base != pi) fail("BaseMismatch", "candidate kernel has a different base");
  if (candidate.fibers.size() != ny) return false;
  for (const auto& fiber : candidate.fibers)
    if (fiber.size() != nx) return false;

  // Disintegration identity on the indicator basis f = 1_a, g = 1_y:
  //   mu_X(a) [pi(a) = y]  =  mu_Y(y) * fiber_y(a).
  // Bilinearity extends it to all f, g.
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t a = 0; a < nx; ++a) {
      const Rat lhs = pi.apply(a) == y ? pi.source().mass(a) : Rat(0);
      const Rat rhs = Rat(pi.target().mass(y) * candidate.fibers[y][a]);
      if (lhs != rhs) return false;
    }

  // The indicator system pins the kernel completely.
  if (candidate.fibers != disintegrate(pi).fibers)
    throw std::logic_error("kernel satisfies the identity but differs from the closed form");
  return true;
}

RelProduct rel_product(const ProbMorphism& pi1, const ProbMorphism& pi2) {
  if (pi1.target() != pi2.target())
    fail("TargetMismatch", "relative product needs a common factor");
  const ProbAlgebra& x1 = pi1.source();
  const ProbAlgebra& x2 = pi2.source();
  const ProbAlgebra& y = pi1.target();
  const Kernel k1 = disintegrate(pi1);
  const Kernel k2 = disintegrate(pi2);

  // Raw atoms: fiberwise pairs, mass mu_{y,1}(a1) mu_{y,2}(a2) mu_Y(y).
  // Fibers are strictly positive on their support, so mes() drops nothing;
  // it is applied anyway to stay on the stated construction path.
  struct Pair {
    std::string name;
    std::size_t a1, a2;
    Rat mass;
  };
  std::vector<Pair> pairs;
  for (std::size_t a1 = 0; a1 < x1.atom_count(); ++a1)
    for (std::size_t a2 = 0; a2 < x2.atom_count(); ++a2) {
      if (pi1.apply(a1) != pi2.apply(a2)) continue;
      const std::size_t yy = pi1.apply(a1);
      pairs.push_back(Pair{x1.algebra().atom_name(a1) + "&" + x2.algebra().atom_name(a2),
                           a1, a2,
                           Rat(k1.fibers[yy][a1] * k2.fibers[yy][a2] * y.mass(yy))});
    }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& p, const Pair& q) { return p.name < q.name; });

  std::vector<std::string> names;
  std::vector<Rat> mass;
  std::vector<std::size_t> coord1, coord2;
  for (auto& p : pairs) {
    names.push_back(p.name);
    mass.push_back(p.mass);
    coord1.push_back(p.a1);
    coord2.push_back(p.a2);
  }
  ProbAlgebra product =
      mes(MeasuredBool(FinBool::with_tuple_atoms(std::move(names)), std::move(mass))).algebra;

  ProbMorphism proj1(product, x1, std::move(coord1));
  ProbMorphism proj2(product, x2, std::move(coord2));
  return RelProduct{product, std::move(proj1), std::move(proj2)};
}

ErgodicComponents ergodic_components(const ProbAlgebra& x,
                                     std::span<const ProbMorphism> generators) {
  InvariantFactor inv = invariant_factor(x, generators);
  Kernel kernel = disintegrate(inv.projection);
  auto orbits = atom_orbits(x, generators);

  // A fiber measure is ergodic iff every union of orbits inside the fiber
  // has fiber measure 0 or 1; equivalently the action is transitive on the
  // fiber's positive atoms.
  std::vector<bool> ergodic(inv.factor.atom_count(), false);
  for (std::size_t yidx = 0; yidx < inv.factor.atom_count(); ++yidx) {
    bool ok = true;
    for (const auto& orbit : orbits) {
      Rat orbit_mass = 0;
      for (std::size_t a : orbit) orbit_mass += kernel.fibers[yidx][a];
      if (orbit_mass != 0 && orbit_mass != 1) ok = false;
    }
    ergodic[yidx] = ok;
  }
  return ErgodicComponents{std::move(inv), std::move(kernel), std::move(ergodic)};
}

}  // namespace maw
