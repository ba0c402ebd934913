#include "maw/proba.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace maw {

namespace {

void check_total_mass(const std::vector<Rat>& mass) {
  if (rat_sum(mass) != 1) fail("InvalidMeasure", "masses must sum to exactly 1");
}

}  // namespace

MeasuredBool::MeasuredBool(FinBool algebra, std::vector<Rat> mass)
    : algebra_(std::move(algebra)), mass_(std::move(mass)) {
  if (mass_.size() != algebra_.atom_count())
    fail("InvalidMeasure", "one mass per atom required");
  for (const auto& m : mass_)
    if (m < 0) fail("InvalidMeasure", "negative mass");
  check_total_mass(mass_);
}

Rat MeasuredBool::measure(const Bitset& e) const {
  Rat s = 0;
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (e.test(i)) s += mass_[i];
  return s;
}

ProbAlgebra::ProbAlgebra(FinBool algebra, std::vector<Rat> mass)
    : algebra_(std::move(algebra)), mass_(std::move(mass)) {
  if (mass_.size() != algebra_.atom_count())
    fail("InvalidMeasure", "one mass per atom required");
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (mass_[i] <= 0)
      fail("InvalidMeasure",
           "probability algebras are strictly positive; atom \"" +
               algebra_.atom_name(i) + "\" has mass " + rat_to_string(mass_[i]));
  check_total_mass(mass_);
}

Rat ProbAlgebra::measure(const Bitset& e) const {
  Rat s = 0;
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (e.test(i)) s += mass_[i];
  return s;
}

ProbMorphism::ProbMorphism(ProbAlgebra source, ProbAlgebra target,
                           std::vector<std::size_t> point_map)
    : source_(std::move(source)), target_(std::move(target)), point_map_(std::move(point_map)) {
  if (point_map_.size() != source_.atom_count())
    fail("NotMeasurePreserving", "point map must be total on source atoms");
  std::vector<Rat> pushed(target_.atom_count(), Rat(0));
  for (std::size_t a = 0; a < point_map_.size(); ++a) {
    if (point_map_[a] >= target_.atom_count())
      fail("NotMeasurePreserving", "point map value out of range");
    pushed[point_map_[a]] += source_.mass(a);
  }
  for (std::size_t b = 0; b < pushed.size(); ++b)
    if (pushed[b] != target_.mass(b))
      fail("NotMeasurePreserving", "pushforward mismatch at atom \"" +
                                       target_.algebra().atom_name(b) + "\": expected " +
                                       rat_to_string(target_.mass(b)) + ", got " +
                                       rat_to_string(pushed[b]));
}

ProbMorphism ProbMorphism::identity(const ProbAlgebra& x) {
  std::vector<std::size_t> m(x.atom_count());
  std::iota(m.begin(), m.end(), std::size_t{0});
  return ProbMorphism(x, x, std::move(m));
}

BoolHom ProbMorphism::dual_hom() const {
  return BoolHom(target_.algebra(), source_.algebra(), point_map_);
}

Bitset ProbMorphism::pull_back(const Bitset& e) const { return dual_hom().apply(e); }

ProbMorphism compose(const ProbMorphism& later, const ProbMorphism& earlier) {
  if (earlier.target() != later.source())
    fail("CompositionMismatch", "earlier.target must equal later.source");
  std::vector<std::size_t> m(earlier.point_map().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = later.point_map()[earlier.point_map()[i]];
  return ProbMorphism(earlier.source(), later.target(), std::move(m));
}

bool is_automorphism_candidate(const ProbMorphism& t) {
  if (t.source() != t.target()) return false;
  std::vector<bool> hit(t.target().atom_count(), false);
  for (std::size_t b : t.point_map()) {
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

MesResult mes(const MeasuredBool& m) {
  Bitset nulls(m.algebra().atom_count());
  for (std::size_t i = 0; i < m.algebra().atom_count(); ++i)
    if (m.mass(i) == 0) nulls.set(i);
  Quotient q = quotient(m.algebra(), BoolIdeal(m.algebra(), nulls));
  // Total mass 1 guarantees a surviving atom.
  if (q.algebra.degenerate()) fail("InvalidMeasure", "all atoms null despite total mass 1");
  std::vector<Rat> mass;
  mass.reserve(q.algebra.atom_count());
  for (std::size_t i = 0; i < q.algebra.atom_count(); ++i)
    mass.push_back(m.mass(m.algebra().index_of(q.algebra.atom_name(i))));
  return MesResult{ProbAlgebra(q.algebra, std::move(mass)), q.map};
}

Tensor tensor(std::span<const ProbAlgebra> factors) {
  if (factors.empty()) fail("InvalidProduct", "tensor needs at least one factor");
  std::vector<FinBool> algebras;
  algebras.reserve(factors.size());
  for (const auto& f : factors) algebras.push_back(f.algebra());
  Coproduct cp = coproduct(algebras);

  std::vector<Rat> mass(cp.algebra.atom_count(), Rat(1));
  for (std::size_t i = 0; i < cp.algebra.atom_count(); ++i)
    for (std::size_t k = 0; k < factors.size(); ++k)
      mass[i] *= factors[k].mass(cp.injections[k].dual_map()[i]);
  ProbAlgebra product(cp.algebra, std::move(mass));

  Tensor out{product, {}};
  for (std::size_t k = 0; k < factors.size(); ++k)
    out.marginals.emplace_back(product, factors[k], cp.injections[k].dual_map());
  return out;
}

ProbAlgebra point_algebra() { return ProbAlgebra(FinBool({"u"}), {Rat(1)}); }

std::vector<std::vector<std::size_t>> atom_orbits(const ProbAlgebra& x,
                                                  std::span<const ProbMorphism> generators) {
  const std::size_t n = x.atom_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : generators) {
    if (g.source() != x || !is_automorphism_candidate(g))
      fail("NotAnAutomorphism", "generator must be a bijective endomorphism of X");
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ra = find(a), rb = find(g.apply(a));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t a = 0; a < n; ++a) orbits[find(a)].push_back(a);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : orbits) out.push_back(std::move(members));
  return out;
}

InvariantFactor invariant_factor(const ProbAlgebra& x,
                                 std::span<const ProbMorphism> generators) {
  auto orbits = atom_orbits(x, generators);

  // Orbit atom named by its lexicographically least member; the least member
  // has the smallest index because atoms are stored sorted.
  std::vector<std::string> names;
  names.reserve(orbits.size());
  for (const auto& orbit : orbits) names.push_back(x.algebra().atom_name(orbit.front()));
  FinBool algebra = FinBool::with_tuple_atoms(std::move(names));

  std::vector<Rat> mass(orbits.size(), Rat(0));
  std::vector<std::size_t> point_map(x.atom_count());
  for (const auto& orbit : orbits) {
    const std::size_t idx = algebra.index_of(x.algebra().atom_name(orbit.front()));
    for (std::size_t a : orbit) {
      mass[idx] += x.mass(a);
      point_map[a] = idx;
    }
  }
  ProbAlgebra factor(algebra, std::move(mass));
  return InvariantFactor{factor, ProbMorphism(x, factor, std::move(point_map))};
}

std::optional<ProbMorphism> find_measure_isomorphism(const ProbAlgebra& a,
                                                     const ProbAlgebra& b) {
  if (a.atom_count() != b.atom_count()) return std::nullopt;
  // Match atoms by mass, greedily within mass classes; any mass-preserving
  // bijection is an isomorphism, so the choice inside a class is free.
  std::map<Rat, std::vector<std::size_t>> pool;
  for (std::size_t j = 0; j < b.atom_count(); ++j) pool[b.mass(j)].push_back(j);
  std::vector<std::size_t> map(a.atom_count());
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    auto it = pool.find(a.mass(i));
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    map[i] = it->second.back();
    it->second.pop_back();
  }
  return ProbMorphism(a, b, std::move(map));
}

}  // namespace maw
