#include "maw/canmodel.hpp"

#include <algorithm>
#include <numeric>

namespace maw {

ConcreteModel::ConcreteModel(StoneSpace points, std::vector<Rat> mass, ProbAlgebra modeled,
                             std::vector<std::size_t> inclusion)
    : points_(std::move(points)),
      mass_(std::move(mass)),
      modeled_(std::move(modeled)),
      inclusion_(std::move(inclusion)) {
  if (mass_.size() != points_.point_count()) fail("NotAModel", "one mass per point required");
  Rat total = 0;
  for (const auto& m : mass_) {
    if (m < 0) fail("NotAModel", "negative mass");
    total += m;
  }
  if (total != 1) fail("NotAModel", "masses must sum to 1");
  if (inclusion_.size() != modeled_.atom_count())
    fail("NotAModel", "inclusion must be total on the modeled atoms");
  std::vector<bool> hit(points_.point_count(), false);
  for (std::size_t a = 0; a < inclusion_.size(); ++a) {
    const std::size_t p = inclusion_[a];
    if (p >= points_.point_count()) fail("NotAModel", "inclusion value out of range");
    if (hit[p]) fail("NotAModel", "inclusion is not injective");
    hit[p] = true;
    if (mass_[p] != modeled_.mass(a))
      fail("NotAModel", "inclusion does not preserve the measure at atom \"" +
                            modeled_.algebra().atom_name(a) + "\"");
  }
  for (std::size_t p = 0; p < points_.point_count(); ++p)
    if (!hit[p] && mass_[p] != 0)
      fail("NotAModel",
           "positive-mass point \"" + points_.point_name(p) + "\" is not an atom image");
}

ModelMap::ModelMap(ConcreteModel src, ConcreteModel tgt, std::vector<std::size_t> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (map.size() != source.points().point_count())
    fail("InvalidPointMap", "map must be total on the source");
  std::vector<Rat> pushed(target.points().point_count(), Rat(0));
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.points().point_count())
      fail("InvalidPointMap", "map value out of range");
    pushed[map[i]] += source.mass(i);
  }
  for (std::size_t j = 0; j < pushed.size(); ++j)
    if (pushed[j] != target.mass(j))
      fail("NotMeasurePreserving", "pushforward mismatch at point \"" +
                                       target.points().point_name(j) + "\"");
}

bool ModelMap::surjective() const {
  std::vector<bool> hit(target.points().point_count(), false);
  for (std::size_t j : map) hit[j] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

ConcreteModel stone_model(const ProbAlgebra& x) {
  std::vector<std::size_t> inc(x.atom_count());
  std::iota(inc.begin(), inc.end(), std::size_t{0});
  return ConcreteModel(stone(x.algebra()), x.masses(), x, std::move(inc));
}

ProbAlgebra model_prob_algebra(const ConcreteModel& w) {
  MeasuredBool measured(clopen(w.points()), w.masses());
  return mes(measured).algebra;
}

ModelMap model_morphism(const ProbMorphism& t) {
  return ModelMap(stone_model(t.source()), stone_model(t.target()), t.point_map());
}

bool strong_lusin(const ConcreteModel& w) {
  // Null points are exactly where two distinct functions can agree almost
  // everywhere, so unique continuous representatives exist iff there are
  // none.
  return std::all_of(w.masses().begin(), w.masses().end(),
                     [](const Rat& m) { return m != 0; });
}

ModelMap initial_factorization(const ProbAlgebra& x, const ConcreteModel& w) {
  if (w.modeled() != x) fail("NotAModel", "the model certifies a different algebra");
  return ModelMap(stone_model(x), w, w.inclusion());
}

std::vector<ModelMap> model_x_morphisms(const ConcreteModel& w, const ConcreteModel& w2) {
  if (w.modeled() != w2.modeled())
    fail("NotAModel", "models of different algebras are not comparable");
  const std::size_t n = w.points().point_count();
  const std::size_t m = w2.points().point_count();

  // Commuting with the inclusions pins the image of every atom point; null
  // points range freely (they carry no mass, so any image preserves the
  // pushforward).
  std::vector<std::size_t> base(n, m);
  for (std::size_t a = 0; a < w.inclusion().size(); ++a)
    base[w.inclusion()[a]] = w2.inclusion()[a];
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < n; ++i)
    if (base[i] == m) free_slots.push_back(i);

  std::vector<ModelMap> out;
  std::vector<std::size_t> choice(free_slots.size(), 0);
  while (true) {
    auto candidate = base;
    for (std::size_t k = 0; k < free_slots.size(); ++k) candidate[free_slots[k]] = choice[k];
    out.emplace_back(w, w2, std::move(candidate));
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < m) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }
  return out;
}

ConcreteModel model_with_null_points(const ProbAlgebra& x,
                                     const std::vector<std::string>& null_point_names) {
  std::vector<std::string> names = x.atoms();
  for (const auto& n : null_point_names) names.push_back(n);
  StoneSpace pts = StoneSpace::with_tuple_points(std::move(names));
  std::vector<Rat> mass(pts.point_count(), Rat(0));
  std::vector<std::size_t> inc(x.atom_count());
  for (std::size_t a = 0; a < x.atom_count(); ++a) {
    const std::size_t p = pts.index_of(x.algebra().atom_name(a));
    mass[p] = x.mass(a);
    inc[a] = p;
  }
  return ConcreteModel(pts, std::move(mass), x, std::move(inc));
}

PointMap represent(const ProbAlgebra& x, const StoneSpace& k,
                   const std::vector<Bitset>& element_map) {
  // The sigma-hom powerset(K) -> Sigma_X, validated as such; its dual is the
  // function atoms(X) -> K, which is the continuous representative.
  BoolHom hom = validate_hom(clopen(k), x.algebra(), element_map);
  return PointMap(stone(x.algebra()), k, hom.dual_map());
}

ModelAction model_action(const ProbAlgebra& x, std::span<const ProbMorphism> generators) {
  ModelAction out{stone_model(x), ProbMorphism::identity(x), {}};
  for (const auto& g : generators) {
    if (g.source() != x || !is_automorphism_candidate(g))
      fail("NotAnAutomorphism", "generator must be a bijective endomorphism of X");
    ModelMap mm = model_morphism(g);
    PointMap pm(mm.source.points(), mm.target.points(), mm.map);
    // Conjugation through the natural isomorphism: with identity `iso` this
    // is atom-wise equality of the modeled map and the generator.
    for (std::size_t a = 0; a < x.atom_count(); ++a)
      if (pm.map[out.iso.apply(a)] != out.iso.apply(g.apply(a)))
        fail("NotAnAutomorphism", "conjugation identity fails");
    out.action.push_back(std::move(pm));
  }
  return out;
}

}  // namespace maw
