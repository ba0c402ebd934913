#pragma once

#include <span>
#include <string>
#include <vector>

#include "maw/proba.hpp"
#include "maw/stoned.hpp"

namespace maw {

/**
 * Concrete model of a probability algebra: a finite point set carrying the
 * full powerset sigma-algebra (the finite shadow of the Baire convention on
 * a discrete space; without it, initiality uniqueness fails), an exact
 * measure that may vanish on some points, and the inclusion data — the
 * bijection between the modeled algebra's atoms and the positive-mass
 * points.
 */
class ConcreteModel {
public:
  ConcreteModel(StoneSpace points, std::vector<Rat> mass, ProbAlgebra modeled,
                std::vector<std::size_t> inclusion);

  const StoneSpace& points() const { return points_; }
  const std::vector<Rat>& masses() const { return mass_; }
  const Rat& mass(std::size_t point) const { return mass_.at(point); }
  const ProbAlgebra& modeled() const { return modeled_; }
  const std::vector<std::size_t>& inclusion() const { return inclusion_; }

  friend bool operator==(const ConcreteModel& a, const ConcreteModel& b) {
    return a.points_ == b.points_ && a.mass_ == b.mass_ && a.modeled_ == b.modeled_ &&
           a.inclusion_ == b.inclusion_;
  }

private:
  StoneSpace points_;
  std::vector<Rat> mass_;
  ProbAlgebra modeled_;
  std::vector<std::size_t> inclusion_;  // modeled atom index -> point index
};

/// Measure-preserving point map between models.
struct ModelMap {
  ConcreteModel source;
  ConcreteModel target;
  std::vector<std::size_t> map;

  ModelMap(ConcreteModel src, ConcreteModel tgt, std::vector<std::size_t> m);
  bool surjective() const;
};

/// Canonical model: the spectrum of L-inf(X) is the atom set, so the model
/// has points = atoms, measure = mu_X, identity inclusion — and never a
/// null point (the strong Lusin property at finite scale).
ConcreteModel stone_model(const ProbAlgebra& x);

/// The probability algebra of a model (mes of its measured powerset).
ProbAlgebra model_prob_algebra(const ConcreteModel& w);

/// Functorial action on morphisms; always surjective, tested as such.
ModelMap model_morphism(const ProbMorphism& t);

/// No zero-mass points <=> every L-inf class has a unique everywhere-defined
/// representative <=> initial among the concrete models.
bool strong_lusin(const ConcreteModel& w);

/// The unique map from the canonical model commuting with the inclusions;
/// null points of w are never hit.
ModelMap initial_factorization(const ProbAlgebra& x, const ConcreteModel& w);

/// All Model(X)-morphisms w -> w2 (measure-preserving maps commuting with
/// the inclusions), enumerated; initiality means exactly one for every w2.
std::vector<ModelMap> model_x_morphisms(const ConcreteModel& w, const ConcreteModel& w2);

/// Canonical model extended by extra zero-mass points; fails strong Lusin
/// as soon as the list is non-empty.
ConcreteModel model_with_null_points(const ProbAlgebra& x,
                                     const std::vector<std::string>& null_point_names);

/**
 * Canonical representation: an abstractly measurable map Inc(X) -> K, given
 * by its sigma-hom powerset(K) -> X (images of the point indicators, which
 * must partition the unit), extends to a unique continuous map
 * Stone(X) -> K.  At finite scale the extension IS the dual function on
 * atoms; the Hom-set equivalence is a verified bijection.
 */
PointMap represent(const ProbAlgebra& x, const StoneSpace& k,
                   const std::vector<Bitset>& element_map);

struct ModelAction {
  ConcreteModel model;
  ProbMorphism iso;  // the natural isomorphism X -> model's probability algebra
  std::vector<PointMap> action;
};

/// Models a group action by measure-preserving homeomorphisms of the
/// canonical model; the conjugation identity through `iso` is checked
/// atom-wise on construction.
ModelAction model_action(const ProbAlgebra& x, std::span<const ProbMorphism> generators);

}  // namespace maw
