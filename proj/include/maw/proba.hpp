#pragma once

#include <optional>
#include <span>
#include <vector>

#include "maw/boolalg.hpp"
#include "maw/rational.hpp"

namespace maw {

/// AbsProb at finite scale: a finite algebra with an exact probability
/// measure that may vanish on some atoms.
class MeasuredBool {
public:
  MeasuredBool(FinBool algebra, std::vector<Rat> mass);

  const FinBool& algebra() const { return algebra_; }
  const std::vector<Rat>& masses() const { return mass_; }
  const Rat& mass(std::size_t atom) const { return mass_.at(atom); }
  Rat measure(const Bitset& e) const;

  friend bool operator==(const MeasuredBool& a, const MeasuredBool& b) {
    return a.algebra_ == b.algebra_ && a.mass_ == b.mass_;
  }

private:
  FinBool algebra_;
  std::vector<Rat> mass_;
};

/// Probability algebra: strictly positive exact measure summing to one, so
/// mu(E) > 0 for every non-zero E.  "A probability space with the null sets
/// deleted."
class ProbAlgebra {
public:
  ProbAlgebra(FinBool algebra, std::vector<Rat> mass);

  const FinBool& algebra() const { return algebra_; }
  std::size_t atom_count() const { return algebra_.atom_count(); }
  const std::vector<std::string>& atoms() const { return algebra_.atoms(); }
  const std::vector<Rat>& masses() const { return mass_; }
  const Rat& mass(std::size_t atom) const { return mass_.at(atom); }
  Rat measure(const Bitset& e) const;
  MeasuredBool as_measured() const { return MeasuredBool(algebra_, mass_); }

  friend bool operator==(const ProbAlgebra& a, const ProbAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.mass_ == b.mass_;
  }
  friend bool operator!=(const ProbAlgebra& a, const ProbAlgebra& b) { return !(a == b); }

private:
  FinBool algebra_;
  std::vector<Rat> mass_;
};

/**
 * Measure-preserving morphism X -> Y, stored by its Stone-dual point map on
 * atoms.  Probability-algebra morphisms run opposite to their underlying
 * sigma-homs: a morphism X -> Y is a sigma-hom Sigma_Y -> Sigma_X, and this
 * point map is its dual.  Construction validates the exact pushforward
 * identity
 *     mu_Y(b) = sum of mu_X(a) over point_map(a) = b
 * and throws NotMeasurePreserving with the offending atom otherwise.
 */
class ProbMorphism {
public:
  ProbMorphism(ProbAlgebra source, ProbAlgebra target, std::vector<std::size_t> point_map);

  static ProbMorphism identity(const ProbAlgebra& x);

  const ProbAlgebra& source() const { return source_; }
  const ProbAlgebra& target() const { return target_; }
  const std::vector<std::size_t>& point_map() const { return point_map_; }
  std::size_t apply(std::size_t atom) const { return point_map_.at(atom); }

  /// The underlying sigma-hom Sigma_Y -> Sigma_X (element pullback).
  BoolHom dual_hom() const;
  /// Pullback of a target element.
  Bitset pull_back(const Bitset& e) const;

  friend bool operator==(const ProbMorphism& a, const ProbMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.point_map_ == b.point_map_;
  }
  friend bool operator!=(const ProbMorphism& a, const ProbMorphism& b) { return !(a == b); }

private:
  ProbAlgebra source_;
  ProbAlgebra target_;
  std::vector<std::size_t> point_map_;  // source atom -> target atom
};

ProbMorphism compose(const ProbMorphism& later, const ProbMorphism& earlier);

bool is_automorphism_candidate(const ProbMorphism& t);  // endomorphism with bijective map

struct MesResult {
  ProbAlgebra algebra;
  BoolHom quotient;  // measured algebra -> probability algebra, surjective
};

/// Deletes the null atoms.  The returned quotient hom is the component of
/// the natural monomorphism Inc o Mes -> id read dually.
MesResult mes(const MeasuredBool& m);

struct Tensor {
  ProbAlgebra product;
  std::vector<ProbMorphism> marginals;  // product -> factor k
};

/// Finite tensor product: tuple atoms, product measure (strictly positive
/// automatically); marginals are the coordinate point maps.
Tensor tensor(std::span<const ProbAlgebra> factors);

/// Fixed one-atom algebra, the unit of the tensor structure.
ProbAlgebra point_algebra();

struct InvariantFactor {
  ProbAlgebra factor;      // atoms = orbits (named by least member), summed mass
  ProbMorphism projection; // X -> factor
};

/**
 * Invariant factor of the group action generated by the given automorphisms.
 * The generated group is never materialized: orbit closure of the generator
 * point maps already yields the invariant subalgebra at finite scale, with
 * no countability assumption on the group.
 */
InvariantFactor invariant_factor(const ProbAlgebra& x, std::span<const ProbMorphism> generators);

/// Orbit partition of atoms under the generated group, as sorted index sets.
std::vector<std::vector<std::size_t>> atom_orbits(const ProbAlgebra& x,
                                                  std::span<const ProbMorphism> generators);

/// Mass-preserving atom bijection, if one exists (isomorphism search up to
/// relabeling).
std::optional<ProbMorphism> find_measure_isomorphism(const ProbAlgebra& a,
                                                     const ProbAlgebra& b);

}  // namespace maw
