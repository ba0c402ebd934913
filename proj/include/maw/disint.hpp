#pragma once

#include <span>
#include <vector>

#include "maw/funcalg.hpp"
#include "maw/proba.hpp"

namespace maw {

/**
 * Canonical disintegration of pi : X -> Y: one exact probability vector over
 * the atoms of X per atom of Y, supported on the fiber of that atom.
 * Vague-topology continuity of y -> mu_y is vacuous on a finite discrete Y.
 *
 * The struct is plain data so that candidate kernels (including malformed
 * ones) can be fed to the verification routines.
 */
struct Kernel {
  ProbMorphism base;                     // pi : X -> Y
  std::vector<std::vector<Rat>> fibers;  // fibers[y][a]
};

/// Closed-form disintegration: fibers[y][a] = mu_X(a)/mu_Y(y) on the fiber,
/// zero off it.  The defining identity
///   integral of f * (g o pi)  =  integral over Y of (integral of f dmu_y) g
/// is demoted to a verification oracle (verify_uniqueness), keeping the two
/// routes honest.
Kernel disintegrate(const ProbMorphism& pi);

/// Support, per-fiber normalization, and the mixture identity
/// sum_y mu_Y(y) fibers[y] = mu_X.
bool kernel_invariants_ok(const Kernel& k);

/// True iff the candidate satisfies the disintegration identity on the full
/// indicator basis; the indicator system is linearly independent, so this
/// forces equality with disintegrate(pi) — asserted as well.
bool verify_uniqueness(const ProbMorphism& pi, const Kernel& candidate);

struct RelProduct {
  ProbAlgebra product;  // atoms "a1&a2"
  ProbMorphism proj1;
  ProbMorphism proj2;
};

/**
 * Relative product X1 (x)_Y X2 of two extensions of a common factor: pairs
 * of atoms over the same fiber, weighted by the product of fiber measures
 * times the base measure.  The relative independence identity
 *   integral of f1 f2 = integral over Y of E(f1|Y) E(f2|Y)
 * holds exactly, and the coordinate pullbacks generate the whole algebra.
 */
RelProduct rel_product(const ProbMorphism& pi1, const ProbMorphism& pi2);

struct ErgodicComponents {
  InvariantFactor factor;
  Kernel kernel;                // disintegration over the invariant factor
  std::vector<bool> ergodic;    // per factor atom
};

/// Disintegrates over the invariant factor and checks each fiber measure for
/// ergodicity (every invariant union of orbits has fiber measure 0 or 1; at
/// finite scale the fibers are single orbits, so every component is ergodic).
ErgodicComponents ergodic_components(const ProbAlgebra& x,
                                     std::span<const ProbMorphism> generators);

}  // namespace maw
