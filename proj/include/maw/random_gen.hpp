#pragma once

#include <random>
#include <string>
#include <vector>

#include "maw/funcalg.hpp"
#include "maw/proba.hpp"

namespace maw {

using Rng = std::mt19937_64;

/// n strictly positive exact rationals summing to 1 (random integer weights,
/// normalized).
std::vector<Rat> random_positive_masses(Rng& rng, std::size_t n, int max_weight = 20);

/// Atoms "<prefix>01".."<prefix>NN"; zero-padded so lexicographic order is
/// index order.
ProbAlgebra random_prob_algebra(Rng& rng, std::size_t atoms, const std::string& prefix = "x");

/// A morphism onto a fresh target built fiber-first: every target atom gets
/// between 1 and max_fiber source atoms, with the target mass split randomly
/// across the fiber.  Valid by construction.
ProbMorphism random_fibered_morphism(Rng& rng, const ProbAlgebra& target,
                                     std::size_t max_fiber, const std::string& prefix = "x");

struct RandomAction {
  ProbAlgebra space;
  std::vector<ProbMorphism> generators;
};

/// Random automorphisms: permutations of the atom set with masses constant
/// on cycles, so every generator is measure-preserving.
RandomAction random_permutation_action(Rng& rng, std::size_t atoms,
                                       std::size_t num_generators);

std::vector<Rat> random_rationals(Rng& rng, std::size_t n, int lo = -8, int hi = 8,
                                  int max_den = 6);
FuncElem random_real_elem(Rng& rng, std::size_t n);
FuncElem random_gauss_elem(Rng& rng, std::size_t n);

}  // namespace maw
