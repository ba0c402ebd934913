#pragma once

#include <vector>

#include "maw/boolalg.hpp"
#include "maw/lawcheck.hpp"
#include "maw/proba.hpp"
#include "maw/stoned.hpp"

namespace maw {

/// All sigma-homs B -> C: one per function atoms(C) -> atoms(B).
/// |Hom(B -> C)| = |atoms(B)|^|atoms(C)| for non-degenerate B.
std::vector<BoolHom> all_bool_homs(const FinBool& b, const FinBool& c);

/// All point maps S -> T; |T|^|S|.
std::vector<PointMap> all_point_maps(const StoneSpace& s, const StoneSpace& t);

/// All measure-preserving point maps, filtered exhaustively.
std::vector<ProbMorphism> all_prob_morphisms(const ProbAlgebra& x, const ProbAlgebra& y);

CategoryInstance<FinBool, BoolHom> bool_instance(std::vector<FinBool> objects);
CategoryInstance<StoneSpace, PointMap> stone_instance(std::vector<StoneSpace> objects);
CategoryInstance<ProbAlgebra, ProbMorphism> prob_instance(std::vector<ProbAlgebra> objects);

/// Cocartesian structure on finite Boolean algebras: tensor = coproduct,
/// unit = the initial one-atom algebra, inclusions = the injections.
MonoidalStructure<FinBool, BoolHom> bool_cocartesian();

/// Semicartesian structure on probability algebras: tensor = product
/// measure, unit = the point algebra, marginalizations = coordinate maps.
MonoidalStructure<ProbAlgebra, ProbMorphism> prob_semicartesian();

/// Canonical object pools.  Sizes run from min_atoms to max_atoms; a second
/// naming variant widens the hom census without changing the sizes.
std::vector<FinBool> bool_pool(std::size_t min_atoms, std::size_t max_atoms,
                               bool name_variants = false);
std::vector<StoneSpace> stone_pool(std::size_t min_points, std::size_t max_points);

}  // namespace maw
