#pragma once

#include <span>
#include <string>
#include <vector>

#include "maw/boolalg.hpp"

namespace maw {

/// Finite Stone space: a discrete point set.  The clopen algebra is the full
/// powerset, so no topology object is carried.
class StoneSpace {
public:
  StoneSpace() = default;
  explicit StoneSpace(std::vector<std::string> points);
  static StoneSpace with_tuple_points(std::vector<std::string> points);

  std::size_t point_count() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t i) const { return points_.at(i); }
  std::size_t index_of(std::string_view point) const;

  friend bool operator==(const StoneSpace& a, const StoneSpace& b) {
    return a.points_ == b.points_;
  }
  friend bool operator!=(const StoneSpace& a, const StoneSpace& b) { return !(a == b); }

private:
  std::vector<std::string> points_;
};

/// Continuous (= arbitrary, the spaces are finite discrete) point map.
struct PointMap {
  StoneSpace source;
  StoneSpace target;
  std::vector<std::size_t> map;  // source point index -> target point index

  PointMap(StoneSpace src, StoneSpace tgt, std::vector<std::size_t> m);
  static PointMap identity(const StoneSpace& s);

  friend bool operator==(const PointMap& a, const PointMap& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
  }
  friend bool operator!=(const PointMap& a, const PointMap& b) { return !(a == b); }
};

PointMap compose(const PointMap& later, const PointMap& earlier);

/// Stone functor on objects: points are the atoms (each atom's principal
/// ultrafilter is the corresponding 0/1-character).
StoneSpace stone(const FinBool& b);

/// Stone functor on morphisms: Stone(Phi)(alpha) = alpha o Phi, which at
/// finite scale is exactly the dual point map, a map stone(target) ->
/// stone(source).  Contravariant.
PointMap stone_map(const BoolHom& phi);

/// Clopen functor: the powerset algebra of a finite discrete space.
FinBool clopen(const StoneSpace& s);

/// Pullback hom clopen(target) -> clopen(source) of a point map.
BoolHom clopen_map(const PointMap& f);

/**
 * Finite compact-Hausdorff-with-null-ideal space: a point set with the
 * ideal generated by a set of null points.
 */
class DeleteSpace {
public:
  DeleteSpace(StoneSpace space, Bitset null_points);

  const StoneSpace& space() const { return space_; }
  const Bitset& null_points() const { return null_points_; }
  bool point_is_null(std::size_t i) const { return null_points_.test(i); }

  friend bool operator==(const DeleteSpace& a, const DeleteSpace& b) {
    return a.space_ == b.space_ && a.null_points_ == b.null_points_;
  }
  friend bool operator!=(const DeleteSpace& a, const DeleteSpace& b) { return !(a == b); }

private:
  StoneSpace space_;
  Bitset null_points_;
};

/// Point map whose preimages of null sets are null; validity is checked at
/// construction, not at composition.
struct DeleteMap {
  DeleteSpace source;
  DeleteSpace target;
  std::vector<std::size_t> map;

  DeleteMap(DeleteSpace src, DeleteSpace tgt, std::vector<std::size_t> m);
  PointMap as_point_map() const { return PointMap(source.space(), target.space(), map); }
};

/// Loomis-Sikorski functor at finite scale.  The Baire-meager ideal of a
/// finite Stone space is {0} by the Baire category theorem (no non-empty
/// clopen set is meager, and finite discrete spaces have no other candidates),
/// so the null ideal is trivial.
DeleteSpace loomis(const FinBool& b);
DeleteMap loomis_map(const BoolHom& phi);

/// Deletion functor: quotient of the clopen algebra by the null ideal.
Quotient delete_quotient(const DeleteSpace& d);

struct DeleteProduct {
  DeleteSpace space;
  std::vector<DeleteMap> projections;
};

/// Product with the sigma-ideal generated by coordinate pullbacks of the
/// factor null ideals: a tuple is null iff some coordinate is null.
DeleteProduct delete_product(std::span<const DeleteSpace> factors);

struct AbsMesProduct {
  FinBool algebra;
  std::vector<BoolHom> projections;  // duals: factor -> algebra
};

/// Categorical product of abstract measurable spaces computed through the
/// Loomis-Sikorski route: deletion applied to the delete-product of the
/// loomis models.  At finite scale this coincides with coproduct() read
/// dually.
AbsMesProduct absmes_product(std::span<const FinBool> factors);

}  // namespace maw
