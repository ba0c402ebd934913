#include "maw/stoned.hpp"

#include <algorithm>

namespace maw {

StoneSpace::StoneSpace(std::vector<std::string> points) {
  FinBool guard(points);  // same identifier rules as atoms
  points_ = guard.atoms();
}

StoneSpace StoneSpace::with_tuple_points(std::vector<std::string> points) {
  StoneSpace s;
  s.points_ = FinBool::with_tuple_atoms(std::move(points)).atoms();
  return s;
}

std::size_t StoneSpace::index_of(std::string_view point) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), point);
  if (it == points_.end() || *it != point)
    throw DomainError("UnknownPoint", "no point \"" + std::string(point) + "\"");
  return static_cast<std::size_t>(it - points_.begin());
}

PointMap::PointMap(StoneSpace src, StoneSpace tgt, std::vector<std::size_t> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (map.size() != source.point_count())
    fail("InvalidPointMap", "map must be total on the source");
  for (std::size_t t : map)
    if (t >= target.point_count()) fail("InvalidPointMap", "map value out of range");
}

PointMap PointMap::identity(const StoneSpace& s) {
  std::vector<std::size_t> m(s.point_count());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return PointMap(s, s, std::move(m));
}

PointMap compose(const PointMap& later, const PointMap& earlier) {
  if (earlier.target != later.source)
    fail("CompositionMismatch", "earlier.target must equal later.source");
  std::vector<std::size_t> m(earlier.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = later.map[earlier.map[i]];
  return PointMap(earlier.source, later.target, std::move(m));
}

StoneSpace stone(const FinBool& b) { return StoneSpace::with_tuple_points(b.atoms()); }

PointMap stone_map(const BoolHom& phi) {
  return PointMap(stone(phi.target()), stone(phi.source()), phi.dual_map());
}

FinBool clopen(const StoneSpace& s) { return FinBool::with_tuple_atoms(s.points()); }

BoolHom clopen_map(const PointMap& f) {
  return BoolHom(clopen(f.target), clopen(f.source), f.map);
}

DeleteSpace::DeleteSpace(StoneSpace space, Bitset null_points)
    : space_(std::move(space)), null_points_(std::move(null_points)) {
  if (null_points_.size() != space_.point_count())
    fail("InvalidNullIdeal", "null set must live on the space's points");
}

DeleteMap::DeleteMap(DeleteSpace src, DeleteSpace tgt, std::vector<std::size_t> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (map.size() != source.space().point_count())
    fail("InvalidPointMap", "map must be total on the source");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target.space().point_count())
      fail("InvalidPointMap", "map value out of range");
    if (target.point_is_null(map[i]) && !source.point_is_null(i))
      fail("NotADeleteMorphism", "null sets must pull back to null sets (point \"" +
                                     source.space().point_name(i) + "\")");
  }
}

DeleteSpace loomis(const FinBool& b) {
  StoneSpace s = stone(b);
  return DeleteSpace(s, Bitset(s.point_count()));
}

DeleteMap loomis_map(const BoolHom& phi) {
  PointMap pm = stone_map(phi);
  return DeleteMap(loomis(phi.target()), loomis(phi.source()), pm.map);
}

Quotient delete_quotient(const DeleteSpace& d) {
  FinBool c = clopen(d.space());
  return quotient(c, BoolIdeal(c, d.null_points()));
}

DeleteProduct delete_product(std::span<const DeleteSpace> factors) {
  if (factors.empty()) fail("InvalidProduct", "product needs at least one factor");
  std::vector<FinBool> clopens;
  for (const auto& f : factors) {
    if (f.space().point_count() == 0) fail("InvalidProduct", "empty factor");
    clopens.push_back(clopen(f.space()));
  }
  Coproduct cp = coproduct(clopens);
  StoneSpace pts = StoneSpace::with_tuple_points(cp.algebra.atoms());

  // Coordinate index of product point i under factor k is the injection's
  // dual map; a tuple is null iff some coordinate is null.
  Bitset nulls(pts.point_count());
  for (std::size_t i = 0; i < pts.point_count(); ++i)
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (factors[k].point_is_null(cp.injections[k].dual_map()[i])) nulls.set(i);

  DeleteSpace product(pts, nulls);
  DeleteProduct out{product, {}};
  for (std::size_t k = 0; k < factors.size(); ++k)
    out.projections.emplace_back(product, factors[k], cp.injections[k].dual_map());
  return out;
}

AbsMesProduct absmes_product(std::span<const FinBool> factors) {
  for (const auto& f : factors)
    if (f.degenerate()) fail("InvalidProduct", "degenerate factor");
  std::vector<DeleteSpace> models;
  models.reserve(factors.size());
  for (const auto& f : factors) models.push_back(loomis(f));
  DeleteProduct dp = delete_product(models);
  Quotient q = delete_quotient(dp.space);

  AbsMesProduct out{q.algebra, {}};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    // The AbsMes-projection to factor k is dually the clopen pullback of the
    // delete projection, pushed through the quotient.  clopen(loomis(B)) is
    // structurally equal to B, so no identification hom is needed.
    BoolHom pullback = clopen_map(dp.projections[k].as_point_map());
    out.projections.push_back(compose(q.map, pullback));
  }
  return out;
}

}  // namespace maw
