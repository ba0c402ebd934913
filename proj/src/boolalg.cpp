#include "maw/boolalg.hpp"

#include <algorithm>
#include <set>

namespace maw {

namespace {

void check_names(const std::vector<std::string>& names, bool allow_reserved) {
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("InvalidAtomName", "empty atom identifier");
    if (!allow_reserved && n.find_first_of("|&") != std::string::npos)
      throw DomainError("InvalidAtomName",
                        "reserved character in atom identifier \"" + n + "\"");
  }
}

std::vector<std::string> canonicalize(std::vector<std::string> names, bool allow_reserved) {
  check_names(names, allow_reserved);
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw DomainError("InvalidAtomName", "duplicate atom identifier");
  return names;
}

}  // namespace

FinBool::FinBool(std::vector<std::string> atoms)
    : atoms_(canonicalize(std::move(atoms), false)) {}

FinBool FinBool::with_tuple_atoms(std::vector<std::string> atoms) {
  FinBool b;
  b.atoms_ = canonicalize(std::move(atoms), true);
  return b;
}

std::size_t FinBool::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom)
    throw DomainError("UnknownAtom", "no atom \"" + std::string(atom) + "\"");
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool FinBool::has_atom(std::string_view atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

Bitset FinBool::atom_element(std::size_t i) const {
  Bitset e(atoms_.size());
  e.set(i);
  return e;
}

Bitset FinBool::element(std::span<const std::string> atom_names) const {
  Bitset e(atoms_.size());
  for (const auto& n : atom_names) e.set(index_of(n));
  return e;
}

std::vector<std::string> FinBool::element_names(const Bitset& e) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (e.test(i)) out.push_back(atoms_[i]);
  return out;
}

std::vector<Bitset> FinBool::all_elements() const {
  const std::size_t n = atoms_.size();
  std::vector<Bitset> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Bitset e(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) e.set(i);
    out.push_back(std::move(e));
  }
  return out;
}

BoolHom::BoolHom(FinBool source, FinBool target, std::vector<std::size_t> dual_map)
    : source_(std::move(source)), target_(std::move(target)), dual_map_(std::move(dual_map)) {
  if (dual_map_.size() != target_.atom_count())
    fail("NotAHomomorphism", "dual map must be total on target atoms");
  for (std::size_t s : dual_map_)
    if (s >= source_.atom_count())
      fail("NotAHomomorphism", "dual map value out of range");
}

BoolHom BoolHom::identity(const FinBool& b) {
  std::vector<std::size_t> d(b.atom_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = i;
  return BoolHom(b, b, std::move(d));
}

Bitset BoolHom::apply(const Bitset& e) const {
  Bitset out(target_.atom_count());
  for (std::size_t c = 0; c < dual_map_.size(); ++c)
    if (e.test(dual_map_[c])) out.set(c);
  return out;
}

BoolIdeal::BoolIdeal(FinBool p, Bitset nulls) : parent(std::move(p)), null_atoms(std::move(nulls)) {
  if (null_atoms.size() != parent.atom_count())
    fail("InvalidIdeal", "null set must live in the parent algebra");
}

GeneratedAlgebra from_generators(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::string>>& generators) {
  std::vector<std::string> points = universe;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto point_index = [&](const std::string& p) -> std::size_t {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p)
      fail("InvalidGenerator", "generator point \"" + p + "\" outside the universe");
    return static_cast<std::size_t>(it - points.begin());
  };

  // Membership signature of each point across all generators; blocks of the
  // common refinement are the signature classes.
  std::vector<std::vector<bool>> signature(points.size(),
                                           std::vector<bool>(generators.size(), false));
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (const auto& p : generators[g]) signature[point_index(p)][g] = true;

  std::map<std::vector<bool>, std::string> block_name;  // signature -> least member
  std::map<std::string, std::string> block_of;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = block_name.try_emplace(signature[i], points[i]);
    (void)inserted;  // points are sorted, so the first hit is the least member
    block_of[points[i]] = it->second;
  }

  std::vector<std::string> atom_names;
  for (const auto& [sig, name] : block_name) atom_names.push_back(name);
  GeneratedAlgebra out{FinBool(std::move(atom_names)), std::move(block_of)};
  return out;
}

BoolHom validate_hom(const FinBool& source, const FinBool& target,
                     const std::vector<Bitset>& element_map) {
  if (element_map.size() != source.atom_count())
    fail("NotAHomomorphism", "element map must assign an image to every source atom");
  std::vector<std::size_t> dual(target.atom_count(), source.atom_count());
  for (std::size_t a = 0; a < element_map.size(); ++a) {
    const Bitset& image = element_map[a];
    if (image.size() != target.atom_count())
      fail("NotAHomomorphism", "image lives in the wrong algebra");
    for (std::size_t c = 0; c < target.atom_count(); ++c) {
      if (!image.test(c)) continue;
      if (dual[c] != source.atom_count())
        fail("NotAHomomorphism", "images of atoms \"" + source.atom_name(dual[c]) +
                                     "\" and \"" + source.atom_name(a) + "\" overlap at \"" +
                                     target.atom_name(c) + "\"");
      dual[c] = a;
    }
  }
  for (std::size_t c = 0; c < target.atom_count(); ++c)
    if (dual[c] == source.atom_count())
      fail("NotAHomomorphism",
           "images fail to cover the unit: \"" + target.atom_name(c) + "\" is missed");
  return BoolHom(source, target, std::move(dual));
}

BoolHom compose(const BoolHom& later, const BoolHom& earlier) {
  if (earlier.target() != later.source())
    fail("CompositionMismatch", "earlier.target must equal later.source");
  std::vector<std::size_t> dual(later.target().atom_count());
  for (std::size_t c = 0; c < dual.size(); ++c)
    dual[c] = earlier.dual_map()[later.dual_map()[c]];
  return BoolHom(earlier.source(), later.target(), std::move(dual));
}

bool is_mono(const BoolHom& phi) {
  // Element map injective iff the dual point map is surjective.
  std::vector<bool> hit(phi.source().atom_count(), false);
  for (std::size_t s : phi.dual_map()) hit[s] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_epi(const BoolHom& phi) {
  std::vector<bool> hit(phi.source().atom_count(), false);
  for (std::size_t s : phi.dual_map()) {
    if (hit[s]) return false;
    hit[s] = true;
  }
  return true;
}

bool is_isomorphism(const BoolHom& phi) { return is_mono(phi) && is_epi(phi); }

BoolHom inverse(const BoolHom& phi) {
  if (!is_isomorphism(phi)) fail("NotAnIsomorphism", "hom is not bijective");
  std::vector<std::size_t> dual(phi.source().atom_count());
  for (std::size_t c = 0; c < phi.dual_map().size(); ++c) dual[phi.dual_map()[c]] = c;
  return BoolHom(phi.target(), phi.source(), std::move(dual));
}

Coproduct coproduct(std::span<const FinBool> factors) {
  for (const auto& f : factors)
    if (f.degenerate()) {
      // A degenerate factor collapses everything; injections land in {0=1}.
      Coproduct out{FinBool{}, {}};
      for (const auto& g : factors) out.injections.push_back(BoolHom(g, FinBool{}, {}));
      return out;
    }
  if (factors.empty()) fail("InvalidCoproduct", "coproduct needs at least one factor");

  // Cartesian tuples, named "a1|a2|...".
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<std::size_t>> next;
    next.reserve(tuples.size() * f.atom_count());
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < f.atom_count(); ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<std::pair<std::string, std::vector<std::size_t>>> named;
  named.reserve(tuples.size());
  for (auto& t : tuples) {
    std::string name;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) name += '|';
      name += factors[k].atom_name(t[k]);
    }
    named.emplace_back(std::move(name), std::move(t));
  }
  std::sort(named.begin(), named.end());

  std::vector<std::string> atom_names;
  atom_names.reserve(named.size());
  for (const auto& [name, t] : named) atom_names.push_back(name);
  FinBool product = FinBool::with_tuple_atoms(std::move(atom_names));

  Coproduct out{product, {}};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<std::size_t> dual(named.size());
    for (std::size_t c = 0; c < named.size(); ++c) dual[c] = named[c].second[k];
    out.injections.push_back(BoolHom(factors[k], product, std::move(dual)));
  }
  return out;
}

Quotient quotient(const FinBool& parent, const BoolIdeal& ideal) {
  if (ideal.parent != parent) fail("InvalidIdeal", "ideal belongs to a different algebra");
  std::vector<std::string> survivors;
  std::vector<std::size_t> survivor_index;
  for (std::size_t i = 0; i < parent.atom_count(); ++i)
    if (!ideal.null_atoms.test(i)) {
      survivors.push_back(parent.atom_name(i));
      survivor_index.push_back(i);
    }
  FinBool q = FinBool::with_tuple_atoms(std::move(survivors));
  return Quotient{q, BoolHom(parent, q, std::move(survivor_index))};
}

std::optional<BoolHom> find_isomorphism(const FinBool& a, const FinBool& b) {
  if (a.atom_count() != b.atom_count()) return std::nullopt;
  std::vector<std::size_t> dual(b.atom_count());
  for (std::size_t i = 0; i < dual.size(); ++i) dual[i] = i;
  return BoolHom(a, b, std::move(dual));
}

std::vector<Bitset> generated_subalgebra(const FinBool& parent,
                                         std::span<const Bitset> generators) {
  const std::size_t n = parent.atom_count();
  // Atoms are in the same block iff no generator separates them.
  std::vector<std::vector<bool>> sig(n, std::vector<bool>(generators.size(), false));
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) sig[i][g] = generators[g].test(i);
  std::map<std::vector<bool>, Bitset> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = blocks.try_emplace(sig[i], Bitset(n));
    (void)fresh;
    it->second.set(i);
  }
  std::vector<Bitset> block_list;
  for (auto& [s, b] : blocks) block_list.push_back(b);
  std::vector<Bitset> out;
  out.reserve(std::size_t{1} << block_list.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << block_list.size()); ++mask) {
    Bitset e(n);
    for (std::size_t k = 0; k < block_list.size(); ++k)
      if (mask & (std::size_t{1} << k)) e |= block_list[k];
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace maw
