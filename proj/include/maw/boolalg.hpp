#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maw/errors.hpp"

namespace maw {

/// Subset of atoms, in canonical atom order.  Meet = &, join = |,
/// complement = ~ (size-aware), inclusion = is_subset_of.
using Bitset = boost::dynamic_bitset<>;

/**
 * Finite Boolean algebra in canonical atom form.  Atoms are opaque string
 * identifiers, stored sorted (byte-wise lexicographic); elements are atom
 * subsets.  Finite algebras are automatically sigma-complete: countable
 * joins coincide with finite joins.
 *
 * The 0-atom algebra is the degenerate {0 = 1} algebra; it is representable
 * (it shows up as a quotient) and flagged by degenerate().
 *
 * '|' and '&' are reserved for product atom names and rejected in
 * user-supplied identifiers; product constructors mint tuple names through
 * the unchecked factory.
 */
class FinBool {
public:
  FinBool() = default;  // degenerate algebra
  explicit FinBool(std::vector<std::string> atoms);

  /// Skips the reserved-character guard; for coproduct/tensor internals.
  static FinBool with_tuple_atoms(std::vector<std::string> atoms);

  std::size_t atom_count() const { return atoms_.size(); }
  bool degenerate() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom_name(std::size_t i) const { return atoms_.at(i); }
  std::size_t index_of(std::string_view atom) const;
  bool has_atom(std::string_view atom) const;

  Bitset zero() const { return Bitset(atoms_.size()); }
  Bitset one() const { return ~Bitset(atoms_.size()); }
  Bitset atom_element(std::size_t i) const;
  Bitset element(std::span<const std::string> atom_names) const;
  std::vector<std::string> element_names(const Bitset& e) const;
  /// All 2^n elements in increasing bit order; n is assumed small.
  std::vector<Bitset> all_elements() const;

  friend bool operator==(const FinBool& a, const FinBool& b) {
    return a.atoms_ == b.atoms_;
  }
  friend bool operator!=(const FinBool& a, const FinBool& b) { return !(a == b); }

private:
  std::vector<std::string> atoms_;
};

/**
 * Sigma-complete Boolean homomorphism between finite algebras, stored by its
 * Stone-dual point map: dual_map[c] = the source atom whose image contains
 * target atom c.  The element map is Phi(E) = { c : dual_map[c] in E }; it
 * preserves 0, 1, meets, joins and complements by construction.
 */
class BoolHom {
public:
  BoolHom(FinBool source, FinBool target, std::vector<std::size_t> dual_map);

  static BoolHom identity(const FinBool& b);

  const FinBool& source() const { return source_; }
  const FinBool& target() const { return target_; }
  const std::vector<std::size_t>& dual_map() const { return dual_map_; }

  Bitset apply(const Bitset& e) const;

  friend bool operator==(const BoolHom& a, const BoolHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.dual_map_ == b.dual_map_;
  }
  friend bool operator!=(const BoolHom& a, const BoolHom& b) { return !(a == b); }

private:
  FinBool source_;
  FinBool target_;
  std::vector<std::size_t> dual_map_;  // target atom index -> source atom index
};

/// Null ideal given by a set of atoms; the ideal consists of all elements
/// contained in null_atoms (downward closed and join closed automatically
/// in the atom-subset representation).
struct BoolIdeal {
  FinBool parent;
  Bitset null_atoms;

  BoolIdeal(FinBool p, Bitset nulls);
  bool contains(const Bitset& e) const { return e.is_subset_of(null_atoms); }
};

struct GeneratedAlgebra {
  FinBool algebra;
  std::map<std::string, std::string> block_of;  // universe point -> atom
};

/// Common refinement of the generators and their complements over a finite
/// universe.  Each block is named by its lexicographically least point.
GeneratedAlgebra from_generators(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::string>>& generators);

/// Builds the unique BoolHom whose element map sends each source atom to the
/// given target element.  The images must partition the target's unit;
/// otherwise no homomorphism can preserve disjointness and the unit.
BoolHom validate_hom(const FinBool& source, const FinBool& target,
                     const std::vector<Bitset>& element_map);

/// later after earlier; endpoints must match.
BoolHom compose(const BoolHom& later, const BoolHom& earlier);

/// Structural predicates (Stone-dual characterization).  The lawcheck module
/// provides the brute-force categorical counterparts these must agree with.
bool is_mono(const BoolHom& phi);  // element map injective <=> dual map surjective
bool is_epi(const BoolHom& phi);   // element map surjective <=> dual map injective
bool is_isomorphism(const BoolHom& phi);
BoolHom inverse(const BoolHom& phi);

struct Coproduct {
  FinBool algebra;
  std::vector<BoolHom> injections;  // factor i -> algebra
};

/// Categorical coproduct (= SigmaAlg coproduct at finite scale): atoms are
/// tuples of factor atoms serialized "a1|a2|...".  A degenerate factor
/// collapses the whole coproduct to the degenerate algebra.
Coproduct coproduct(std::span<const FinBool> factors);

struct Quotient {
  FinBool algebra;
  BoolHom map;  // parent -> quotient, surjective
};

/// Quotient by a null ideal: surviving atoms are the non-null ones.
Quotient quotient(const FinBool& parent, const BoolIdeal& ideal);

/// Any bijection of atoms is an isomorphism of bare finite Boolean algebras,
/// so this only checks atom counts; measured structures refine it.
std::optional<BoolHom> find_isomorphism(const FinBool& a, const FinBool& b);

/// Subalgebra generated by the given elements, computed by partition
/// refinement: blocks of atoms not separated by any generator.  Returns the
/// element set (all unions of blocks).
std::vector<Bitset> generated_subalgebra(const FinBool& parent,
                                         std::span<const Bitset> generators);

}  // namespace maw
