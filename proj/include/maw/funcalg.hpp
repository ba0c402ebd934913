#pragma once

#include <functional>
#include <span>
#include <vector>

#include "maw/proba.hpp"
#include "maw/rational.hpp"

namespace maw {

/// Element of L-infinity(X): one Gaussian-rational value per atom.
using FuncElem = std::vector<GaussRat>;

/**
 * The function algebra L-infinity of a probability algebra: the
 * finite-dimensional tracial commutative von Neumann algebra of
 * Gaussian-rational vectors over the atoms, with pointwise operations and
 * the faithful trace tau(f) = sum f(a) mu(a).
 */
class FuncAlg {
public:
  explicit FuncAlg(ProbAlgebra base) : base_(std::move(base)) {}

  const ProbAlgebra& base() const { return base_; }
  std::size_t dim() const { return base_.atom_count(); }

  FuncElem zero() const { return FuncElem(dim()); }
  FuncElem one() const { return FuncElem(dim(), GaussRat(Rat(1))); }
  FuncElem indicator(const Bitset& e) const;
  FuncElem scalar(const GaussRat& c) const { return FuncElem(dim(), c); }

  friend bool operator==(const FuncAlg& a, const FuncAlg& b) { return a.base_ == b.base_; }

private:
  ProbAlgebra base_;
};

FuncElem add(const FuncElem& f, const FuncElem& g);
FuncElem sub(const FuncElem& f, const FuncElem& g);
FuncElem mul(const FuncElem& f, const FuncElem& g);
FuncElem conj(const FuncElem& f);
bool is_real(const FuncElem& f);

FuncAlg linfty(const ProbAlgebra& x);

/// tau(f) = integral of f; linear, unital, and faithful on f * conj(f).
GaussRat integrate(const FuncAlg& a, const FuncElem& f);

/// Squared sup norm: max over atoms of |f(a)|^2 (squared to stay rational).
Rat sup_norm_sq(const FuncElem& f);

/// f = conj(f) = f^2, i.e. a 0/1 vector.
bool is_projection(const FuncAlg& a, const FuncElem& f);

/// All 2^n projections, solved coordinatewise from f = f* = f^2.
std::vector<FuncElem> all_projections(const FuncAlg& a);

/// Koopman operator of T : X -> Y, mapping g in L-inf(Y) to g o T in
/// L-inf(X).  Unital, *-preserving, multiplicative and trace-preserving.
FuncElem koopman_apply(const ProbMorphism& t, const FuncElem& g);

/// Idem functor on objects: the projection lattice with the trace of minimal
/// projections recovers the base probability algebra.
ProbAlgebra idem(const FuncAlg& a);

/**
 * Idem on morphisms: given a trace-preserving unital *-homomorphism
 * op : L-inf(Y) -> L-inf(X) (e.g. a Koopman operator), recovers the unique
 * ProbAlg-morphism X -> Y it is the Koopman operator of.  Fails if op does
 * not map minimal projections of Y to a partition of unity in X.
 */
ProbMorphism idem_of_operator(const FuncAlg& domain_y, const FuncAlg& codomain_x,
                              const std::function<FuncElem(const FuncElem&)>& op);

/**
 * Conditional expectation onto the factor: E(f|Y)(b) is the mu_X-weighted
 * average of f over the fiber of b.  The orthogonal-projection identity
 *     integral of f * (g o pi) = integral of E(f|Y) * g        (over Y)
 * is a post-condition verified by tests, not the computation.
 */
FuncElem cond_exp(const ProbMorphism& pi, const FuncElem& f);

enum class LpExponent { One, Two, Infinity };

/**
 * Abstract L^p quantities for p in {1, 2, inf}:
 *   One      -> ||f||_1 for real rational f, computed both by the level-set
 *               integral sum (r_i - r_{i-1}) mu(|f| > r_{i-1}) and by the
 *               direct weighted sum, asserted equal;
 *   Two      -> ||f||_2^2 = tau(f conj(f));
 *   Infinity -> ||f||_inf^2 = max |f(a)|^2.
 * Other exponents are rejected by the type; |f|^p is irrational in general.
 */
Rat lp_norm(const FuncAlg& a, const FuncElem& f, LpExponent p);

/// A state on C(K) for a finite point set K, given by its values on the
/// indicators of points.
struct FiniteState {
  std::vector<std::string> points;
  std::vector<Rat> values;  // in [0,1], summing to 1
};

/// Finite Riesz representation: the unique probability measure representing
/// the state.  On a finite discrete space this is the identity
/// correspondence between states and probability vectors.
std::vector<Rat> riesz_finite(const FiniteState& state);

}  // namespace maw
