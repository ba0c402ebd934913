#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "maw/proba.hpp"

namespace maw {

using Index = std::uint64_t;

/**
 * A consistent family of finite marginals over a countably indexed product:
 * per-index factor algebras (abstract measurable spaces, so bare FinBools)
 * plus a marginal measure on every finite sub-product, with the Kolmogorov
 * compatibility condition (pushforward of marginal(F') under the coordinate
 * projection equals marginal(F) for F inside F') checked on demand rather
 * than assumed — the index universe may be infinite, so a one-shot global
 * check is impossible.
 *
 * Marginals are AbsProb measures: zero masses are allowed (absorbing Markov
 * chains produce them); mes() is applied only when a ProbAlgebra output is
 * explicitly requested.
 */
class ConsistentFamily {
public:
  /// Independent copies of one probability algebra, indexed by 1, 2, 3, ...
  static ConsistentFamily iid(ProbAlgebra factor);

  /// Markov chain marginals by the chain rule, indexed by 1, 2, 3, ...
  /// Rows of `transition` and `initial` must each sum to 1 (zeros allowed).
  static ConsistentFamily markov(FinBool states, std::vector<Rat> initial,
                                 std::vector<std::vector<Rat>> transition);

  /// Arbitrary family; `marginal` must return masses aligned with the atom
  /// order of tensor_algebra(F).  No consistency is implied.
  static ConsistentFamily custom(std::optional<std::vector<Index>> universe,
                                 std::function<FinBool(Index)> factor,
                                 std::function<std::vector<Rat>(const std::vector<Index>&)> marginal);

  bool in_universe(Index i) const;
  const std::optional<std::vector<Index>>& universe() const { return universe_; }

  FinBool factor(Index i) const;  // UnknownIndex for out-of-universe indices

  /// Tensor algebra of the factors over a finite index set (sorted, distinct).
  FinBool tensor_algebra(const std::vector<Index>& f) const;

  /// Marginal masses over tensor_algebra(F)'s atoms.
  std::vector<Rat> marginal(const std::vector<Index>& f) const;

private:
  ConsistentFamily() = default;
  std::optional<std::vector<Index>> universe_;  // nullopt = all of 1, 2, 3, ...
  std::function<FinBool(Index)> factor_;
  std::function<std::vector<Rat>(const std::vector<Index>&)> marginal_;
};

/// Pushforward of marginal(F') to the sub-product over F.
std::vector<Rat> project_marginal(const ConsistentFamily& family, const std::vector<Index>& f,
                                  const std::vector<Index>& fprime,
                                  const std::vector<Rat>& marginal_fprime);

struct ConsistencyViolation {
  std::vector<Index> f, fprime;
  std::string atom;  // offending atom of the F tensor
  Rat expected;      // marginal(F) value
  Rat projected;     // pushforward of marginal(F')
};

struct ConsistencyReport {
  std::size_t pairs_checked = 0;
  std::vector<ConsistencyViolation> violations;
  bool consistent() const { return violations.empty(); }
};

/// Batch audit of selected (F, F') pairs; violations are report content,
/// not exceptions.
ConsistencyReport check_consistency(const ConsistentFamily& family,
                                    std::span<const std::pair<std::vector<Index>, std::vector<Index>>> pairs);

/**
 * The abstract Kolmogorov extension as a query engine: mu_A is an
 * intensional object answering exact cylinder queries through the marginals
 * — the honest finite-computational content of the extension theorem, since
 * the inverse limit exists only through its finite projections.
 *
 * Every marginal the engine evaluates is audited against its one-smaller
 * sub-marginals (recursively, each pair once thanks to the cache); an
 * inconsistent family raises InconsistentFamily on the first affected query
 * with the witnessing pair.  The cache is a thread-safe memo table: racing
 * fills compute identical values, so last write wins soundly.
 */
class CylinderMeasure {
public:
  explicit CylinderMeasure(ConsistentFamily family);

  const ConsistentFamily& family() const { return family_; }

  /// Measure of the cylinder over F described by an element of the finite
  /// tensor algebra.
  Rat query(const std::vector<Index>& f, const Bitset& event) const;

  /// Same, with the event given by atom tuple names of tensor_algebra(F).
  Rat query(const std::vector<Index>& f,
            const std::vector<std::vector<std::string>>& event_tuples) const;

  /// Evaluates the same cylinder re-expressed over a superset of indices;
  /// representing-set independence says this always agrees with query().
  Rat query_via(const std::vector<Index>& f, const Bitset& event,
                const std::vector<Index>& fprime) const;

private:
  const std::vector<Rat>& verified_marginal(const std::vector<Index>& f) const;

  ConsistentFamily family_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<Index>, std::vector<Rat>> cache_;
};

/// Lifts an event over F to the tensor algebra over a superset F'.
Bitset lift_event(const ConsistentFamily& family, const std::vector<Index>& f,
                  const Bitset& event, const std::vector<Index>& fprime);

}  // namespace maw
