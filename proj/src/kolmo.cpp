#include "maw/kolmo.hpp"

#include <algorithm>

namespace maw {

namespace {

std::vector<Index> canonical_index_set(std::vector<Index> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool index_subset(const std::vector<Index>& f, const std::vector<Index>& fprime) {
  return std::includes(fprime.begin(), fprime.end(), f.begin(), f.end());
}

using Matrix = std::vector<std::vector<Rat>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix matpow(Matrix base, Index e) {
  const std::size_t n = base.size();
  Matrix result(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  while (e > 0) {
    if (e & 1) result = matmul(result, base);
    e >>= 1;
    if (e) base = matmul(base, base);
  }
  return result;
}

/// Coordinate table of a tensor: coords[k][atom] = atom index in factor k.
std::vector<std::vector<std::size_t>> coordinates_of(const std::vector<FinBool>& factors) {
  Coproduct cp = coproduct(factors);
  std::vector<std::vector<std::size_t>> coords;
  coords.reserve(factors.size());
  for (const auto& inj : cp.injections) coords.push_back(inj.dual_map());
  return coords;
}

std::vector<std::vector<std::size_t>> tensor_coordinates(const ConsistentFamily& family,
                                                         const std::vector<Index>& f) {
  std::vector<FinBool> factors;
  factors.reserve(f.size());
  for (Index i : f) factors.push_back(family.factor(i));
  return coordinates_of(factors);
}

}  // namespace

ConsistentFamily ConsistentFamily::iid(ProbAlgebra factor) {
  ConsistentFamily fam;
  fam.universe_ = std::nullopt;
  FinBool algebra = factor.algebra();
  fam.factor_ = [algebra](Index) { return algebra; };
  fam.marginal_ = [factor = std::move(factor)](const std::vector<Index>& f) {
    std::vector<FinBool> factors(f.size(), factor.algebra());
    auto coords = coordinates_of(factors);
    const std::size_t n = coords.front().size();
    std::vector<Rat> mass(n, Rat(1));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& c : coords) mass[i] *= factor.mass(c[i]);
    return mass;
  };
  return fam;
}

ConsistentFamily ConsistentFamily::markov(FinBool states, std::vector<Rat> initial,
                                          std::vector<std::vector<Rat>> transition) {
  const std::size_t s = states.atom_count();
  if (s == 0) fail("NotStochastic", "empty state space");
  if (initial.size() != s) fail("NotStochastic", "initial distribution has wrong size");
  for (const auto& v : initial)
    if (v < 0) fail("NotStochastic", "negative initial mass");
  if (rat_sum(initial) != 1) fail("NotStochastic", "initial distribution must sum to 1");
  if (transition.size() != s) fail("NotStochastic", "transition matrix has wrong size");
  for (const auto& row : transition) {
    if (row.size() != s) fail("NotStochastic", "transition matrix is not square");
    for (const auto& v : row)
      if (v < 0) fail("NotStochastic", "negative transition probability");
    if (rat_sum(row) != 1) fail("NotStochastic", "transition rows must sum to 1");
  }

  ConsistentFamily fam;
  fam.universe_ = std::nullopt;
  fam.factor_ = [states](Index) { return states; };
  fam.marginal_ = [states, initial = std::move(initial),
                   transition = std::move(transition)](const std::vector<Index>& f) {
    std::vector<FinBool> factors(f.size(), states);
    auto coords = coordinates_of(factors);
    const std::size_t n = coords.front().size();
    const std::size_t k = f.size();

    // Chain rule across the (possibly gapped) observation times.
    std::vector<Rat> start(initial.size());
    {
      Matrix p0 = matpow(transition, f.front() - 1);
      for (std::size_t j = 0; j < start.size(); ++j) {
        Rat acc = 0;
        for (std::size_t i = 0; i < start.size(); ++i) acc += initial[i] * p0[i][j];
        start[j] = acc;
      }
    }
    std::vector<Matrix> steps;
    for (std::size_t j = 0; j + 1 < k; ++j)
      steps.push_back(matpow(transition, f[j + 1] - f[j]));

    std::vector<Rat> mass(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      Rat m = start[coords[0][i]];
      for (std::size_t j = 0; j + 1 < k && m != 0; ++j)
        m *= steps[j][coords[j][i]][coords[j + 1][i]];
      mass[i] = m;
    }
    return mass;
  };
  return fam;
}

ConsistentFamily ConsistentFamily::custom(
    std::optional<std::vector<Index>> universe, std::function<FinBool(Index)> factor,
    std::function<std::vector<Rat>(const std::vector<Index>&)> marginal) {
  ConsistentFamily fam;
  if (universe) fam.universe_ = canonical_index_set(std::move(*universe));
  fam.factor_ = std::move(factor);
  fam.marginal_ = std::move(marginal);
  return fam;
}

bool ConsistentFamily::in_universe(Index i) const {
  if (!universe_) return i >= 1;
  return std::binary_search(universe_->begin(), universe_->end(), i);
}

FinBool ConsistentFamily::factor(Index i) const {
  if (!in_universe(i))
    fail("UnknownIndex", "index " + std::to_string(i) + " is outside the universe");
  return factor_(i);
}

FinBool ConsistentFamily::tensor_algebra(const std::vector<Index>& f) const {
  auto fs = canonical_index_set(f);
  if (fs.empty()) fail("UnknownIndex", "empty index set");
  std::vector<FinBool> factors;
  factors.reserve(fs.size());
  for (Index i : fs) factors.push_back(factor(i));
  return coproduct(factors).algebra;
}

std::vector<Rat> ConsistentFamily::marginal(const std::vector<Index>& f) const {
  auto fs = canonical_index_set(f);
  if (fs.empty()) fail("UnknownIndex", "empty index set");
  for (Index i : fs) factor(i);  // UnknownIndex guard
  return marginal_(fs);
}

std::vector<Rat> project_marginal(const ConsistentFamily& family, const std::vector<Index>& f,
                                  const std::vector<Index>& fprime,
                                  const std::vector<Rat>& marginal_fprime) {
  auto fs = canonical_index_set(f);
  auto fps = canonical_index_set(fprime);
  if (!index_subset(fs, fps)) fail("UnknownIndex", "F must be a subset of F'");

  auto coords_prime = tensor_coordinates(family, fps);
  auto coords = tensor_coordinates(family, fs);
  const std::size_t n_prime = coords_prime.front().size();
  const std::size_t n = coords.front().size();
  if (marginal_fprime.size() != n_prime)
    fail("InvalidMeasure", "marginal has the wrong dimension");

  // Position of each F index inside F'.
  std::vector<std::size_t> pos(fs.size());
  for (std::size_t q = 0; q < fs.size(); ++q)
    pos[q] = static_cast<std::size_t>(
        std::lower_bound(fps.begin(), fps.end(), fs[q]) - fps.begin());

  // Index of the projected atom: coordinates over F determine it uniquely.
  // Build a lookup keyed by the coordinate tuple.
  std::map<std::vector<std::size_t>, std::size_t> atom_of;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> key(fs.size());
    for (std::size_t q = 0; q < fs.size(); ++q) key[q] = coords[q][i];
    atom_of[key] = i;
  }

  std::vector<Rat> out(n, Rat(0));
  for (std::size_t ip = 0; ip < n_prime; ++ip) {
    std::vector<std::size_t> key(fs.size());
    for (std::size_t q = 0; q < fs.size(); ++q) key[q] = coords_prime[pos[q]][ip];
    out[atom_of.at(key)] += marginal_fprime[ip];
  }
  return out;
}

Bitset lift_event(const ConsistentFamily& family, const std::vector<Index>& f,
                  const Bitset& event, const std::vector<Index>& fprime) {
  auto fs = canonical_index_set(f);
  auto fps = canonical_index_set(fprime);
  if (!index_subset(fs, fps)) fail("UnknownIndex", "F must be a subset of F'");

  auto coords_prime = tensor_coordinates(family, fps);
  auto coords = tensor_coordinates(family, fs);
  const std::size_t n_prime = coords_prime.front().size();
  const std::size_t n = coords.front().size();
  if (event.size() != n) fail("InvalidMeasure", "event has the wrong dimension");

  std::vector<std::size_t> pos(fs.size());
  for (std::size_t q = 0; q < fs.size(); ++q)
    pos[q] = static_cast<std::size_t>(
        std::lower_bound(fps.begin(), fps.end(), fs[q]) - fps.begin());
  std::map<std::vector<std::size_t>, std::size_t> atom_of;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> key(fs.size());
    for (std::size_t q = 0; q < fs.size(); ++q) key[q] = coords[q][i];
    atom_of[key] = i;
  }

  Bitset lifted(n_prime);
  for (std::size_t ip = 0; ip < n_prime; ++ip) {
    std::vector<std::size_t> key(fs.size());
    for (std::size_t q = 0; q < fs.size(); ++q) key[q] = coords_prime[pos[q]][ip];
    if (event.test(atom_of.at(key))) lifted.set(ip);
  }
  return lifted;
}

ConsistencyReport check_consistency(
    const ConsistentFamily& family,
    std::span<const std::pair<std::vector<Index>, std::vector<Index>>> pairs) {
  ConsistencyReport report;
  for (const auto& [f, fprime] : pairs) {
    auto fs = canonical_index_set(f);
    auto fps = canonical_index_set(fprime);
    auto expected = family.marginal(fs);
    auto projected = project_marginal(family, fs, fps, family.marginal(fps));
    FinBool t = family.tensor_algebra(fs);
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (expected[i] != projected[i])
        report.violations.push_back(
            ConsistencyViolation{fs, fps, t.atom_name(i), expected[i], projected[i]});
    ++report.pairs_checked;
  }
  return report;
}

CylinderMeasure::CylinderMeasure(ConsistentFamily family) : family_(std::move(family)) {}

const std::vector<Rat>& CylinderMeasure::verified_marginal(const std::vector<Index>& f) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
  }

  auto mass = family_.marginal(f);
  Rat total = 0;
  for (const auto& m : mass) {
    if (m < 0)
      fail("InconsistentFamily", "negative marginal mass over F");
    total += m;
  }
  if (total != 1) fail("InconsistentFamily", "marginal over F does not sum to 1");

  // Audit the full chain below F; the cache makes each pair checked once.
  if (f.size() > 1) {
    auto index_set = [](const std::vector<Index>& is) {
      std::string out = "{";
      for (std::size_t q = 0; q < is.size(); ++q)
        out += (q ? "," : "") + std::to_string(is[q]);
      return out + "}";
    };
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<Index> sub;
      for (std::size_t q = 0; q < f.size(); ++q)
        if (q != drop) sub.push_back(f[q]);
      const auto& expected = verified_marginal(sub);
      auto projected = project_marginal(family_, sub, f, mass);
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (expected[i] != projected[i]) {
          FinBool t = family_.tensor_algebra(sub);
          fail("InconsistentFamily",
               "pushforward of marginal(F' = " + index_set(f) +
                   ") disagrees with marginal(F = " + index_set(sub) + ") at atom \"" +
                   t.atom_name(i) + "\": " + rat_to_string(expected[i]) + " vs " +
                   rat_to_string(projected[i]));
        }
    }
  }

  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(f, std::move(mass));
  (void)inserted;  // a racing fill computed the identical value
  return it->second;
}

Rat CylinderMeasure::query(const std::vector<Index>& f, const Bitset& event) const {
  auto fs = canonical_index_set(f);
  if (fs.empty()) fail("UnknownIndex", "empty index set");
  const auto& mass = verified_marginal(fs);
  if (event.size() != mass.size()) fail("InvalidMeasure", "event has the wrong dimension");
  Rat out = 0;
  for (std::size_t i = 0; i < mass.size(); ++i)
    if (event.test(i)) out += mass[i];
  return out;
}

Rat CylinderMeasure::query(const std::vector<Index>& f,
                           const std::vector<std::vector<std::string>>& event_tuples) const {
  auto fs = canonical_index_set(f);
  FinBool t = family_.tensor_algebra(fs);
  Bitset event(t.atom_count());
  for (const auto& tuple : event_tuples) {
    if (tuple.size() != fs.size())
      fail("InvalidMeasure", "event tuple arity does not match the index set");
    std::string name;
    for (std::size_t q = 0; q < tuple.size(); ++q) {
      if (q) name += '|';
      name += tuple[q];
    }
    event.set(t.index_of(name));
  }
  return query(fs, event);
}

Rat CylinderMeasure::query_via(const std::vector<Index>& f, const Bitset& event,
                               const std::vector<Index>& fprime) const {
  auto fs = canonical_index_set(f);
  auto fps = canonical_index_set(fprime);
  return query(fps, lift_event(family_, fs, event, fps));
}

}  // namespace maw
