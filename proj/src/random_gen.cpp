#include "maw/random_gen.hpp"

#include <algorithm>
#include <numeric>

namespace maw {

namespace {

std::string padded(const std::string& prefix, std::size_t i) {
  std::string n = std::to_string(i);
  if (n.size() < 2) n = "0" + n;
  return prefix + n;
}

}  // namespace

std::vector<Rat> random_positive_masses(Rng& rng, std::size_t n, int max_weight) {
  std::uniform_int_distribution<int> w(1, max_weight);
  std::vector<long> weights(n);
  long total = 0;
  for (auto& x : weights) {
    x = w(rng);
    total += x;
  }
  std::vector<Rat> mass(n);
  for (std::size_t i = 0; i < n; ++i) mass[i] = Rat(weights[i], total);
  return mass;
}

ProbAlgebra random_prob_algebra(Rng& rng, std::size_t atoms, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(atoms);
  for (std::size_t i = 1; i <= atoms; ++i) names.push_back(padded(prefix, i));
  return ProbAlgebra(FinBool(std::move(names)), random_positive_masses(rng, atoms));
}

ProbMorphism random_fibered_morphism(Rng& rng, const ProbAlgebra& target,
                                     std::size_t max_fiber, const std::string& prefix) {
  std::uniform_int_distribution<std::size_t> fiber_size(1, max_fiber);
  std::uniform_int_distribution<int> w(1, 20);

  std::vector<std::string> names;
  std::vector<Rat> mass;
  std::vector<std::size_t> point_map;
  std::size_t next = 1;
  for (std::size_t y = 0; y < target.atom_count(); ++y) {
    const std::size_t k = fiber_size(rng);
    std::vector<long> weights(k);
    long total = 0;
    for (auto& x : weights) {
      x = w(rng);
      total += x;
    }
    for (std::size_t j = 0; j < k; ++j) {
      names.push_back(padded(prefix, next++));
      mass.push_back(Rat(target.mass(y) * Rat(weights[j], total)));
      point_map.push_back(y);
    }
  }
  // Names are zero-padded, so construction order is already canonical.
  ProbAlgebra source(FinBool(std::move(names)), std::move(mass));
  return ProbMorphism(std::move(source), target, std::move(point_map));
}

RandomAction random_permutation_action(Rng& rng, std::size_t atoms,
                                       std::size_t num_generators) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> cycle_class(atoms);
  std::iota(cycle_class.begin(), cycle_class.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (cycle_class[a] != a) a = cycle_class[a] = cycle_class[cycle_class[a]];
    return a;
  };
  for (std::size_t g = 0; g < num_generators; ++g) {
    std::vector<std::size_t> perm(atoms);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t a = 0; a < atoms; ++a) {
      std::size_t ra = find(a), rb = find(perm[a]);
      if (ra != rb) cycle_class[std::max(ra, rb)] = std::min(ra, rb);
    }
    perms.push_back(std::move(perm));
  }

  // Same weight within each orbit makes every generator measure-preserving.
  std::uniform_int_distribution<int> w(1, 9);
  std::vector<long> weight(atoms, 0);
  long total = 0;
  for (std::size_t a = 0; a < atoms; ++a) {
    std::size_t r = find(a);
    if (weight[r] == 0) weight[r] = w(rng);
    weight[a] = weight[r];
    total += weight[a];
  }
  std::vector<std::string> names;
  std::vector<Rat> mass;
  for (std::size_t a = 0; a < atoms; ++a) {
    names.push_back(padded("x", a + 1));
    mass.push_back(Rat(weight[a], total));
  }
  ProbAlgebra space(FinBool(std::move(names)), std::move(mass));

  RandomAction out{space, {}};
  for (auto& perm : perms) out.generators.emplace_back(space, space, std::move(perm));
  return out;
}

std::vector<Rat> random_rationals(Rng& rng, std::size_t n, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  std::vector<Rat> out(n);
  for (auto& r : out) r = Rat(num(rng), den(rng));
  return out;
}

FuncElem random_real_elem(Rng& rng, std::size_t n) {
  auto rs = random_rationals(rng, n);
  FuncElem f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = GaussRat(rs[i]);
  return f;
}

FuncElem random_gauss_elem(Rng& rng, std::size_t n) {
  auto re = random_rationals(rng, n);
  auto im = random_rationals(rng, n);
  FuncElem f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = GaussRat(re[i], im[i]);
  return f;
}

}  // namespace maw
