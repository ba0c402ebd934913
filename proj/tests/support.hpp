#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "maw/funcalg.hpp"
#include "maw/proba.hpp"

namespace maw::test {

inline FinBool fb(std::initializer_list<std::string> atoms) {
  return FinBool(std::vector<std::string>(atoms));
}

inline ProbAlgebra pa(std::initializer_list<std::string> atoms,
                      std::initializer_list<std::string> masses) {
  std::vector<Rat> mass;
  for (const auto& m : masses) mass.push_back(rat_from_string(m));
  return ProbAlgebra(fb(atoms), std::move(mass));
}

inline ProbAlgebra uniform(std::initializer_list<std::string> atoms) {
  std::vector<std::string> names(atoms);
  const long n = static_cast<long>(names.size());
  return ProbAlgebra(FinBool(names), std::vector<Rat>(names.size(), Rat(1, n)));
}

inline FuncElem real_elem(std::initializer_list<std::string> entries) {
  FuncElem f;
  for (const auto& e : entries) f.push_back(GaussRat(rat_from_string(e)));
  return f;
}

inline Rat rq(const std::string& s) { return rat_from_string(s); }

}  // namespace maw::test
