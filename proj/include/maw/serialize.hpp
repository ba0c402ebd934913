#pragma once

#include <string>
#include <vector>

#include "maw/canmodel.hpp"
#include "maw/disint.hpp"
#include "maw/funcalg.hpp"
#include "maw/kolmo.hpp"
#include "maw/lawcheck.hpp"
#include "maw/proba.hpp"
#include "maw/stoned.hpp"

namespace maw {

/**
 * The shared text format: JSON-shaped with "p/q" rationals in lowest terms
 * and object keys emitted in sorted order, so serialization is canonical
 * and byte-identical across runs.  '|' and '&' are reserved tuple
 * separators in identifiers.
 *
 *   algebra        {"atoms":["a","b"]}
 *   hom            {"source":{algebra},"target":{algebra},"dual_map":{"x":"a",...}}
 *   stone space    {"points":[...]}
 *   delete space   {"points":[...],"null":[...]}
 *   prob algebra   {"atoms":[...],"measure":{"a":"1/3",...}}   (zeros allowed
 *                  for measured algebras; strict positivity enforced by the
 *                  requesting operation)
 *   morphism       {"map":{"a":"y1",...}} inside a context, or standalone
 *                  {"source":{prob},"target":{prob},"map":{...}}
 *   element        {"im":{"a":"0",...},"re":{"a":"1/2",...}}
 *   kernel         {"y1":{"a":"1/3",...},...}
 *   state          {"points":[...],"state":{"p":"1/3",...}}
 *   model          {"inclusion":{...},"measure":{...},"points":[...]}
 *
 * parse(serialize(v)) = v exactly.
 */

std::string serialize_algebra(const FinBool& b);
FinBool parse_algebra(const std::string& text);

std::string serialize_hom(const BoolHom& h);
BoolHom parse_hom(const std::string& text);

std::string serialize_stone_space(const StoneSpace& s);
StoneSpace parse_stone_space(const std::string& text);

std::string serialize_delete_space(const DeleteSpace& d);
DeleteSpace parse_delete_space(const std::string& text);

std::string serialize_prob_algebra(const ProbAlgebra& x);
ProbAlgebra parse_prob_algebra(const std::string& text);

std::string serialize_measured(const MeasuredBool& m);
MeasuredBool parse_measured(const std::string& text);

/// Standalone morphism file with explicit endpoints.
std::string serialize_morphism(const ProbMorphism& t);
ProbMorphism parse_morphism(const std::string& text);
/// In-context form {"map":{...}} against known endpoints.
std::string serialize_morphism_map(const ProbMorphism& t);

std::string serialize_elem(const FuncAlg& a, const FuncElem& f);
FuncElem parse_elem(const FuncAlg& a, const std::string& text);

std::string serialize_kernel(const Kernel& k);

std::string serialize_state(const FiniteState& s);
FiniteState parse_state(const std::string& text);

std::string serialize_model(const ConcreteModel& w);

std::string serialize_reports(const std::vector<LawReport>& reports);

std::string serialize_rat(const Rat& r);  // bare canonical literal + newline
std::string serialize_gauss(const GaussRat& z);

/// Family files name a constructor and its parameters:
///   {"constructor":"iid","factor":{prob algebra}}
///   {"constructor":"markov","states":[...],"initial":{...},"transition":{state:{state:"p/q"}}}
ConsistentFamily parse_family(const std::string& text);

struct CylinderQuery {
  std::vector<Index> indices;
  std::vector<std::vector<std::string>> tuples;  // atom tuples over sorted indices
};
/// {"F":[1,3],"E":[["h","h"],...]}
CylinderQuery parse_cylinder(const std::string& text);

struct ActionSpec {
  ProbAlgebra space;
  std::vector<ProbMorphism> generators;
};
/// {"algebra":{prob},"generators":[{"map":{...}},...]}
ActionSpec parse_action(const std::string& text);

struct RepresentSpec {
  ProbAlgebra space;
  StoneSpace points;
  std::vector<Bitset> element_map;  // per point of K, an element of X
};
/// {"algebra":{prob},"points":[...],"hom":{"k":["a","b"],...}}
RepresentSpec parse_represent(const std::string& text);

struct MorphismElem {
  ProbMorphism morphism;
  FuncElem elem;  // over the morphism's source
};
/// {"morphism":{standalone morphism},"f":{element}}
MorphismElem parse_condexp(const std::string& text);

struct AlgebraElem {
  ProbAlgebra space;
  FuncElem elem;
};
/// {"algebra":{prob},"f":{element}}
AlgebraElem parse_algebra_elem(const std::string& text);

struct LpQuery {
  ProbAlgebra space;
  FuncElem elem;
  LpExponent p;
};
/// {"algebra":{prob},"f":{element},"p":"1"|"2"|"inf"}
LpQuery parse_lpnorm(const std::string& text);

struct RelProductSpec {
  ProbMorphism pi1, pi2;
};
/// {"pi1":{standalone morphism},"pi2":{standalone morphism}}
RelProductSpec parse_relprod(const std::string& text);

std::string serialize_relprod(const RelProduct& rp);
std::string serialize_mes(const MesResult& r);
std::string serialize_tensor(const Tensor& t);
std::string serialize_invariant(const InvariantFactor& f);
std::string serialize_ergodic(const ErgodicComponents& e);
std::string serialize_model_action(const ModelAction& a);
std::string serialize_point_map(const PointMap& m);
std::string serialize_measure(const std::vector<std::string>& keys,
                              const std::vector<Rat>& values);

}  // namespace maw
