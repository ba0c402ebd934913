#include "maw/serialize.hpp"

#include <json.hpp>

namespace maw {

namespace {

using Json = nlohmann::json;  // std::map-backed: object keys dump sorted

Json parse_checked(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());  // carries the byte position
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

/// Identifiers are either plain (no separators) or well-formed tuples of
/// non-empty parts, so serialized products round-trip.
void check_identifier(const std::string& name) {
  if (name.empty()) throw ParseError("empty identifier");
  std::string part;
  for (char ch : name) {
    if (ch == '|' || ch == '&') {
      if (part.empty()) throw ParseError("malformed tuple identifier \"" + name + "\"");
      part.clear();
    } else {
      part += ch;
    }
  }
  if (part.empty()) throw ParseError("malformed tuple identifier \"" + name + "\"");
}

FinBool algebra_from_names(std::vector<std::string> names) {
  for (const auto& n : names) check_identifier(n);
  return FinBool::with_tuple_atoms(std::move(names));
}

Json measure_json(const std::vector<std::string>& keys, const std::vector<Rat>& values) {
  Json j = Json::object();
  for (std::size_t i = 0; i < keys.size(); ++i) j[keys[i]] = rat_to_string(values[i]);
  return j;
}

std::vector<Rat> measure_from_json(const Json& j, const FinBool& algebra) {
  if (!j.is_object()) throw ParseError("measure must be an object");
  if (j.size() != algebra.atom_count())
    throw ParseError("measure must assign a value to every atom");
  std::vector<Rat> mass(algebra.atom_count());
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("rationals are \"p/q\" strings");
    mass[algebra.index_of(key)] = rat_from_string(value.get<std::string>());
  }
  return mass;
}

Json algebra_json(const FinBool& b) { return Json{{"atoms", b.atoms()}}; }

Json prob_json(const ProbAlgebra& x) {
  return Json{{"atoms", x.atoms()}, {"measure", measure_json(x.atoms(), x.masses())}};
}

ProbAlgebra prob_from_json(const Json& j) {
  FinBool algebra = algebra_from_names(string_list(field(j, "atoms"), "atoms"));
  return ProbAlgebra(algebra, measure_from_json(field(j, "measure"), algebra));
}

MeasuredBool measured_from_json(const Json& j) {
  FinBool algebra = algebra_from_names(string_list(field(j, "atoms"), "atoms"));
  return MeasuredBool(algebra, measure_from_json(field(j, "measure"), algebra));
}

Json morphism_map_json(const ProbMorphism& t) {
  Json map = Json::object();
  for (std::size_t a = 0; a < t.source().atom_count(); ++a)
    map[t.source().algebra().atom_name(a)] = t.target().algebra().atom_name(t.apply(a));
  return Json{{"map", map}};
}

std::vector<std::size_t> point_map_from_json(const Json& j, const FinBool& source,
                                             const FinBool& target) {
  if (!j.is_object()) throw ParseError("map must be an object");
  if (j.size() != source.atom_count()) throw ParseError("map must be total on the source");
  std::vector<std::size_t> map(source.atom_count());
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("map values must be atom names");
    map[source.index_of(key)] = target.index_of(value.get<std::string>());
  }
  return map;
}

ProbMorphism morphism_from_json(const Json& j) {
  ProbAlgebra source = prob_from_json(field(j, "source"));
  ProbAlgebra target = prob_from_json(field(j, "target"));
  auto map = point_map_from_json(field(j, "map"), source.algebra(), target.algebra());
  return ProbMorphism(std::move(source), std::move(target), std::move(map));
}

Json elem_json(const FuncAlg& a, const FuncElem& f) {
  Json re = Json::object(), im = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& name = a.base().algebra().atom_name(i);
    re[name] = rat_to_string(f[i].re);
    im[name] = rat_to_string(f[i].im);
  }
  return Json{{"im", im}, {"re", re}};
}

FuncElem elem_from_json(const FuncAlg& a, const Json& j) {
  const FinBool& algebra = a.base().algebra();
  FuncElem f(a.dim());
  const Json& re = field(j, "re");
  if (!re.is_object() || re.size() != a.dim())
    throw ParseError("\"re\" must assign a value to every atom");
  for (const auto& [key, value] : re.items())
    f[algebra.index_of(key)].re = rat_from_string(value.get<std::string>());
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (!im.is_object() || im.size() != a.dim())
      throw ParseError("\"im\" must assign a value to every atom");
    for (const auto& [key, value] : im.items())
      f[algebra.index_of(key)].im = rat_from_string(value.get<std::string>());
  }
  return f;
}

}  // namespace

std::string serialize_algebra(const FinBool& b) { return dump(algebra_json(b)); }

FinBool parse_algebra(const std::string& text) {
  return algebra_from_names(string_list(field(parse_checked(text), "atoms"), "atoms"));
}

std::string serialize_hom(const BoolHom& h) {
  Json dual = Json::object();
  for (std::size_t c = 0; c < h.target().atom_count(); ++c)
    dual[h.target().atom_name(c)] = h.source().atom_name(h.dual_map()[c]);
  return dump(Json{{"dual_map", dual},
                   {"source", algebra_json(h.source())},
                   {"target", algebra_json(h.target())}});
}

BoolHom parse_hom(const std::string& text) {
  Json j = parse_checked(text);
  FinBool source = algebra_from_names(string_list(field(field(j, "source"), "atoms"), "atoms"));
  FinBool target = algebra_from_names(string_list(field(field(j, "target"), "atoms"), "atoms"));
  auto dual = point_map_from_json(field(j, "dual_map"), target, source);
  return BoolHom(std::move(source), std::move(target), std::move(dual));
}

std::string serialize_stone_space(const StoneSpace& s) {
  return dump(Json{{"points", s.points()}});
}

StoneSpace parse_stone_space(const std::string& text) {
  auto names = string_list(field(parse_checked(text), "points"), "points");
  for (const auto& n : names) check_identifier(n);
  return StoneSpace::with_tuple_points(std::move(names));
}

std::string serialize_delete_space(const DeleteSpace& d) {
  std::vector<std::string> null_names;
  for (std::size_t i = 0; i < d.space().point_count(); ++i)
    if (d.point_is_null(i)) null_names.push_back(d.space().point_name(i));
  return dump(Json{{"null", null_names}, {"points", d.space().points()}});
}

DeleteSpace parse_delete_space(const std::string& text) {
  Json j = parse_checked(text);
  auto names = string_list(field(j, "points"), "points");
  for (const auto& n : names) check_identifier(n);
  StoneSpace space = StoneSpace::with_tuple_points(std::move(names));
  Bitset nulls(space.point_count());
  for (const auto& n : string_list(field(j, "null"), "null")) nulls.set(space.index_of(n));
  return DeleteSpace(std::move(space), std::move(nulls));
}

std::string serialize_prob_algebra(const ProbAlgebra& x) { return dump(prob_json(x)); }

ProbAlgebra parse_prob_algebra(const std::string& text) {
  return prob_from_json(parse_checked(text));
}

std::string serialize_measured(const MeasuredBool& m) {
  return dump(Json{{"atoms", m.algebra().atoms()},
                   {"measure", measure_json(m.algebra().atoms(), m.masses())}});
}

MeasuredBool parse_measured(const std::string& text) {
  return measured_from_json(parse_checked(text));
}

std::string serialize_morphism(const ProbMorphism& t) {
  Json j = morphism_map_json(t);
  j["source"] = prob_json(t.source());
  j["target"] = prob_json(t.target());
  return dump(j);
}

ProbMorphism parse_morphism(const std::string& text) {
  return morphism_from_json(parse_checked(text));
}

std::string serialize_morphism_map(const ProbMorphism& t) {
  return dump(morphism_map_json(t));
}

std::string serialize_elem(const FuncAlg& a, const FuncElem& f) {
  return dump(elem_json(a, f));
}

FuncElem parse_elem(const FuncAlg& a, const std::string& text) {
  return elem_from_json(a, parse_checked(text));
}

std::string serialize_kernel(const Kernel& k) {
  Json j = Json::object();
  const auto& x = k.base.source();
  const auto& y = k.base.target();
  for (std::size_t yy = 0; yy < y.atom_count(); ++yy) {
    Json fiber = Json::object();
    for (std::size_t a = 0; a < x.atom_count(); ++a)
      fiber[x.algebra().atom_name(a)] = rat_to_string(k.fibers[yy][a]);
    j[y.algebra().atom_name(yy)] = std::move(fiber);
  }
  return dump(j);
}

std::string serialize_state(const FiniteState& s) {
  return dump(Json{{"points", s.points}, {"state", measure_json(s.points, s.values)}});
}

FiniteState parse_state(const std::string& text) {
  Json j = parse_checked(text);
  FiniteState out;
  out.points = string_list(field(j, "points"), "points");
  for (const auto& n : out.points) check_identifier(n);
  FinBool guard = FinBool::with_tuple_atoms(out.points);
  auto values = measure_from_json(field(j, "state"), guard);
  // measure_from_json returns values in the guard's (sorted) order; keep the
  // caller's point order aligned with it.
  out.points = guard.atoms();
  out.values = std::move(values);
  return out;
}

std::string serialize_model(const ConcreteModel& w) {
  Json inclusion = Json::object();
  for (std::size_t a = 0; a < w.modeled().atom_count(); ++a)
    inclusion[w.modeled().algebra().atom_name(a)] = w.points().point_name(w.inclusion()[a]);
  return dump(Json{{"inclusion", inclusion},
                   {"measure", measure_json(w.points().points(), w.masses())},
                   {"points", w.points().points()}});
}

std::string serialize_reports(const std::vector<LawReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports)
    list.push_back(Json{{"checked", r.checked}, {"law", r.law}, {"violations", r.violations}});
  return dump(Json{{"reports", list}});
}

std::string serialize_rat(const Rat& r) { return rat_to_string(r) + "\n"; }

std::string serialize_gauss(const GaussRat& z) {
  return dump(Json{{"im", rat_to_string(z.im)}, {"re", rat_to_string(z.re)}});
}

ConsistentFamily parse_family(const std::string& text) {
  Json j = parse_checked(text);
  const Json& ctor = field(j, "constructor");
  if (!ctor.is_string()) throw ParseError("\"constructor\" must be a string");
  const std::string name = ctor.get<std::string>();
  if (name == "iid") return ConsistentFamily::iid(prob_from_json(field(j, "factor")));
  if (name == "markov") {
    FinBool states = algebra_from_names(string_list(field(j, "states"), "states"));
    auto initial = measure_from_json(field(j, "initial"), states);
    const Json& tj = field(j, "transition");
    if (!tj.is_object() || tj.size() != states.atom_count())
      throw ParseError("transition must have one row per state");
    std::vector<std::vector<Rat>> rows(states.atom_count());
    for (const auto& [key, value] : tj.items())
      rows[states.index_of(key)] = measure_from_json(value, states);
    return ConsistentFamily::markov(std::move(states), std::move(initial), std::move(rows));
  }
  throw ParseError("unknown family constructor \"" + name + "\"");
}

CylinderQuery parse_cylinder(const std::string& text) {
  Json j = parse_checked(text);
  CylinderQuery out;
  const Json& f = field(j, "F");
  if (!f.is_array()) throw ParseError("\"F\" must be an array of indices");
  for (const auto& v : f) {
    if (!v.is_number_unsigned()) throw ParseError("indices must be non-negative integers");
    out.indices.push_back(v.get<Index>());
  }
  const Json& e = field(j, "E");
  if (!e.is_array()) throw ParseError("\"E\" must be an array of atom tuples");
  for (const auto& tuple : e) out.tuples.push_back(string_list(tuple, "event tuple"));
  return out;
}

ActionSpec parse_action(const std::string& text) {
  Json j = parse_checked(text);
  ActionSpec out{prob_from_json(field(j, "algebra")), {}};
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
  for (const auto& g : gens) {
    auto map =
        point_map_from_json(field(g, "map"), out.space.algebra(), out.space.algebra());
    out.generators.emplace_back(out.space, out.space, std::move(map));
  }
  return out;
}

RepresentSpec parse_represent(const std::string& text) {
  Json j = parse_checked(text);
  RepresentSpec out{prob_from_json(field(j, "algebra")),
                    StoneSpace(),
                    {}};
  auto names = string_list(field(j, "points"), "points");
  for (const auto& n : names) check_identifier(n);
  out.points = StoneSpace::with_tuple_points(std::move(names));
  const Json& hom = field(j, "hom");
  if (!hom.is_object() || hom.size() != out.points.point_count())
    throw ParseError("\"hom\" must assign an element to every point");
  out.element_map.assign(out.points.point_count(), Bitset(out.space.atom_count()));
  for (const auto& [key, value] : hom.items()) {
    Bitset e(out.space.atom_count());
    for (const auto& atom : string_list(value, "element"))
      e.set(out.space.algebra().index_of(atom));
    out.element_map[out.points.index_of(key)] = std::move(e);
  }
  return out;
}

MorphismElem parse_condexp(const std::string& text) {
  Json j = parse_checked(text);
  MorphismElem out{morphism_from_json(field(j, "morphism")), {}};
  out.elem = elem_from_json(linfty(out.morphism.source()), field(j, "f"));
  return out;
}

AlgebraElem parse_algebra_elem(const std::string& text) {
  Json j = parse_checked(text);
  AlgebraElem out{prob_from_json(field(j, "algebra")), {}};
  out.elem = elem_from_json(linfty(out.space), field(j, "f"));
  return out;
}

LpQuery parse_lpnorm(const std::string& text) {
  Json j = parse_checked(text);
  LpQuery out{prob_from_json(field(j, "algebra")), {}, LpExponent::One};
  out.elem = elem_from_json(linfty(out.space), field(j, "f"));
  const Json& p = field(j, "p");
  if (!p.is_string()) throw ParseError("\"p\" must be \"1\", \"2\" or \"inf\"");
  const std::string ps = p.get<std::string>();
  if (ps == "1")
    out.p = LpExponent::One;
  else if (ps == "2")
    out.p = LpExponent::Two;
  else if (ps == "inf")
    out.p = LpExponent::Infinity;
  else
    throw ParseError("\"p\" must be \"1\", \"2\" or \"inf\"");
  return out;
}

RelProductSpec parse_relprod(const std::string& text) {
  Json j = parse_checked(text);
  return RelProductSpec{morphism_from_json(field(j, "pi1")),
                        morphism_from_json(field(j, "pi2"))};
}

std::string serialize_relprod(const RelProduct& rp) {
  Json j;
  j["product"] = prob_json(rp.product);
  j["proj1"] = morphism_map_json(rp.proj1);
  j["proj2"] = morphism_map_json(rp.proj2);
  return dump(j);
}

std::string serialize_mes(const MesResult& r) {
  Json quotient = Json::object();
  for (std::size_t c = 0; c < r.quotient.target().atom_count(); ++c)
    quotient[r.quotient.target().atom_name(c)] =
        r.quotient.source().atom_name(r.quotient.dual_map()[c]);
  return dump(Json{{"algebra", prob_json(r.algebra)}, {"quotient", {{"dual_map", quotient}}}});
}

std::string serialize_tensor(const Tensor& t) {
  Json marginals = Json::array();
  for (const auto& m : t.marginals) marginals.push_back(morphism_map_json(m));
  return dump(Json{{"marginals", marginals}, {"product", prob_json(t.product)}});
}

std::string serialize_invariant(const InvariantFactor& f) {
  return dump(Json{{"factor", prob_json(f.factor)},
                   {"projection", morphism_map_json(f.projection)}});
}

std::string serialize_ergodic(const ErgodicComponents& e) {
  Json flags = Json::object();
  for (std::size_t y = 0; y < e.factor.factor.atom_count(); ++y)
    flags[e.factor.factor.algebra().atom_name(y)] = static_cast<bool>(e.ergodic[y]);
  Json kernel = Json::object();
  const auto& x = e.kernel.base.source();
  for (std::size_t y = 0; y < e.factor.factor.atom_count(); ++y) {
    Json fiber = Json::object();
    for (std::size_t a = 0; a < x.atom_count(); ++a)
      fiber[x.algebra().atom_name(a)] = rat_to_string(e.kernel.fibers[y][a]);
    kernel[e.factor.factor.algebra().atom_name(y)] = std::move(fiber);
  }
  return dump(Json{{"ergodic", flags},
                   {"factor", prob_json(e.factor.factor)},
                   {"kernel", kernel},
                   {"projection", morphism_map_json(e.factor.projection)}});
}

std::string serialize_model_action(const ModelAction& a) {
  Json maps = Json::array();
  for (const auto& pm : a.action) {
    Json map = Json::object();
    for (std::size_t i = 0; i < pm.map.size(); ++i)
      map[pm.source.point_name(i)] = pm.target.point_name(pm.map[i]);
    maps.push_back(Json{{"map", map}});
  }
  Json model = parse_checked(serialize_model(a.model));
  return dump(Json{{"action", maps}, {"model", model}});
}

std::string serialize_point_map(const PointMap& m) {
  Json map = Json::object();
  for (std::size_t i = 0; i < m.map.size(); ++i)
    map[m.source.point_name(i)] = m.target.point_name(m.map[i]);
  return dump(Json{{"map", map}});
}

std::string serialize_measure(const std::vector<std::string>& keys,
                              const std::vector<Rat>& values) {
  return dump(Json{{"measure", measure_json(keys, values)}});
}

}  // namespace maw
