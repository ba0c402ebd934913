#include "maw/funcalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maw {

namespace {

void check_dim(const FuncAlg& a, const FuncElem& f) {
  if (f.size() != a.dim()) fail("DimensionMismatch", "element has the wrong dimension");
}

}  // namespace

FuncElem FuncAlg::indicator(const Bitset& e) const {
  FuncElem f(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (e.test(i)) f[i] = GaussRat(Rat(1));
  return f;
}

FuncElem add(const FuncElem& f, const FuncElem& g) {
  FuncElem out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
  return out;
}

FuncElem sub(const FuncElem& f, const FuncElem& g) {
  FuncElem out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] - g[i];
  return out;
}

FuncElem mul(const FuncElem& f, const FuncElem& g) {
  FuncElem out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

FuncElem conj(const FuncElem& f) {
  FuncElem out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].conj();
  return out;
}

bool is_real(const FuncElem& f) {
  return std::all_of(f.begin(), f.end(), [](const GaussRat& z) { return z.is_real(); });
}

FuncAlg linfty(const ProbAlgebra& x) { return FuncAlg(x); }

GaussRat integrate(const FuncAlg& a, const FuncElem& f) {
  check_dim(a, f);
  GaussRat s;
  for (std::size_t i = 0; i < f.size(); ++i) s += a.base().mass(i) * f[i];
  return s;
}

Rat sup_norm_sq(const FuncElem& f) {
  Rat m = 0;
  for (const auto& z : f) m = std::max(m, z.norm_sq());
  return m;
}

bool is_projection(const FuncAlg& a, const FuncElem& f) {
  check_dim(a, f);
  return std::all_of(f.begin(), f.end(), [](const GaussRat& z) {
    return z.is_real() && (z.re == 0 || z.re == 1);
  });
}

std::vector<FuncElem> all_projections(const FuncAlg& a) {
  // f = f* forces real entries; f = f^2 forces each entry to solve r = r^2.
  std::vector<FuncElem> out;
  const std::size_t n = a.dim();
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    FuncElem f(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) f[i] = GaussRat(Rat(1));
    out.push_back(std::move(f));
  }
  return out;
}

FuncElem koopman_apply(const ProbMorphism& t, const FuncElem& g) {
  if (g.size() != t.target().atom_count())
    fail("DimensionMismatch", "Koopman input must live on the morphism's target");
  FuncElem out(t.source().atom_count());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = g[t.apply(a)];
  return out;
}

ProbAlgebra idem(const FuncAlg& a) {
  // Minimal projections are the single-coordinate indicators; their traces
  // are the atom masses.
  const ProbAlgebra& base = a.base();
  std::vector<Rat> mass;
  mass.reserve(base.atom_count());
  for (std::size_t i = 0; i < base.atom_count(); ++i) {
    FuncElem p(a.dim());
    p[i] = GaussRat(Rat(1));
    mass.push_back(integrate(a, mul(p, conj(p))).re);
  }
  return ProbAlgebra(base.algebra(), std::move(mass));
}

ProbMorphism idem_of_operator(const FuncAlg& domain_y, const FuncAlg& codomain_x,
                              const std::function<FuncElem(const FuncElem&)>& op) {
  const std::size_t nx = codomain_x.dim();
  const std::size_t ny = domain_y.dim();
  std::vector<std::size_t> point_map(nx, ny);
  for (std::size_t b = 0; b < ny; ++b) {
    FuncElem p(ny);
    p[b] = GaussRat(Rat(1));
    FuncElem q = op(p);
    if (!is_projection(codomain_x, q))
      fail("NotAHomomorphism", "operator does not preserve projections");
    for (std::size_t a = 0; a < nx; ++a) {
      if (q[a].re != 1) continue;
      if (point_map[a] != ny)
        fail("NotAHomomorphism", "images of minimal projections overlap");
      point_map[a] = b;
    }
  }
  for (std::size_t a = 0; a < nx; ++a)
    if (point_map[a] == ny) fail("NotAHomomorphism", "images do not sum to the unit");
  return ProbMorphism(codomain_x.base(), domain_y.base(), std::move(point_map));
}

FuncElem cond_exp(const ProbMorphism& pi, const FuncElem& f) {
  if (f.size() != pi.source().atom_count())
    fail("DimensionMismatch", "element must live on the morphism's source");
  // Fibers are never empty: the pushforward identity and strict positivity
  // make the point map surjective.
  FuncElem out(pi.target().atom_count());
  for (std::size_t a = 0; a < f.size(); ++a) out[pi.apply(a)] += pi.source().mass(a) * f[a];
  for (std::size_t b = 0; b < out.size(); ++b) {
    const Rat inv = Rat(1) / pi.target().mass(b);
    out[b] = inv * out[b];
  }
  return out;
}

Rat lp_norm(const FuncAlg& a, const FuncElem& f, LpExponent p) {
  check_dim(a, f);
  switch (p) {
    case LpExponent::Two:
      return integrate(a, mul(f, conj(f))).re;
    case LpExponent::Infinity:
      return sup_norm_sq(f);
    case LpExponent::One: {
      if (!is_real(f))
        fail("RealValuedRequired", "p = 1 needs real rational entries so |f| stays rational");
      std::vector<Rat> abs(f.size());
      for (std::size_t i = 0; i < f.size(); ++i)
        abs[i] = f[i].re < 0 ? Rat(-f[i].re) : f[i].re;

      // Level-set integral over the sorted distinct values of |f|.
      std::set<Rat> values(abs.begin(), abs.end());
      Rat level = 0, previous = 0;
      for (const Rat& r : values) {
        if (r == 0) continue;
        Rat tail = 0;  // mu(|f| > previous)
        for (std::size_t i = 0; i < abs.size(); ++i)
          if (abs[i] > previous) tail += a.base().mass(i);
        level += (r - previous) * tail;
        previous = r;
      }

      Rat direct = 0;
      for (std::size_t i = 0; i < abs.size(); ++i) direct += abs[i] * a.base().mass(i);

      if (level != direct)
        throw std::logic_error("level-set and direct L1 evaluations disagree");
      return direct;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Rat> riesz_finite(const FiniteState& state) {
  if (state.values.size() != state.points.size())
    fail("NotAState", "one value per point required");
  Rat total = 0;
  for (const auto& v : state.values) {
    if (v < 0) fail("NotAState", "negative value on an indicator");
    total += v;
  }
  if (total != 1) fail("NotAState", "values on indicators must sum to 1");
  // lambda(f) = sum f(k) mu(k) forces mu(k) = lambda(1_k); nothing else can
  // represent the state, and this choice does.
  return state.values;
}

}  // namespace maw
