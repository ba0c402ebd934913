#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "maw/errors.hpp"

namespace maw {

/// Exact rational scalar.  Always kept in lowest terms with positive
/// denominator by the backend; equality is exact.
using Rat = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; plain "p" when q = 1.  This is the canonical text
/// form used across the whole workbench.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses the canonical form (optionally signed, optional "/q" part).
/// Rejects anything else, including zero denominators.
inline Rat rat_from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw ParseError("bad rational literal \"" + std::string(text) + "\"");
  const boost::multiprecision::cpp_int p{std::string(num)};
  const boost::multiprecision::cpp_int q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rat(p, q);
}

inline Rat rat_sum(const std::vector<Rat>& xs) {
  Rat s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

/// Gaussian rational: exact complex scalar with rational real and imaginary
/// parts.  Everything in scope is polynomial in the entries, so this field
/// is closed under all operations the workbench performs.
struct GaussRat {
  Rat re = 0;
  Rat im = 0;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit from Rat is intended
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, Rat(-im)}; }
  /// |z|^2, exact.  Square roots leave the field, so magnitudes are always
  /// reported squared.
  Rat norm_sq() const { return Rat(re * re + im * im); }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {Rat(a.re + b.re), Rat(a.im + b.im)};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {Rat(a.re - b.re), Rat(a.im - b.im)};
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
  }
  friend GaussRat operator*(const Rat& c, const GaussRat& a) {
    return {Rat(c * a.re), Rat(c * a.im)};
  }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

}  // namespace maw
