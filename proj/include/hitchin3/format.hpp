#pragma once

// Canonical text rendering.  Field elements render as
//   (q0) + (q1)*c2 + (q2)*c2^2
// with c2 = 2^{1/3}, zero coordinates omitted, and each Q(i) coordinate as
// "a/b + c/d*i".  Every rendering reparses with parse_coeff.

#include <array>
#include <cstdio>
#include <string>

#include "field.hpp"
#include "laurent.hpp"

namespace hitchin3 {

inline std::string render(const Rational& r) { return r.str(); }

inline std::string render(const GaussianRational& g) {
  if (g.is_zero()) return "0";
  std::string out;
  if (g.re != 0) out = render(g.re);
  if (g.im != 0) {
    Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
    std::string imag = mag == 1 ? "i" : render(mag) + "*i";
    if (out.empty())
      out = (g.im < 0 ? "-" : "") + imag;
    else
      out += (g.im < 0 ? " - " : " + ") + imag;
  }
  return out;
}

inline std::string render(const FieldElem& x) {
  if (x.is_zero()) return "0";
  static const std::array<const char*, 3> suffix{"", "*c2", "*c2^2"};
  std::string out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (x.coord(k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + render(x.coord(k)) + ")" + suffix[k];
  }
  return out;
}

inline std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "[" + render(it->second) + "]";
    if (it->first == 1)
      out += "*z";
    else if (it->first != 0)
      out += "*z^" + std::to_string(it->first);
  }
  return out;
}

inline std::string render(const LaurentFraction& f) {
  if (f.is_polynomial()) return render(f.num());
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

/// Non-normative decimal with 12 significant digits.
inline std::string approx_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.convert_to<double>());
  return buf;
}

}  // namespace hitchin3
