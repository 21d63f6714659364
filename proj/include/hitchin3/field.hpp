#pragma once

// Exact arithmetic in Q(i, 2^{1/3}).
//
// Elements are stored as c0 + c1*a + c2*a^2 with a = 2^{1/3} and each
// coordinate in Q(i).  Since a^3 = 2 and the field has no primitive cube
// root of unity, cube roots are unique whenever they exist.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace hitchin3 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(num, den);
}

namespace detail {

// floor(cbrt(n)) for n >= 0.
inline Integer integer_cbrt(const Integer& n) {
  if (n < 2) return n;
  Integer lo = 0;
  Integer hi = Integer(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 3 + 2);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) >> 1;
    if (mid * mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

inline Integer integer_sqrt(const Integer& n) { return n < 0 ? Integer(0) : boost::multiprecision::sqrt(n); }

}  // namespace detail

/// Element re + im*i of Q(i).
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(i)");
    Rational n = norm();
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Cube root inside Q(i); absent when the cube root is not a Gaussian rational.
inline std::optional<GaussianRational> gaussian_cbrt(const GaussianRational& u) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (u.is_zero()) return GaussianRational{};

  // u = (p + q i)/den; cbrt(u) = cbrt((p + q i) den^2) / den, and a cube root
  // of a Gaussian integer that lies in Q(i) is itself a Gaussian integer.
  Integer den = boost::multiprecision::lcm(denominator(u.re), denominator(u.im));
  Integer den2 = den * den;
  Integer mre = numerator(u.re) * (den / denominator(u.re)) * den2;
  Integer mim = numerator(u.im) * (den / denominator(u.im)) * den2;

  Integer norm = mre * mre + mim * mim;
  Integer r = detail::integer_cbrt(norm);
  if (r * r * r != norm) return std::nullopt;

  // With v = x + y i, |v|^2 = r and Re(v^3) = 4x^3 - 3 r x.
  auto g = [&](const Integer& x) { return 4 * x * x * x - 3 * r * x - mre; };
  Integer s = detail::integer_sqrt(r);
  Integer c = detail::integer_sqrt(r) / 2;

  // Integer roots of g on its three monotone pieces.
  std::array<std::pair<Integer, Integer>, 3> pieces{
      {{-s, -c - 1}, {-c, c}, {c + 1, s}}};
  std::array<bool, 3> increasing{true, false, true};
  for (std::size_t k = 0; k < 3; ++k) {
    Integer lo = pieces[k].first;
    Integer hi = pieces[k].second;
    if (lo > hi) continue;
    while (lo < hi) {
      Integer mid = lo + (hi - lo) / 2;
      bool below = increasing[k] ? g(mid) < 0 : g(mid) > 0;
      if (below)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (g(lo) != 0) continue;
    Integer y2 = r - lo * lo;
    Integer y = detail::integer_sqrt(y2);
    if (y * y != y2) continue;
    for (int sign : {1, -1}) {
      Integer yy = sign * y;
      Integer cre = lo * lo * lo - 3 * lo * yy * yy;
      Integer cim = 3 * lo * lo * yy - yy * yy * yy;
      if (cre == mre && cim == mim) {
        return GaussianRational{Rational(lo, den), Rational(yy, den)};
      }
    }
  }
  return std::nullopt;
}

/// c[0] + c[1]*2^{1/3} + c[2]*2^{2/3}.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : c_{GaussianRational(v), {}, {}} {}                    // NOLINT
  FieldElem(Rational v) : c_{GaussianRational(std::move(v)), {}, {}} {}    // NOLINT
  FieldElem(GaussianRational v) : c_{std::move(v), {}, {}} {}              // NOLINT
  FieldElem(GaussianRational c0, GaussianRational c1, GaussianRational c2)
      : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  static FieldElem cbrt2() { return FieldElem({}, GaussianRational(1), {}); }
  static FieldElem i() { return FieldElem(GaussianRational::imaginary_unit()); }

  const GaussianRational& coord(std::size_t k) const { return c_[k]; }
  const std::array<GaussianRational, 3>& coords() const { return c_; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  bool is_one() const { return *this == FieldElem(1); }

  // Index of the only nonzero coordinate, if the element is u * a^j.
  std::optional<std::size_t> monomial_index() const {
    std::optional<std::size_t> idx;
    for (std::size_t k = 0; k < 3; ++k) {
      if (c_[k].is_zero()) continue;
      if (idx) return std::nullopt;
      idx = k;
    }
    return idx;
  }

  FieldElem operator-() const { return {-c_[0], -c_[1], -c_[2]}; }
  FieldElem& operator+=(const FieldElem& o) {
    for (std::size_t k = 0; k < 3; ++k) c_[k] += o.c_[k];
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) {
    for (std::size_t k = 0; k < 3; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }

  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    // a^3 = 2 folds the a^3 and a^4 terms back into the basis.
    GaussianRational two(2);
    return {x[0] * y[0] + two * (x[1] * y[2] + x[2] * y[1]),
            x[0] * y[1] + x[1] * y[0] + two * (x[2] * y[2]),
            x[0] * y[2] + x[1] * y[1] + x[2] * y[0]};
  }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem inverse() const;
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  FieldElem pow(long long e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                 : static_cast<unsigned long long>(e);
    FieldElem acc(1);
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Read-only approximate embedding (real 2^{1/3}), diagnostics only.
  std::pair<double, double> approx() const {
    const double a = 1.2599210498948731648;
    double re = 0, im = 0, p = 1;
    for (std::size_t k = 0; k < 3; ++k, p *= a) {
      re += c_[k].re.convert_to<double>() * p;
      im += c_[k].im.convert_to<double>() * p;
    }
    return {re, im};
  }

 private:
  std::array<GaussianRational, 3> c_{};
};

inline FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }

/// Multiplicative inverse by Gaussian elimination on the multiplication-by-a
/// matrix over Q(i) in the basis (1, a, a^2).
inline FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  const auto& x = c_;
  GaussianRational two(2);
  // Columns are a*1, a*alpha, a*alpha^2.
  std::array<std::array<GaussianRational, 4>, 3> m{{
      {x[0], two * x[2], two * x[1], GaussianRational(1)},
      {x[1], x[0], two * x[2], GaussianRational(0)},
      {x[2], x[1], x[0], GaussianRational(0)},
  }};
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    while (piv < 3 && m[piv][col].is_zero()) ++piv;
    if (piv == 3) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::swap(m[col], m[piv]);
    GaussianRational inv = m[col][col].inverse();
    for (auto& e : m[col]) e *= inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      GaussianRational factor = m[r][col];
      for (std::size_t k = 0; k < 4; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return {m[0][3], m[1][3], m[2][3]};
}

inline FieldElem field_inv(const FieldElem& a) { return a.inverse(); }

/// Exact 2^{k/3}.
inline FieldElem two_pow_third(long long k) {
  long long q = k >= 0 ? k / 3 : -((-k + 2) / 3);
  long long r = k - 3 * q;
  Rational scale = q >= 0 ? Rational(Integer(1) << static_cast<unsigned>(q))
                          : Rational(Integer(1), Integer(1) << static_cast<unsigned>(-q));
  std::array<GaussianRational, 3> c{};
  c[static_cast<std::size_t>(r)] = GaussianRational(scale);
  return {c[0], c[1], c[2]};
}

/// Cube root for elements of the form u * a^j with u in Q(i).  Only j = 0 can
/// succeed: the cube of any monomial v * a^k is v^3 * 2^k, which lies in Q(i).
/// Non-monomial inputs are reported absent.
inline std::optional<FieldElem> field_cbrt(const FieldElem& a) {
  if (a.is_zero()) return FieldElem{};
  auto idx = a.monomial_index();
  if (!idx || *idx != 0) return std::nullopt;
  const GaussianRational& u = a.coord(0);
  for (long long k = 0; k < 3; ++k) {
    GaussianRational scaled = u * GaussianRational(Rational(1, Integer(1) << static_cast<unsigned>(k)));
    if (auto v = gaussian_cbrt(scaled)) {
      FieldElem root = FieldElem(*v) * two_pow_third(k);
      if (root * root * root == a) return root;
    }
  }
  return std::nullopt;
}

}  // namespace hitchin3
