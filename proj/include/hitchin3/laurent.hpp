#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>

#include "field.hpp"

namespace hitchin3 {

/// Base surface: C = (P^1, {inf}) with differentials against dz, or
/// C* = (P^1, {0, inf}) with differentials against dz/z.
enum class SurfaceKind { AffineLine, PuncturedLine };

inline const char* to_string(SurfaceKind s) {
  return s == SurfaceKind::AffineLine ? "affine_line" : "punctured_line";
}

/// Sparse Laurent polynomial over FieldElem.  No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Terms = std::map<long long, FieldElem>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(FieldElem(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(FieldElem c) {                         // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, std::move(c));
  }

  static LaurentPoly monomial(FieldElem c, long long exp) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exp, std::move(c));
    return p;
  }
  static LaurentPoly z(long long exp = 1) { return monomial(FieldElem(1), exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElem coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? FieldElem{} : it->second;
  }

  void add_term(long long exp, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // std::nullopt is the -infinity marker of the zero polynomial.
  std::optional<long long> ord_low() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<long long> deg_high() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  const FieldElem& leading_coeff() const { return terms_.rbegin()->second; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator*(const FieldElem& s, const LaurentPoly& p) { return LaurentPoly(s) * p; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly acc(1);
    LaurentPoly base = *this;
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  LaurentPoly shifted(long long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  // p(z) -> p(1/z).
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Exact division by a monomial; throws when `m` is not a nonzero monomial.
  LaurentPoly divided_by_monomial(const LaurentPoly& m) const {
    if (!m.is_monomial()) throw Error(ErrorCode::DivisionByZero, "divisor is not a nonzero monomial");
    auto [me, mc] = *m.terms_.begin();
    FieldElem inv = mc.inverse();
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e - me, c * inv);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

enum class LaurentOp { Add, Sub, Mul };

inline LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Sub: return a - b;
    case LaurentOp::Mul: return a * b;
  }
  return {};
}

inline std::optional<long long> lp_ord_low(const LaurentPoly& a) { return a.ord_low(); }
inline std::optional<long long> lp_deg_high(const LaurentPoly& a) { return a.deg_high(); }

/// Order of vanishing at z = 0 and at z = inf (in the coordinate w = 1/z).
inline std::optional<long long> ord_at_zero(const LaurentPoly& a) { return a.ord_low(); }
inline std::optional<long long> ord_at_infinity(const LaurentPoly& a) {
  auto d = a.deg_high();
  if (!d) return std::nullopt;
  return -*d;
}

/// Cube root with coefficients in the field, or absent.  The leading
/// coefficient comes from field_cbrt, the rest from matching coefficients of
/// f^3 = q in descending order; the result is checked by a full cube.
inline std::optional<LaurentPoly> lp_cbrt(const LaurentPoly& q) {
  if (q.is_zero()) return LaurentPoly{};
  long long lo = *q.ord_low();
  long long hi = *q.deg_high();
  if ((hi - lo) % 3 != 0 || lo % 3 != 0) return std::nullopt;

  auto lead = field_cbrt(q.leading_coeff());
  if (!lead) return std::nullopt;

  const long long top = hi / 3;
  const long long bottom = lo / 3;
  LaurentPoly f = LaurentPoly::monomial(*lead, top);
  FieldElem denom_inv = (FieldElem(3) * *lead * *lead).inverse();
  for (long long e = top - 1; e >= bottom; --e) {
    // Coefficient of z^{2 top + e} in f^3 is 3 lead^2 f_e + (known terms).
    long long target = 2 * top + e;
    FieldElem known = f.pow(3).coeff(target);
    FieldElem next = (q.coeff(target) - known) * denom_inv;
    f.add_term(e, next);
  }
  if (f.pow(3) != q) return std::nullopt;
  return f;
}

/// Number of zeros of f in the open surface, with multiplicity.
inline long long lp_zero_count(const LaurentPoly& f, SurfaceKind surface) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero count of the zero polynomial");
  if (surface == SurfaceKind::AffineLine) return *f.deg_high();
  return *f.deg_high() - *f.ord_low();
}

/// num/den with den != 0.  Normalised to den = 1 whenever den is a monomial.
/// Quotient num/den when den divides num in the Laurent ring, else nullopt.
inline std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero Laurent polynomial");
  if (num.is_zero()) return LaurentPoly();
  const long long dl = *den.ord_low();
  const long long dh = *den.deg_high();
  const long long q_low = *num.ord_low() - dl;
  const FieldElem lead_inv = den.leading_coeff().inverse();
  LaurentPoly q;
  LaurentPoly r = num;
  while (!r.is_zero()) {
    const long long e = *r.deg_high() - dh;
    if (e < q_low) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(r.leading_coeff() * lead_inv, e);
    q += step;
    r -= step * den;
  }
  return q;
}

class LaurentFraction {
 public:
  LaurentFraction() : den_(1) {}
  LaurentFraction(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  LaurentFraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    normalise();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  std::optional<long long> ord_at_zero() const {
    if (num_.is_zero()) return std::nullopt;
    return *num_.ord_low() - *den_.ord_low();
  }
  std::optional<long long> ord_at_infinity() const {
    if (num_.is_zero()) return std::nullopt;
    return *den_.deg_high() - *num_.deg_high();
  }

  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) {
    return a + LaurentFraction(-b.num_, b.den_);
  }
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  LaurentFraction inverse() const {
    if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero fraction");
    return {den_, num_};
  }
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
    return a * b.inverse();
  }
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const LaurentFraction& a, const LaurentFraction& b) { return !(a == b); }

 private:
  void normalise() {
    if (den_.is_monomial()) {
      num_ = num_.divided_by_monomial(den_);
      den_ = LaurentPoly(1);
    } else if (auto q = lp_divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = LaurentPoly(1);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace hitchin3
