// Arbitrary-precision rational numbers on top of GMP's mpq.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

/// Exact rational with canonical form maintained after every operation
/// (denominator > 0, gcd(num, den) = 1). Immutable in spirit: all
/// operations return new values.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "num", "num/den", or a plain decimal like "-1.25".
  static Rational from_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac_len = s.size() - dot - 1;
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational r;
      r.v_ = mpq_class(num, den);
      r.v_.canonicalize();
      return r;
    }
    Rational r;
    r.v_ = mpq_class(s, 10);
    if (r.v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    r.v_.canonicalize();
    return r;
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(unsigned e) const {
    Rational r(1), b(*this);
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Exact square root if this is a perfect square of a rational.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r;
    r.v_ = mpq_class(rn, rd);
    r.v_.canonicalize();
    return r;
  }

  /// Conversion through an mpf of the requested precision (default 128 bits,
  /// headroom for 1e-12 comparisons downstream).
  double to_double(unsigned bits = 128) const {
    mpf_class f(0, bits);
    f = v_;
    return f.get_d();
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [lo, hi]. Stern-Brocot descent.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // now 0 < lo <= hi; continued-fraction descent
  Rational l = lo, h = hi;
  std::vector<mpz_class> cf;
  while (true) {
    mpz_class cl, fl;
    mpz_cdiv_q(cl.get_mpz_t(), l.num().get_mpz_t(), l.den().get_mpz_t());
    if (Rational(cl) <= h) {  // an integer lies in [l, h]
      cf.push_back(cl);
      break;
    }
    // no integer inside: floor(l) == floor(h), both non-integer
    mpz_fdiv_q(fl.get_mpz_t(), l.num().get_mpz_t(), l.den().get_mpz_t());
    Rational fr{fl};
    cf.push_back(fl);
    Rational nl = (h - fr).inv(), nh = (l - fr).inv();
    l = nl;
    h = nh;
  }
  // rebuild from continued fraction
  Rational v{cf.back()};
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    v = Rational{*it} + v.inv();
  }
  return v;
}

}  // namespace casimir
