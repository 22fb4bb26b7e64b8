// Quadratic surd extension of the rationals: values a + b*sqrt(t).
#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "casimir/rational.hpp"

namespace casimir {

/// Element of Q(sqrt(t)) with a fixed radicand per arithmetic context.
/// Normal form: b == 0 implies t == 0; otherwise t > 0 and t is not a
/// perfect square (square radicands fold into the rational part). Pure
/// rationals therefore mix freely with any radicand; combining two
/// genuine surds with different radicands throws.
class Surd {
 public:
  Surd() : a_(0), b_(0), t_(0) {}
  Surd(long n) : a_(n), b_(0), t_(0) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& a) : a_(a), b_(0), t_(0) {}  // NOLINT
  Surd(Rational a, Rational b, Rational t) : a_(std::move(a)), b_(std::move(b)), t_(std::move(t)) {
    normalize();
  }

  static Surd sqrt_of(const Rational& t) { return Surd(Rational(0), Rational(1), t); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return t_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Surd operator-() const { return make(-a_, -b_, t_); }

  Surd operator+(const Surd& o) const {
    Rational t = joint_radicand(o);
    return make(a_ + o.a_, b_ + o.b_, t);
  }
  Surd operator-(const Surd& o) const { return *this + (-o); }
  Surd operator*(const Surd& o) const {
    Rational t = joint_radicand(o);
    return make(a_ * o.a_ + b_ * o.b_ * t, a_ * o.b_ + b_ * o.a_, t);
  }
  Surd operator/(const Surd& o) const {
    if (o.is_zero()) throw std::domain_error("Surd: division by zero");
    Rational t = joint_radicand(o);
    // conjugate rationalization; norm = a^2 - b^2 t is nonzero for o != 0
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * t;
    return make((a_ * o.a_ - b_ * o.b_ * t) / norm, (b_ * o.a_ - a_ * o.b_) / norm, t);
  }
  Surd& operator+=(const Surd& o) { *this = *this + o; return *this; }
  Surd& operator-=(const Surd& o) { *this = *this - o; return *this; }
  Surd& operator*=(const Surd& o) { *this = *this * o; return *this; }
  Surd& operator/=(const Surd& o) { *this = *this / o; return *this; }

  bool operator==(const Surd& o) const {
    if (is_rational() || o.is_rational()) return a_ == o.a_ && b_ == o.b_;
    return t_ == o.t_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  /// Exact sign without floating point: compares a^2 with b^2 t when the
  /// two contributions pull in opposite directions.
  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    Rational a2 = a_ * a_, b2t = b_ * b_ * t_;
    if (a2 > b2t) return a_.sign();
    if (a2 < b2t) return b_.sign();
    return 0;  // unreachable in normal form (t not a perfect square)
  }

  bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }

  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Surd conj() const { return make(a_, -b_, t_); }

  Surd inv() const { return Surd(1) / *this; }

  Surd pow(unsigned e) const {
    Surd r(1), b(*this);
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Exact square root within the same field when it exists: either the
  /// value is a perfect-square rational, a rational multiple of sqrt(t),
  /// or a nested radical that denests as (c + d*sqrt(t))^2.
  std::optional<Surd> sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Surd(0);
    if (is_rational()) {
      if (auto r = a_.sqrt_exact()) return Surd(*r);
      return Surd::sqrt_of(a_);  // introduces radicand a into the caller's context
    }
    if (a_.is_zero()) {
      // b*sqrt(t) = sqrt(b^2 t); fold if square, else no in-field root
      if (auto r = (b_ * b_ * t_).sqrt_exact()) return Surd(*r);
      return std::nullopt;
    }
    // solve (c + d sqrt(t))^2 = a + b sqrt(t): c^2 + d^2 t = a, 2 c d = b
    Rational disc = a_ * a_ - b_ * b_ * t_;
    auto r = disc.sqrt_exact();
    if (!r) return std::nullopt;
    for (int s = 0; s < 2; ++s) {
      Rational c2 = (s == 0 ? a_ + *r : a_ - *r) / Rational(2);
      if (c2.sign() <= 0) continue;
      auto c = c2.sqrt_exact();
      if (!c) continue;
      Rational d = b_ / (Rational(2) * *c);
      Surd root = make(*c, d, t_);
      if (root.sign() < 0) root = -root;
      if (root * root == *this) return root;
    }
    return std::nullopt;
  }

  double to_double(unsigned bits = 128) const {
    mpf_class fa(0, bits), fb(0, bits), ft(0, bits);
    fa = a_.raw();
    if (b_.is_zero()) return fa.get_d();
    fb = b_.raw();
    ft = t_.raw();
    mpf_class rt(0, bits);
    mpf_sqrt(rt.get_mpf_t(), ft.get_mpf_t());
    mpf_class res = fa + fb * rt;
    return res.get_d();
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    os << a_.str() << (b_.sign() < 0 ? " - " : " + ") << b_.abs().str() << "*sqrt(" << t_.str()
       << ")";
    return os.str();
  }

 private:
  static Surd make(Rational a, Rational b, Rational t) {
    Surd s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.t_ = std::move(t);
    s.normalize();
    return s;
  }

  Rational joint_radicand(const Surd& o) const {
    if (b_.is_zero()) return o.t_;
    if (o.b_.is_zero()) return t_;
    if (t_ != o.t_) throw std::invalid_argument("Surd: radicand mismatch");
    return t_;
  }

  void normalize() {
    if (b_.is_zero() || t_.is_zero()) {
      b_ = Rational(0);
      t_ = Rational(0);
      return;
    }
    if (t_.sign() < 0) throw std::domain_error("Surd: negative radicand");
    if (auto r = t_.sqrt_exact()) {
      a_ += b_ * *r;
      b_ = Rational(0);
      t_ = Rational(0);
    }
  }

  Rational a_, b_, t_;
};

inline Surd operator+(long a, const Surd& b) { return Surd(a) + b; }
inline Surd operator-(long a, const Surd& b) { return Surd(a) - b; }
inline Surd operator*(long a, const Surd& b) { return Surd(a) * b; }

}  // namespace casimir
