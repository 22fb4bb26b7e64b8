// Dense univariate polynomials over an exact coefficient field.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

/// Coefficients ascending by degree; trailing zeros trimmed so the leading
/// coefficient is nonzero. The zero polynomial has an empty list and
/// degree() == -1. T must be a field with is_zero() for divmod/gcd.
template <typename T>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long n) {  // NOLINT(google-explicit-constructor)
    if (n != 0) c_.push_back(T(n));
  }
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const T& v) { return UniPoly(std::vector<T>{v}); }
  static UniPoly monomial(const T& v, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = v;
    return UniPoly(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("UniPoly: leading coeff of zero");
    return c_.back();
  }

  UniPoly operator-() const {
    std::vector<T> r(c_);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
  }
  UniPoly operator+(const UniPoly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const T& s) const {
    std::vector<T> r(c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
  }
  UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
  UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
  UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  template <typename U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  /// Euclidean division: returns (quotient, remainder), deg(rem) < deg(o).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& o) const {
    if (o.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly rem(*this);
    if (degree() < o.degree()) return {UniPoly(), rem};
    std::vector<T> q(degree() - o.degree() + 1, T(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
      std::size_t shift = rem.degree() - o.degree();
      T f = rem.lead() / o.lead();
      q[shift] = f;
      rem -= o * UniPoly::monomial(f, shift);
    }
    return {UniPoly(std::move(q)), rem};
  }

  UniPoly exact_div(const UniPoly& o) const {
    auto [q, r] = divmod(o);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * (T(1) / lead());
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")";
      if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

template <typename T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition: result[i] has multiplicity i+1 in p,
/// and p = lead * prod result[i]^(i+1) up to the constant factor.
template <typename T>
std::vector<UniPoly<T>> square_free(const UniPoly<T>& p) {
  std::vector<UniPoly<T>> out;
  if (p.degree() <= 0) return out;
  UniPoly<T> f = p.monic();
  UniPoly<T> g = gcd(f, f.derivative());
  UniPoly<T> w = f.exact_div(g);
  UniPoly<T> y = f.derivative().exact_div(g);
  UniPoly<T> z = y - w.derivative();
  while (!(w.degree() == 0)) {
    UniPoly<T> s = gcd(w, z);
    out.push_back(s.monic());
    w = w.exact_div(s);
    z = z.exact_div(s) - w.derivative();
  }
  return out;
}

}  // namespace casimir
