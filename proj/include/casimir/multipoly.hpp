// Sparse multivariate polynomials in the variables {x, u, E, p}.
#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/unipoly.hpp"

namespace casimir {

/// Variable set. X is the ladder index, U the representation parameter,
/// En the energy; P is a spare symbol for cutoff-parameter identities.
enum class Var : int { X = 0, U = 1, En = 2, P = 3 };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::U: return "u";
    case Var::En: return "E";
    default: return "p";
  }
}

using Expo = std::array<int, 4>;

/// Graded lexicographic, x > u > E > p.
struct ExpoLess {
  bool operator()(const Expo& a, const Expo& b) const {
    int ta = a[0] + a[1] + a[2] + a[3], tb = b[0] + b[1] + b[2] + b[3];
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

template <typename T>
class MultiPoly {
 public:
  using TermMap = std::map<Expo, T, ExpoLess>;

  MultiPoly() = default;
  MultiPoly(long n) { add_term({0, 0, 0, 0}, T(n)); }  // NOLINT
  MultiPoly(const T& c) { add_term({0, 0, 0, 0}, c); }  // NOLINT

  static MultiPoly constant(const T& c) { return MultiPoly(c); }
  static MultiPoly var(Var v, int deg = 1) {
    MultiPoly p;
    Expo e{0, 0, 0, 0};
    e[static_cast<int>(v)] = deg;
    p.add_term(e, T(1));
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{0, 0, 0, 0});
  }
  T constant_value() const {
    if (t_.empty()) return T(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: not constant");
    return t_.begin()->second;
  }

  int degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<int>(v)]);
    return t_.empty() ? -1 : d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
  }

  T coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? T(0) : it->second;
  }

  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_)
        r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
    return r;
  }
  MultiPoly operator*(const T& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
  MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned n) const {
    MultiPoly r = constant(T(1)), b(*this);
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  /// Simultaneous substitution; unbound variables remain symbolic.
  MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const {
    MultiPoly out;
    for (const auto& [e, c] : t_) {
      MultiPoly term = constant(c);
      for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        auto it = bindings.find(static_cast<Var>(v));
        MultiPoly base = it != bindings.end() ? it->second : var(static_cast<Var>(v));
        term *= base.pow(static_cast<unsigned>(e[v]));
      }
      out += term;
    }
    return out;
  }
  MultiPoly substitute(Var v, const MultiPoly& value) const { return substitute({{v, value}}); }
  MultiPoly substitute(Var v, const T& value) const { return substitute(v, constant(value)); }

  /// Full evaluation; every variable present must be bound.
  T evaluate(const std::map<Var, T>& point) const {
    T acc(0);
    for (const auto& [e, c] : t_) {
      T term = c;
      for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        auto it = point.find(static_cast<Var>(v));
        if (it == point.end()) throw std::invalid_argument("MultiPoly: unbound variable");
        T b = it->second, p(1);
        for (int k = 0; k < e[v]; ++k) p *= b;
        term *= p;
      }
      acc += term;
    }
    return acc;
  }

  /// Coefficients of powers of v, ascending; they partition the polynomial.
  std::vector<MultiPoly> collect(Var v) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree(v)) + 1));
    if (t_.empty()) return out;
    int iv = static_cast<int>(v);
    for (const auto& [e, c] : t_) {
      Expo r = e;
      int d = r[iv];
      r[iv] = 0;
      out[static_cast<std::size_t>(d)].add_term(r, c);
    }
    return out;
  }

  /// Requires the polynomial to involve only variable v.
  UniPoly<T> to_unipoly(Var v) const {
    std::vector<T> c(static_cast<std::size_t>(std::max(0, degree(v)) + 1), T(0));
    int iv = static_cast<int>(v);
    for (const auto& [e, coef] : t_) {
      for (int k = 0; k < 4; ++k)
        if (k != iv && e[k] != 0) throw std::domain_error("MultiPoly: not univariate");
      c[static_cast<std::size_t>(e[iv])] = coef;
    }
    return UniPoly<T>(std::move(c));
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second.str() << ")";
      for (int v = 0; v < 4; ++v)
        if (it->first[v] > 0) {
          os << "*" << var_name(static_cast<Var>(v));
          if (it->first[v] > 1) os << "^" << it->first[v];
        }
    }
    return os.str();
  }

 private:
  void add_term(const Expo& e, const T& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  TermMap t_;
};

}  // namespace casimir
