// Real-root isolation for exact-coefficient univariate polynomials:
// square-free decomposition, Sturm chains, bisection refinement.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/surd.hpp"
#include "casimir/unipoly.hpp"

namespace casimir {

struct RealRoot {
  Rational lo, hi;             // isolating interval; lo == hi when exact
  double approx = 0.0;
  std::optional<Surd> exact;   // populated when the root is recognized in-field
  int multiplicity = 1;
};

namespace detail {

inline Rational surd_abs_upper(const Surd& s) {
  // |a + b sqrt(t)| <= |a| + |b| (1 + t), since sqrt(t) <= (1+t)/2
  return s.rational_part().abs() + s.surd_part().abs() * (1 + s.radicand());
}

inline Rational surd_abs_lower(const Surd& s) {
  // for s != 0: |s| = |a^2 - b^2 t| / |conj(s)| >= |norm| / upper(conj)
  if (s.is_rational()) return s.rational_part().abs();
  Rational norm = s.rational_part() * s.rational_part() -
                  s.surd_part() * s.surd_part() * s.radicand();
  if (norm.is_zero()) throw std::domain_error("surd_abs_lower: zero value");
  return norm.abs() / surd_abs_upper(s);
}

inline Rational cauchy_root_bound(const UniPoly<Surd>& p) {
  Rational m(0);
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i)
    m = std::max(m, surd_abs_upper(p.coeffs()[i]));
  return 1 + m / surd_abs_lower(p.lead());
}

/// Positive rational content: dividing by it makes all rational parts of the
/// coefficients integers with overall gcd 1. Scaling by a positive constant
/// preserves signs, which is all Sturm chains and gcd sequences care about;
/// without this step remainder sequences over Q blow up badly for degree ~30.
inline Rational content_scale(const UniPoly<Surd>& p) {
  mpz_class g = 0, l = 1;
  auto feed = [&](const Rational& r) {
    if (r.is_zero()) return;
    mpz_class n = r.num(), d = r.den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  };
  for (const auto& c : p.coeffs()) {
    feed(c.rational_part());
    feed(c.surd_part());
  }
  if (g == 0) return Rational(1);
  Rational s{mpq_class(g, l)};
  return s;
}

inline UniPoly<Surd> primitive(const UniPoly<Surd>& p) {
  Rational s = content_scale(p);
  if (s == Rational(1)) return p;
  return p * Surd(s.inv());
}

inline UniPoly<Surd> normalized_gcd(UniPoly<Surd> a, UniPoly<Surd> b) {
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    auto r = primitive(a.divmod(b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition with primitive-part normalization.
inline std::vector<UniPoly<Surd>> square_free_normalized(const UniPoly<Surd>& p) {
  std::vector<UniPoly<Surd>> out;
  if (p.degree() <= 0) return out;
  UniPoly<Surd> f = primitive(p);
  UniPoly<Surd> g = normalized_gcd(f, f.derivative());
  UniPoly<Surd> w = f.exact_div(g);
  UniPoly<Surd> y = f.derivative().exact_div(g);
  UniPoly<Surd> z = y - w.derivative();
  while (w.degree() != 0) {
    UniPoly<Surd> s = normalized_gcd(w, z);
    out.push_back(s);
    w = w.exact_div(s);
    z = z.exact_div(s) - w.derivative();
  }
  return out;
}

inline std::vector<UniPoly<Surd>> sturm_chain(const UniPoly<Surd>& p) {
  std::vector<UniPoly<Surd>> chain{primitive(p), primitive(p.derivative())};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(primitive(-rem));
  }
  return chain;
}

inline int sign_variations(const std::vector<UniPoly<Surd>>& chain, const Rational& x) {
  int count = 0, prev = 0;
  Surd sx(x);
  for (const auto& f : chain) {
    if (f.is_zero()) continue;
    int s = f.evaluate(sx).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct Isolator {
  const UniPoly<Surd>& f;
  std::vector<UniPoly<Surd>> chain;
  std::vector<RealRoot> found;      // exact roots discovered during isolation
  std::vector<std::pair<Rational, Rational>> intervals;  // open, one sign change

  explicit Isolator(const UniPoly<Surd>& poly) : f(poly), chain(sturm_chain(poly)) {}

  int count(const Rational& a, const Rational& b) const {
    return sign_variations(chain, a) - sign_variations(chain, b);  // roots in (a, b]
  }

  void emit_exact(const Rational& r) {
    RealRoot root;
    root.lo = root.hi = r;
    root.approx = r.to_double();
    root.exact = Surd(r);
    found.push_back(root);
  }

  // precondition: f(a) != 0
  void isolate(const Rational& a, const Rational& b) {
    int n = count(a, b);
    if (n == 0) return;
    bool root_at_b = f.evaluate(Surd(b)).is_zero();
    if (n == 1) {
      if (root_at_b)
        emit_exact(b);
      else
        intervals.emplace_back(a, b);
      return;
    }
    Rational m = (a + b) / 2;
    if (!f.evaluate(Surd(m)).is_zero()) {
      isolate(a, m);
      isolate(m, b);
      return;
    }
    // midpoint is itself a root: carve out a punctured neighbourhood
    emit_exact(m);
    Rational d = (b - a) / 4;
    while (f.evaluate(Surd(m - d)).is_zero() || f.evaluate(Surd(m + d)).is_zero() ||
           count(m - d, m + d) != 1) {
      d /= 2;
    }
    isolate(a, m - d);
    isolate(m + d, b);
  }
};

}  // namespace detail

/// All real roots of p with multiplicities. Intervals are refined until their
/// width drops below tol. Exact roots are reported when the root is rational
/// (recovered via the simplest rational in the isolating interval) or matches
/// one of the supplied candidate surds.
inline std::vector<RealRoot> real_roots(const UniPoly<Surd>& p, double tol = 1e-12,
                                        const std::vector<Surd>& candidates = {}) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  std::vector<RealRoot> out;
  auto factors = detail::square_free_normalized(p);
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const auto& f = factors[fi];
    if (f.degree() <= 0) continue;
    int mult = static_cast<int>(fi) + 1;
    detail::Isolator iso(f);
    Rational bound = detail::cauchy_root_bound(f);
    iso.isolate(-bound, bound);
    for (auto& r : iso.found) {
      r.multiplicity = mult;
      out.push_back(r);
    }
    for (auto& [lo, hi] : iso.intervals) {
      RealRoot root;
      root.multiplicity = mult;
      int slo = f.evaluate(Surd(lo)).sign();
      bool exact_hit = false;
      while ((hi - lo).to_double() > tol) {
        Rational m = (lo + hi) / 2;
        int sm = f.evaluate(Surd(m)).sign();
        if (sm == 0) {
          root.lo = root.hi = m;
          root.exact = Surd(m);
          root.approx = m.to_double();
          exact_hit = true;
          break;
        }
        if (sm == slo)
          lo = m;
        else
          hi = m;
      }
      if (!exact_hit) {
        Rational cand = simplest_rational_in(lo, hi);
        if (f.evaluate(Surd(cand)).is_zero()) {
          root.lo = root.hi = cand;
          root.exact = Surd(cand);
          root.approx = cand.to_double();
        } else {
          for (const auto& c : candidates) {
            if (!f.evaluate(c).is_zero()) continue;
            if ((c - Surd(lo)).sign() > 0 && (c - Surd(hi)).sign() < 0) {
              root.exact = c;
              break;
            }
          }
          root.lo = lo;
          root.hi = hi;
          root.approx = root.exact ? root.exact->to_double() : ((lo + hi) / 2).to_double();
        }
      }
      out.push_back(root);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.approx < b.approx; });
  return out;
}

inline std::vector<RealRoot> real_roots(const UniPoly<Rational>& p, double tol = 1e-12,
                                        const std::vector<Surd>& candidates = {}) {
  std::vector<Surd> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return real_roots(UniPoly<Surd>(std::move(c)), tol, candidates);
}

}  // namespace casimir
