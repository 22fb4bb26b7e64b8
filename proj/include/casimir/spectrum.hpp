// Solving the Fock-cutoff system Phi(0,u,E) = Phi(p+1,u,E) = 0 with ladder
// positivity: exact closed-form enumeration over the factorized structure
// function and an independent resultant-based generic solver.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/model.hpp"
#include "casimir/qalgebra.hpp"
#include "casimir/resultant.hpp"
#include "casimir/roots.hpp"

namespace casimir {

enum class Parity { EvenFormula, OddFormula };
enum class SolveMode { ClosedForm, Generic };

struct SpectrumLine {
  int p = 0;
  std::string u_branch;  // "u1".."u8" or "generic"
  double u = 0, E = 0;
  std::optional<Surd> u_exact, E_exact;
  std::vector<double> phi_ladder;  // Phi(1..p)
  bool phi0_zero = false, phiP1_zero = false, all_positive = false,
       matches_closed_form = false;
  bool exact = false;
};

struct SpectrumResult {
  std::vector<SpectrumLine> lines;
  std::vector<std::string> notes;
};

/// Printed closed-form energy: the even formula uses (1+2p), the odd one
/// (2+2p), both with the negative square-root sign of the paper.
inline Surd energy_closed_form(int p, const ModelParams& mp, Parity parity) {
  if (p < 0) throw std::invalid_argument("energy_closed_form: p must be >= 0");
  if (mp.kappa.is_zero()) throw std::domain_error("energy_closed_form: kappa = 0");
  Rational n = parity == Parity::EvenFormula ? Rational(1 + 2 * p) : Rational(2 + 2 * p);
  Rational h2 = mp.hbar * mp.hbar;
  // hbar^2 (..) sqrt(kappa^2 + 4 omega^2 / hbar^2) = (..) sqrt(t) / |kappa|
  return Surd(h2 * mp.kappa * n * n / 2, -n / (2 * mp.kappa.abs()), mp.radicand());
}

/// The branch that matches the Schroedinger oracle: opposite square-root
/// sign, n + 1 = 1 + 2p (even) or 2 + 2p (odd) merged into a single ladder.
inline Surd physical_energy(int n, const ModelParams& mp) {
  if (n < 0) throw std::invalid_argument("physical_energy: n must be >= 0");
  Rational m(n + 1);
  Rational h2 = mp.hbar * mp.hbar;
  return Surd(h2 * mp.kappa * m * m / 2, m / (2 * mp.kappa.abs()), mp.radicand());
}

struct UValue {
  int index = 0;  // 1..8
  bool is_real = true;
  std::optional<Surd> exact;
  double approx = 0;
};

/// u1..u4 are E-free, u5..u8 carry E through the shifted radicand
/// t + 8 hbar^2 kappa^3 E. Surd results are reported when representable.
inline std::vector<UValue> closed_form_u(const ModelParams& mp, const Surd& E) {
  if (mp.kappa.is_zero()) throw std::domain_error("closed_form_u: kappa = 0");
  Rational c = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  Rational t = mp.radicand();
  Rational q = Rational(1) / (4 * c);
  std::vector<UValue> out(8);
  auto fixed = [&](int idx, const Rational& base, int sgn) {
    out[idx - 1].index = idx;
    out[idx - 1].exact = Surd(base, sgn > 0 ? q : -q, t);
    out[idx - 1].approx = out[idx - 1].exact->to_double();
  };
  fixed(1, Rational(1, 4), -1);
  fixed(2, Rational(1, 4), +1);
  fixed(3, Rational(3, 4), +1);
  fixed(4, Rational(3, 4), -1);
  Surd tE = Surd(t) + Surd(8 * mp.hbar * mp.hbar * mp.kappa.pow(3)) * E;
  auto moving = [&](int idx, const Rational& base, int sgn) {
    UValue& v = out[idx - 1];
    v.index = idx;
    if (tE.sign() < 0) {
      v.is_real = false;
      return;
    }
    if (auto root = tE.sqrt()) {
      v.exact = Surd(base) + Surd(sgn > 0 ? q : -q) * *root;
      v.approx = v.exact->to_double();
    } else {
      v.approx = base.to_double() + sgn * q.to_double() * std::sqrt(tE.to_double());
    }
  };
  moving(5, Rational(1, 4), -1);
  moving(6, Rational(1, 4), +1);
  moving(7, Rational(3, 4), -1);
  moving(8, Rational(3, 4), +1);
  return out;
}

namespace sdetail {

// E-free factors of the factorized structure function as scalar functions
// of s: f1 = 4c s^2 - 6c s + 2c - w^2, f3 = 4c s^2 - 2c s - w^2. The
// E-bearing factors are f2 = f1 - 2 kappa E and f4 = f3 - 2 kappa E.
inline Surd f1_at(const ModelParams& mp, const Surd& s) {
  Rational c = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  return Surd(4 * c) * s * s - Surd(6 * c) * s + Surd(2 * c - mp.omega_sq);
}
inline Surd f3_at(const ModelParams& mp, const Surd& s) {
  Rational c = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  return Surd(4 * c) * s * s - Surd(2 * c) * s - Surd(mp.omega_sq);
}

struct Candidate {
  Surd u, E;
};

/// Every pairing of factorized-phi factors across the two cutoff equations
/// that pins down (u, E); each candidate is verified independently later.
inline std::vector<Candidate> enumerate_exact_candidates(const ModelParams& mp, int p) {
  std::vector<Candidate> cands;
  Rational c = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  Rational t = mp.radicand();
  Rational q = Rational(1) / (4 * c);
  Surd twok_inv = Surd((2 * mp.kappa).inv());
  Surd shift(Rational(p + 1));
  std::vector<Surd> efree_roots = {Surd(Rational(1, 4), -q, t), Surd(Rational(1, 4), q, t),
                                   Surd(Rational(3, 4), q, t), Surd(Rational(3, 4), -q, t)};
  // A: u at an E-free root, E from an E-bearing factor at x = p+1
  for (const auto& u : efree_roots) {
    cands.push_back({u, f1_at(mp, u + shift) * twok_inv});
    cands.push_back({u, f3_at(mp, u + shift) * twok_inv});
  }
  // B: u + p + 1 at an E-free root, E from an E-bearing factor at x = 0
  for (const auto& r : efree_roots) {
    Surd u = r - shift;
    cands.push_back({u, f1_at(mp, u) * twok_inv});
    cands.push_back({u, f3_at(mp, u) * twok_inv});
  }
  // C: the same E-bearing factor at both ends (root-sum constraint)
  {
    Surd u22(Rational(1, 4) - Rational(p, 2));  // f2 at both ends
    cands.push_back({u22, f1_at(mp, u22) * twok_inv});
    Surd u44(Rational(-1, 4) - Rational(p, 2));  // f4 at both ends
    cands.push_back({u44, f3_at(mp, u44) * twok_inv});
  }
  // D: f2 at one end, f4 at the other
  {
    Surd u(Rational(-p, 2));
    cands.push_back({u, f1_at(mp, u) * twok_inv});
    cands.push_back({u, f3_at(mp, u) * twok_inv});
  }
  return cands;
}

inline std::string tag_branch(const ModelParams& mp, const Surd& u, const Surd& E) {
  if (mp.kappa.is_zero()) return "generic";
  auto uvals = closed_form_u(mp, E);
  for (const auto& v : uvals) {
    if (!v.is_real) continue;
    bool match = false;
    if (v.exact) {
      try {
        match = (*v.exact - u).is_zero();
      } catch (const std::invalid_argument&) {
        match = std::abs(v.approx - u.to_double()) < 1e-10;
      }
    } else {
      match = std::abs(v.approx - u.to_double()) < 1e-10;
    }
    if (match) return "u" + std::to_string(v.index);
  }
  return "generic";
}

inline bool duplicate_of(const SpectrumLine& a, const SpectrumLine& b) {
  if (a.p != b.p) return false;
  if (std::abs(a.E - b.E) > 1e-10) return false;
  if (std::abs(a.u - b.u) > 1e-10) return false;
  auto la = a.phi_ladder, lb = b.phi_ladder;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la.size() != lb.size()) return false;
  for (std::size_t i = 0; i < la.size(); ++i) {
    double scale = std::max({1.0, std::abs(la[i]), std::abs(lb[i])});
    if (std::abs(la[i] - lb[i]) > 1e-10 * scale) return false;
  }
  return true;
}

/// Exact verification of one (u, E) pair against the full structure function.
inline std::optional<SpectrumLine> verify_exact(const ModelParams& mp, const SPoly& phi, int p,
                                                const Surd& u, const Surd& E,
                                                std::vector<std::string>& notes) {
  auto phi_at = [&](long x) {
    return phi.evaluate({{Var::X, Surd(x)}, {Var::U, u}, {Var::En, E}});
  };
  if (!phi_at(0).is_zero() || !phi_at(p + 1).is_zero()) return std::nullopt;
  // continuum guard: both cutoffs satisfied independently of E
  Surd send = u + Surd(Rational(p + 1));
  if ((f1_at(mp, u).is_zero() || f3_at(mp, u).is_zero()) &&
      (f1_at(mp, send).is_zero() || f3_at(mp, send).is_zero())) {
    std::ostringstream os;
    os << "continuum family at p=" << p << ", u=" << u.str()
       << ": both cutoff factors are energy-independent";
    notes.push_back(os.str());
    return std::nullopt;
  }
  SpectrumLine line;
  line.p = p;
  line.exact = true;
  line.u_exact = u;
  line.E_exact = E;
  line.u = u.to_double();
  line.E = E.to_double();
  line.phi0_zero = line.phiP1_zero = true;
  line.all_positive = true;
  for (int x = 1; x <= p; ++x) {
    Surd v = phi_at(x);
    if (v.sign() <= 0) line.all_positive = false;
    line.phi_ladder.push_back(v.to_double());
  }
  if (!line.all_positive) return std::nullopt;
  line.u_branch = tag_branch(mp, u, E);
  if (!mp.kappa.is_zero()) {
    for (Parity par : {Parity::EvenFormula, Parity::OddFormula}) {
      try {
        if ((energy_closed_form(p, mp, par) - E).is_zero()) line.matches_closed_form = true;
      } catch (const std::invalid_argument&) {
        line.matches_closed_form =
            line.matches_closed_form ||
            std::abs(energy_closed_form(p, mp, par).to_double() - line.E) < 1e-10;
      }
    }
  }
  return line;
}

inline void push_line(std::vector<SpectrumLine>& lines, const SpectrumLine& line) {
  for (const auto& l : lines)
    if (duplicate_of(l, line)) return;
  lines.push_back(line);
}

inline UniPoly<Surd> collect_to_unipoly_in_E(const SPoly& poly) {
  return poly.to_unipoly(Var::En);
}

/// f is a polynomial in u whose coefficients are polynomials in E; g has
/// scalar coefficients. Returns the quotient when g divides f exactly.
inline std::optional<std::vector<UniPoly<Surd>>> exact_div_in_u(
    std::vector<UniPoly<Surd>> f, const UniPoly<Surd>& g) {
  std::size_t dg = static_cast<std::size_t>(g.degree());
  if (f.size() < dg + 1) return std::nullopt;
  Surd lead_inv = g.lead().inv();
  std::vector<UniPoly<Surd>> q(f.size() - dg);
  for (std::size_t i = f.size(); i-- > dg;) {
    UniPoly<Surd> t = f[i] * lead_inv;
    q[i - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] = f[i - dg + j] - t * g.coeffs()[j];
  }
  for (const auto& c : f)
    if (!c.is_zero()) return std::nullopt;
  return q;
}

inline UniPoly<Surd> specialize_in_E(const std::vector<UniPoly<Surd>>& cs, const Surd& e) {
  std::vector<Surd> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.evaluate(e));
  return UniPoly<Surd>(std::move(out));
}

}  // namespace sdetail

inline std::vector<double> ladder_amplitudes(const SpectrumLine& line) {
  std::vector<double> out;
  out.reserve(line.phi_ladder.size());
  for (double v : line.phi_ladder) {
    if (v < 0) throw std::domain_error("ladder_amplitudes: negative structure function value");
    out.push_back(std::sqrt(v));
  }
  return out;
}

inline SpectrumResult solve_spectrum_closed_form(const ModelParams& mp, int p_max) {
  if (mp.kappa.is_zero())
    throw std::domain_error("solve_spectrum: closed_form mode needs kappa != 0");
  SpectrumResult res;
  SPoly phi = factorized_phi(mp).phi;
  for (int p = 0; p <= p_max; ++p) {
    std::vector<SpectrumLine> plines;
    for (const auto& cand : sdetail::enumerate_exact_candidates(mp, p)) {
      if (auto line = sdetail::verify_exact(mp, phi, p, cand.u, cand.E, res.notes))
        sdetail::push_line(plines, *line);
    }
    std::sort(plines.begin(), plines.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
      return a.E != b.E ? a.E < b.E : a.u < b.u;
    });
    for (auto& l : plines) res.lines.push_back(l);
  }
  return res;
}

inline SpectrumResult solve_spectrum_generic(const ModelParams& mp, int p_max) {
  SpectrumResult res;
  auto [spec, cas] = model_quantum_spec(mp);
  SPoly phi = build_structure_function(spec, cas).phi;
  const double scale_tol = 1e-8;
  for (int p = 0; p <= p_max; ++p) {
    SPoly phi0 = phi.substitute(Var::X, Surd(0));
    SPoly phip = phi.substitute(Var::X, Surd(Rational(p + 1)));
    auto cu0 = phi0.collect(Var::U);
    auto cup = phip.collect(Var::U);
    std::vector<UniPoly<Surd>> pc, qc;
    for (const auto& m : cu0) pc.push_back(sdetail::collect_to_unipoly_in_E(m));
    for (const auto& m : cup) qc.push_back(sdetail::collect_to_unipoly_in_E(m));
    while (!pc.empty() && pc.back().is_zero()) pc.pop_back();
    while (!qc.empty() && qc.back().is_zero()) qc.pop_back();
    // a common u-factor that carries no E dependence (a continuum family:
    // both cutoffs hold for every E) makes the resultant vanish identically;
    // detect it through two specializations and strip it by exact division
    {
      Surd e1(Rational(17, 13)), e2(Rational(-31, 7));
      UniPoly<Surd> g = detail::normalized_gcd(sdetail::specialize_in_E(pc, e1),
                                               sdetail::specialize_in_E(qc, e1));
      if (g.degree() > 0)
        g = detail::normalized_gcd(g, detail::normalized_gcd(sdetail::specialize_in_E(pc, e2),
                                                             sdetail::specialize_in_E(qc, e2)));
      if (g.degree() > 0) {
        auto pq = sdetail::exact_div_in_u(pc, g);
        auto qq = sdetail::exact_div_in_u(qc, g);
        if (pq && qq) {
          pc = std::move(*pq);
          qc = std::move(*qq);
          std::ostringstream os;
          os << "generic: continuum family at p=" << p << " along u-roots of "
             << g.str("u");
          res.notes.push_back(os.str());
        }
      }
    }
    UniPoly<Surd> epoly = sylvester_resultant(pc, qc);
    if (epoly.is_zero()) {
      res.notes.push_back("generic: identically vanishing resultant at p=" +
                          std::to_string(p));
      continue;
    }
    // exact energy candidates come from the closed-form enumeration
    std::vector<Surd> ecands;
    if (!mp.kappa.is_zero()) {
      for (const auto& cand : sdetail::enumerate_exact_candidates(mp, p))
        ecands.push_back(cand.E);
    } else {
      // flat limit: E = +- n hbar omega = +- n sqrt(eps)/4 with eps = 16 h^2 w^2
      Rational eps = 16 * mp.hbar * mp.hbar * mp.omega_sq;
      for (int n = 1; n <= 2 * p + 2; ++n) {
        Surd base = Surd(Rational(n, 4)) * *Surd(eps).sqrt();
        ecands.push_back(base);
        ecands.push_back(-base);
      }
    }
    auto eroots = real_roots(epoly, 1e-24, ecands);
    std::vector<SpectrumLine> plines;
    for (const auto& er : eroots) {
      if (er.exact) {
        SPoly phi0_at = phi0.substitute(Var::En, *er.exact);
        if (phi0_at.is_zero()) continue;
        auto upoly = phi0_at.to_unipoly(Var::U);
        if (upoly.degree() < 1) continue;
        std::vector<Surd> ucands;
        if (!mp.kappa.is_zero())
          for (const auto& v : closed_form_u(mp, *er.exact))
            if (v.is_real && v.exact) ucands.push_back(*v.exact);
        for (const auto& ur : real_roots(upoly, 1e-14, ucands)) {
          if (!ur.exact) continue;
          if (auto line = sdetail::verify_exact(mp, phi, p, *ur.exact, *er.exact, res.notes))
            sdetail::push_line(plines, *line);
        }
        continue;
      }
      // numeric fallback: rational pinch of the isolating interval
      Rational eapp = simplest_rational_in(er.lo, er.hi);
      SPoly phi0_at = phi0.substitute(Var::En, Surd(eapp));
      if (phi0_at.is_zero()) continue;
      auto upoly = phi0_at.to_unipoly(Var::U);
      if (upoly.degree() < 1) continue;
      // conditioning scale for the residual test at x = p+1
      double cond = 0;
      for (const auto& [ex, cf] : phip.terms())
        cond += std::abs(cf.to_double()) * std::pow(2.0 + std::abs(eapp.to_double()), ex[2]);
      for (const auto& ur : real_roots(upoly, 1e-13)) {
        Rational uapp = simplest_rational_in(ur.lo, ur.hi);
        double updb = uapp.to_double();
        double cond_u = cond * std::pow(1.0 + std::abs(updb) + p + 1, 8);
        double resid = phip.evaluate({{Var::U, Surd(uapp)}, {Var::En, Surd(eapp)}}).to_double();
        if (std::abs(resid) > scale_tol * cond_u) continue;
        SpectrumLine line;
        line.p = p;
        line.exact = false;
        line.u = updb;
        line.E = eapp.to_double();
        line.phi0_zero = line.phiP1_zero = true;
        line.all_positive = true;
        for (int x = 1; x <= p; ++x) {
          double v = phi.evaluate({{Var::X, Surd(x)}, {Var::U, Surd(uapp)}, {Var::En, Surd(eapp)}})
                         .to_double();
          if (v <= 0) line.all_positive = false;
          line.phi_ladder.push_back(v);
        }
        if (!line.all_positive) continue;
        line.u_branch = mp.kappa.is_zero() ? "generic"
                                           : sdetail::tag_branch(mp, Surd(uapp), Surd(eapp));
        if (!mp.kappa.is_zero()) {
          for (Parity par : {Parity::EvenFormula, Parity::OddFormula})
            if (std::abs(energy_closed_form(p, mp, par).to_double() - line.E) < 1e-10)
              line.matches_closed_form = true;
        }
        sdetail::push_line(plines, line);
      }
    }
    std::sort(plines.begin(), plines.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
      return a.E != b.E ? a.E < b.E : a.u < b.u;
    });
    for (auto& l : plines) res.lines.push_back(l);
  }
  return res;
}

inline SpectrumResult solve_spectrum(const ModelParams& mp, int p_max, SolveMode mode) {
  if (p_max < 0) throw std::invalid_argument("solve_spectrum: p_max must be >= 0");
  mp.validate();
  return mode == SolveMode::ClosedForm ? solve_spectrum_closed_form(mp, p_max)
                                       : solve_spectrum_generic(mp, p_max);
}

/// Structure function of the even-formula solution as a polynomial in x and
/// the cutoff symbol p, over Q(sqrt t).
inline SPoly paper_phi_even(const ModelParams& mp) {
  if (mp.kappa.is_zero()) throw std::domain_error("paper_phi_even: kappa = 0");
  using qdetail::c;
  Rational cc = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  SPoly R = c(Surd(Rational(0), cc.inv(), mp.radicand()));  // sqrt(1 + 4 w^2 / (h^2 k^2))
  SPoly x = SPoly::var(Var::X), P = SPoly::var(Var::P);
  SPoly one = c(Rational(1)), two = c(Rational(2));
  Rational pref = Rational(12884901888L) * mp.hbar.pow(20) * mp.kappa.pow(8);
  return c(pref) * x * (two * x - one) * (x - one - P) * (two * x - one - two * P) *
         (R - two * x) * (R - two * x + one) * (R - two * P - two * x - one) *
         (R - two * P - two * x);
}

inline SPoly paper_phi_odd(const ModelParams& mp) {
  if (mp.kappa.is_zero()) throw std::domain_error("paper_phi_odd: kappa = 0");
  using qdetail::c;
  Rational cc = mp.hbar * mp.hbar * mp.kappa * mp.kappa;
  SPoly R = c(Surd(Rational(0), cc.inv(), mp.radicand()));
  SPoly x = SPoly::var(Var::X), P = SPoly::var(Var::P);
  SPoly one = c(Rational(1)), two = c(Rational(2)), three = c(Rational(3));
  Rational pref = Rational(12884901888L) * mp.hbar.pow(20) * mp.kappa.pow(8);
  return c(pref) * x * (two * x - one) * (x - one - P) * (two * x - three - two * P) *
         (R - two * x) * (R - two * x + one) * (R - two * P - two * x - two) *
         (R - two * P - two * x - one);
}

/// p -> (2p+1)/2 carries the even-formula structure function onto the odd one.
inline bool parity_shift_identity_holds(const ModelParams& mp) {
  SPoly even = paper_phi_even(mp);
  SPoly shifted = even.substitute(
      Var::P, SPoly::var(Var::P) + SPoly::constant(Surd(Rational(1, 2))));
  return shifted == paper_phi_odd(mp);
}

}  // namespace casimir
