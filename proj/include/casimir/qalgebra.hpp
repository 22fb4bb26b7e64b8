// The quadratic associative algebra of the model, its deformed-oscillator
// ladder realization, and the structure function Phi in its three guises
// (generic build, literal expanded transcription, factorized product).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/model.hpp"
#include "casimir/multipoly.hpp"
#include "casimir/rational.hpp"
#include "casimir/surd.hpp"
#include "casimir/unipoly.hpp"

namespace casimir {

using SPoly = MultiPoly<Surd>;

/// Structure constants: alpha, gamma, a are scalars; delta, epsilon, d are
/// degree <= 1 in the energy E; zeta, z are degree <= 2.
struct QuadraticAlgebraSpec {
  Rational alpha, gamma, a;
  UniPoly<Rational> delta, epsilon, zeta, d, z;

  void validate() const {
    if (delta.degree() > 1 || epsilon.degree() > 1 || d.degree() > 1)
      throw std::invalid_argument("QuadraticAlgebraSpec: delta/epsilon/d must be linear in E");
    if (zeta.degree() > 2 || z.degree() > 2)
      throw std::invalid_argument("QuadraticAlgebraSpec: zeta/z must be quadratic in E");
  }
};

struct CasimirPoly {
  Rational k0, k1, k2, k3;

  Rational evaluate(const Rational& e) const { return k0 + e * (k1 + e * (k2 + e * k3)); }
  UniPoly<Rational> poly() const {
    return UniPoly<Rational>(std::vector<Rational>{k0, k1, k2, k3});
  }
};

enum class Branch { GammaNonzero, GammaZeroEpsPositive };
enum class Provenance { BuiltGeneric, ExpandedPaper, FactorizedPaper };

/// Realization data for A(N) and B = b(N) + b'rho(N) + rho(N)b, expressed as
/// polynomials in x, u (always through s = x+u) and E. For the gamma != 0
/// branch b(N) carries a pole term b_pole_num / (s^2 - 1/4); rho is the
/// reciprocal of rho_denominator. Poles are never evaluated on the ladder.
struct LadderRealization {
  Branch branch;
  SPoly A;
  SPoly b_regular;
  SPoly b_pole_num;  // zero on the gamma = 0 branch
  SPoly rho_denominator;
};

struct StructureFunction {
  SPoly phi;  // variables x, u, E
  Branch branch;
  Provenance provenance;
};

namespace qdetail {

inline SPoly s_poly() { return SPoly::var(Var::X) + SPoly::var(Var::U); }

inline SPoly to_mp(const UniPoly<Rational>& p) {
  SPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out += SPoly::var(Var::En, static_cast<int>(i)) * SPoly::constant(Surd(p.coeffs()[i]));
  return out;
}

inline SPoly c(const Rational& r) { return SPoly::constant(Surd(r)); }
inline SPoly c(const Surd& s) { return SPoly::constant(s); }

}  // namespace qdetail

/// Algebra coefficients and Casimir of the curved oscillator.
inline std::pair<QuadraticAlgebraSpec, CasimirPoly> model_quantum_spec(const ModelParams& mp) {
  mp.validate();
  Rational h2 = mp.hbar * mp.hbar;
  Rational h4 = h2 * h2, h6 = h4 * h2;
  const Rational& k = mp.kappa;
  const Rational& w2 = mp.omega_sq;
  QuadraticAlgebraSpec spec;
  spec.alpha = 8 * h2;
  spec.gamma = 8 * h2 * k;
  spec.a = Rational(0);
  spec.delta = UniPoly<Rational>(std::vector<Rational>{-8 * h4 * k, Rational(-16) * h2});
  spec.epsilon = UniPoly<Rational>(std::vector<Rational>{16 * h2 * (w2 - h2 * k * k)});
  spec.zeta = UniPoly<Rational>(std::vector<Rational>{8 * h4 * w2, 16 * h4 * k});
  spec.d = UniPoly<Rational>(std::vector<Rational>{16 * h4});
  spec.z = UniPoly<Rational>(std::vector<Rational>{Rational(0), Rational(-16) * h4});
  spec.validate();
  CasimirPoly cas{-32 * h6 * w2, -96 * h6 * k, -48 * h4, Rational(0)};
  return {spec, cas};
}

inline LadderRealization build_ladder(const QuadraticAlgebraSpec& spec) {
  using namespace qdetail;
  spec.validate();
  LadderRealization lr;
  SPoly s = s_poly();
  SPoly s2 = s * s;
  SPoly eps = to_mp(spec.epsilon), del = to_mp(spec.delta), zet = to_mp(spec.zeta);
  Rational quarter(1, 4);
  if (!spec.gamma.is_zero()) {
    const Rational& g = spec.gamma;
    Rational g2 = g * g, g4 = g2 * g2;
    lr.branch = Branch::GammaNonzero;
    lr.A = c(g / 2) * (s2 - c(quarter)) - c(Rational(1, 2) / g) * eps;
    lr.b_regular = c(-spec.alpha / 4) * (s2 - c(quarter)) +
                   (c(spec.alpha) * eps - del * c(g)) * c(Rational(1, 2) / g2);
    lr.b_pole_num = (c(spec.alpha) * eps * eps - c(2 * g) * eps * del + c(4 * g2) * zet) *
                    c(-quarter / g4);
    // rho = 1 / (3 * 2^12 * gamma^8 * s (s+1) (1+2s)^2)
    Rational pref = Rational(3) * Rational(4096) * g4 * g4;
    SPoly one_plus_2s = c(Rational(1)) + c(Rational(2)) * s;
    lr.rho_denominator = c(pref) * s * (s + c(Rational(1))) * one_plus_2s * one_plus_2s;
    return lr;
  }
  if (spec.epsilon.degree() != 0 || spec.epsilon.is_zero() ||
      spec.epsilon.coeff(0).sign() <= 0)
    throw std::domain_error("build_ladder: gamma = 0 requires constant epsilon > 0");
  Rational eps0 = spec.epsilon.coeff(0);
  Surd sqrt_eps = *Surd(eps0).sqrt();
  lr.branch = Branch::GammaZeroEpsPositive;
  lr.A = c(sqrt_eps) * s;
  // b(N) = -alpha s^2 - (delta / sqrt(eps)) s - zeta / eps
  lr.b_regular = c(-spec.alpha) * s2 - del * c(sqrt_eps.inv()) * s - zet * c(eps0.inv());
  lr.b_pole_num = SPoly();
  lr.rho_denominator = c(Rational(1));
  return lr;
}

enum class QuarticSign { MinusTwelve, PlusTwelve };  // the (-1 -+ 12 s + 12 s^2) factor

/// Generic structure function. The quartic-factor sign defaults to the
/// variant that the identity report singles out as consistent with the
/// factorized form; the other variant stays available for the report itself.
inline StructureFunction build_structure_function(const QuadraticAlgebraSpec& spec,
                                                  const CasimirPoly& cas,
                                                  QuarticSign sign = QuarticSign::MinusTwelve) {
  using namespace qdetail;
  spec.validate();
  SPoly s = s_poly();
  SPoly two_s = c(Rational(2)) * s;
  SPoly m1 = two_s - c(Rational(1));   // -1 + 2s
  SPoly m3 = two_s - c(Rational(3));   // -3 + 2s
  SPoly p1 = two_s + c(Rational(1));   // 1 + 2s
  SPoly K = to_mp(cas.poly());
  SPoly eps = to_mp(spec.epsilon), del = to_mp(spec.delta), zet = to_mp(spec.zeta);
  SPoly dd = to_mp(spec.d), zz = to_mp(spec.z);
  SPoly al = c(spec.alpha), ga = c(spec.gamma), aa = c(spec.a);
  SPoly g2 = ga * ga, g3 = g2 * ga, g4 = g2 * g2, g5 = g4 * ga, g6 = g4 * g2, g8 = g4 * g4;
  SPoly m1_2 = m1 * m1, m1_4 = m1_2 * m1_2;

  if (!spec.gamma.is_zero()) {
    SPoly P1 = al * al * eps - al * del * ga + aa * eps * ga - dd * g2;
    SPoly P2 = al * eps * eps - c(Rational(2)) * del * eps * ga + c(Rational(4)) * g2 * zet;
    SPoly P3 = c(Rational(3)) * al * al * eps * eps - c(Rational(6)) * al * del * eps * ga +
               c(Rational(2)) * aa * eps * eps * ga + c(Rational(2)) * del * del * g2 -
               c(Rational(4)) * dd * eps * g2 + c(Rational(8)) * g3 * zz +
               c(Rational(4)) * al * g2 * zet;
    SPoly P4 = c(Rational(3)) * al * al * eps * eps * eps -
               c(Rational(9)) * al * del * eps * eps * ga + aa * eps * eps * eps * ga +
               c(Rational(6)) * del * del * eps * g2 - c(Rational(3)) * dd * eps * eps * g2 +
               c(Rational(2)) * del * del * g4 + c(Rational(2)) * dd * eps * g4 +
               c(Rational(12)) * eps * g3 * zz - c(Rational(4)) * g5 * zz +
               c(Rational(12)) * al * eps * g2 * zet - c(Rational(12)) * del * g3 * zet +
               c(Rational(4)) * al * g4 * zet;
    SPoly quartic = (sign == QuarticSign::MinusTwelve)
                        ? c(Rational(-1)) - c(Rational(12)) * s + c(Rational(12)) * s * s
                        : c(Rational(-1)) + c(Rational(12)) * s + c(Rational(12)) * s * s;
    SPoly phi = c(Rational(-3072)) * g6 * K * m1_2 -
                c(Rational(48)) * g6 * P1 * m3 * m1_4 * p1 +
                (c(Rational(3)) * al * al + c(Rational(4)) * aa * ga) * g8 * m3 * m3 * m1_4 *
                    p1 * p1 +
                c(Rational(768)) * P2 * P2 +
                c(Rational(32)) * g4 * m1_2 * quartic * P3 -
                c(Rational(256)) * g2 * m1_2 * P4;
    return {phi, Branch::GammaNonzero, Provenance::BuiltGeneric};
  }

  if (spec.epsilon.degree() != 0 || spec.epsilon.is_zero() ||
      spec.epsilon.coeff(0).sign() <= 0)
    throw std::domain_error("build_structure_function: gamma = 0 requires constant epsilon > 0");
  Rational eps0 = spec.epsilon.coeff(0);
  Surd se = *Surd(eps0).sqrt();  // exists: eps0 > 0, possibly introducing sqrt(eps0)
  Surd inv_se = se.inv();
  Rational inv_e = eps0.inv();
  SPoly dse = del * c(inv_se);   // delta / sqrt(eps)
  SPoly zse = zz * c(inv_se);    // z / sqrt(eps)
  SPoly zte = zet * c(inv_e);    // zeta / eps
  SPoly ase = aa * c(se);        // a sqrt(eps)
  SPoly s2 = s * s;
  SPoly phi =
      c(Rational(1, 4)) * (K * c(-inv_e) - zse - dse * zte + zte * zte) -
      c(Rational(1, 12)) *
          (c(Rational(3)) * dd - ase - c(Rational(3)) * al * dse + c(Rational(3)) * dse * dse -
           c(Rational(6)) * zse + c(Rational(6)) * al * zte - c(Rational(6)) * dse * zte) *
          s +
      c(Rational(1, 4)) *
          (al * al + dd - ase - c(Rational(3)) * al * dse + dse * dse +
           c(Rational(2)) * al * zte) *
          s2 -
      c(Rational(1, 6)) * (c(Rational(3)) * al * al - ase - c(Rational(3)) * al * dse) * s2 * s +
      c(Rational(1, 4)) * al * al * s2 * s2;
  return {phi, Branch::GammaZeroEpsPositive, Provenance::BuiltGeneric};
}

/// Literal transcription of the expanded model structure function, with the
/// stray 'w' and 'k' glyphs read as omega and kappa. Kept verbatim so any
/// divergence from the other builds is localized, not patched.
inline StructureFunction transcribed_phi(const ModelParams& mp) {
  using namespace qdetail;
  mp.validate();
  Rational h2 = mp.hbar * mp.hbar, h4 = h2 * h2;
  const Rational& k = mp.kappa;
  const Rational& w2 = mp.omega_sq;
  SPoly s = s_poly();
  SPoly E = SPoly::var(Var::En);
  SPoly two_s = c(Rational(2)) * s;
  SPoly m1 = two_s - c(Rational(1));
  SPoly m3 = two_s - c(Rational(3));
  SPoly p1 = two_s + c(Rational(1));
  SPoly m1_2 = m1 * m1, m1_4 = m1_2 * m1_2;

  SPoly A8 = c(8 * h2);               // 8 hbar^2
  SPoly G8 = c(8 * h2 * k);           // 8 hbar^2 kappa
  SPoly D16 = c(16 * h4);             // 16 hbar^4
  SPoly EPS = c(16 * h2 * w2) - c(16 * h4 * k * k);          // 16 h^2 w^2 - 16 h^4 k^2
  SPoly DEL = c(16 * h2) * E + c(8 * h4 * k);                // 16 h^2 H + 8 h^4 kappa
  SPoly ZET = c(16 * h4 * k) * E + c(8 * h4 * w2);           // kappa 16 h^4 H + 8 h^4 w^2
  SPoly ZED = c(16 * h4) * E;                                // 16 h^4 H
  SPoly G8_2 = G8 * G8, G8_3 = G8_2 * G8, G8_4 = G8_2 * G8_2, G8_5 = G8_4 * G8,
        G8_6 = G8_4 * G8_2, G8_8 = G8_4 * G8_4;

  SPoly t1 = c(Rational(3072)) * G8_6 * D16 *
             (c(Rational(3)) * E * E + c(2 * h2 * w2) + c(6 * h2 * k) * E) * m1_2;
  SPoly t2 = c(Rational(-48)) * G8_6 * (A8 * A8 * EPS + A8 * G8 * DEL - G8_2 * D16) * m3 *
             m1_4 * p1;
  SPoly t3 = c(Rational(3)) * A8 * A8 * G8_8 * m3 * m3 * m1_4 * p1 * p1;
  SPoly inner4 = A8 * EPS * EPS + c(Rational(2)) * DEL * EPS * G8 + c(Rational(4)) * G8_2 * ZET;
  SPoly t4 = c(Rational(768)) * inner4 * inner4;
  SPoly quartic = c(Rational(-1)) - c(Rational(12)) * s + c(Rational(12)) * s * s;
  SPoly inner5 = c(Rational(3)) * A8 * A8 * EPS * EPS + c(Rational(6)) * A8 * G8 * DEL * EPS +
                 c(Rational(2)) * G8_2 * DEL * DEL - c(Rational(4)) * G8_2 * D16 * EPS -
                 c(Rational(8)) * G8_3 * ZED + c(Rational(4)) * A8 * G8_2 * ZET;
  SPoly t5 = c(Rational(32)) * G8_4 * m1_2 * quartic * inner5;
  SPoly inner6 = c(Rational(3)) * A8 * A8 * EPS * EPS * EPS +
                 c(Rational(9)) * A8 * G8 * DEL * EPS * EPS +
                 c(Rational(6)) * DEL * DEL * EPS * G8_2 -
                 c(Rational(3)) * D16 * EPS * EPS * G8_2 + c(Rational(2)) * DEL * DEL * G8_4 +
                 c(Rational(2)) * D16 * EPS * G8_4 - c(Rational(12)) * EPS * G8_3 * ZED +
                 c(Rational(4)) * G8_5 * ZED + c(Rational(12)) * A8 * G8_2 * EPS * ZET +
                 c(Rational(12)) * DEL * G8_3 * ZET + c(Rational(4)) * A8 * G8_4 * ZET;
  SPoly t6 = c(Rational(-256)) * G8_2 * m1_2 * inner6;
  return {t1 + t2 + t3 + t4 + t5 + t6, Branch::GammaNonzero, Provenance::ExpandedPaper};
}

/// The four quadratic factors of the factorized structure function, in order:
/// f1 (E-free), f2 = f1 - 2 E kappa, f3 (E-free), f4 = f3 - 2 E kappa.
inline std::vector<SPoly> factorized_phi_factors(const ModelParams& mp) {
  using namespace qdetail;
  Rational cc = mp.hbar * mp.hbar * mp.kappa * mp.kappa;  // hbar^2 kappa^2
  const Rational& w2 = mp.omega_sq;
  SPoly s = s_poly();
  SPoly s2 = s * s;
  SPoly E = SPoly::var(Var::En);
  SPoly f1 = c(2 * cc) - c(w2) - c(6 * cc) * s + c(4 * cc) * s2;
  SPoly twoEk = c(2 * mp.kappa) * E;
  SPoly f3 = -c(w2) - c(2 * cc) * s + c(4 * cc) * s2;
  return {f1, f1 - twoEk, f3, f3 - twoEk};
}

inline StructureFunction factorized_phi(const ModelParams& mp) {
  using namespace qdetail;
  mp.validate();
  if (mp.kappa.is_zero())
    throw std::domain_error("factorized_phi: kappa = 0 not covered by the factorized form");
  auto f = factorized_phi_factors(mp);
  Rational h2 = mp.hbar * mp.hbar;
  Rational pref = Rational(3221225472L) * h2.pow(6);  // 3 * 2^30 * hbar^12
  return {c(pref) * f[0] * f[1] * f[2] * f[3], Branch::GammaNonzero,
          Provenance::FactorizedPaper};
}

struct PhiComparison {
  bool proportional = false;
  Surd ratio;  // lhs / rhs when proportional
  std::vector<std::string> mismatch_terms;
};

/// Compares two polynomials up to one global constant; on failure lists the
/// monomials of lhs - (ratio * rhs).
inline PhiComparison compare_up_to_constant(const SPoly& lhs, const SPoly& rhs) {
  PhiComparison out;
  if (lhs.is_zero() || rhs.is_zero()) {
    out.proportional = lhs.is_zero() && rhs.is_zero();
    out.ratio = Surd(out.proportional ? 1 : 0);
    return out;
  }
  // leading term in the fixed monomial order
  out.ratio = lhs.terms().rbegin()->second / rhs.terms().rbegin()->second;
  SPoly diff = lhs - rhs * out.ratio;
  if (diff.is_zero()) {
    out.proportional = true;
    return out;
  }
  int count = 0;
  for (auto it = diff.terms().rbegin(); it != diff.terms().rend() && count < 12; ++it, ++count) {
    std::string t = "(" + it->second.str() + ")";
    const char* names[4] = {"x", "u", "E", "p"};
    for (int v = 0; v < 4; ++v)
      if (it->first[v] > 0) t += std::string("*") + names[v] + "^" + std::to_string(it->first[v]);
    out.mismatch_terms.push_back(t);
  }
  return out;
}

struct PhiIdentityReport {
  PhiComparison built_vs_factorized;        // minus-sign quartic variant
  PhiComparison built_plus_vs_factorized;   // plus-sign variant
  PhiComparison transcribed_vs_factorized;
  std::string resolved_quartic_sign;        // "minus", "plus", or "neither"
  bool consistent() const {
    return built_vs_factorized.proportional && transcribed_vs_factorized.proportional &&
           built_vs_factorized.ratio.sign() > 0;
  }
};

inline PhiIdentityReport verify_phi_identity(const ModelParams& mp) {
  mp.validate();
  if (mp.kappa.is_zero())
    throw std::domain_error("verify_phi_identity: kappa = 0 has no factorized reference");
  auto [spec, cas] = model_quantum_spec(mp);
  SPoly fact = factorized_phi(mp).phi;
  PhiIdentityReport rep;
  rep.built_vs_factorized =
      compare_up_to_constant(build_structure_function(spec, cas, QuarticSign::MinusTwelve).phi,
                             fact);
  rep.built_plus_vs_factorized =
      compare_up_to_constant(build_structure_function(spec, cas, QuarticSign::PlusTwelve).phi,
                             fact);
  rep.transcribed_vs_factorized = compare_up_to_constant(transcribed_phi(mp).phi, fact);
  if (rep.built_vs_factorized.proportional)
    rep.resolved_quartic_sign = "minus";
  else if (rep.built_plus_vs_factorized.proportional)
    rep.resolved_quartic_sign = "plus";
  else
    rep.resolved_quartic_sign = "neither";
  return rep;
}

}  // namespace casimir
