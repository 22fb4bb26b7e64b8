#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "casimir/qalgebra.hpp"
#include "casimir/roots.hpp"

using namespace casimir;

static ModelParams params(long hbar, long kappa, long omega_sq) {
  ModelParams p;
  p.hbar = Rational(hbar);
  p.kappa = Rational(kappa);
  p.omega_sq = Rational(omega_sq);
  return p;
}

TEST_CASE("model algebra coefficients") {
  auto [spec, cas] = model_quantum_spec(params(1, 1, 1));
  REQUIRE(spec.alpha == Rational(8));
  REQUIRE(spec.gamma == Rational(8));
  REQUIRE(spec.a == Rational(0));
  REQUIRE(spec.epsilon.is_zero());  // 16(omega^2 - kappa^2) = 0 here
  REQUIRE(cas.k0 == Rational(-32));
  REQUIRE(cas.k1 == Rational(-96));
  REQUIRE(cas.k2 == Rational(-48));
  REQUIRE(cas.k3 == Rational(0));

  auto [spec0, cas0] = model_quantum_spec(params(1, 0, 1));
  REQUIRE(spec0.gamma == Rational(0));
  REQUIRE(spec0.epsilon.coeff(0) == Rational(16));

  auto [specm, casm] = model_quantum_spec(params(1, -1, 4));
  // delta(E) = -8(2E - 1), zeta(E) = -16E + 32
  REQUIRE(specm.delta.coeff(0) == Rational(8));
  REQUIRE(specm.delta.coeff(1) == Rational(-16));
  REQUIRE(specm.zeta.coeff(0) == Rational(32));
  REQUIRE(specm.zeta.coeff(1) == Rational(-16));
  REQUIRE(specm.d.coeff(0) == Rational(16));
  REQUIRE(specm.z.coeff(1) == Rational(-16));
}

TEST_CASE("ladder realization gamma nonzero") {
  auto [spec, cas] = model_quantum_spec(params(1, 1, 1));
  auto lr = build_ladder(spec);
  REQUIRE(lr.branch == Branch::GammaNonzero);
  // A(N) = 4((x+u)^2 - 1/4) since eps = 0, gamma = 8
  SPoly s = SPoly::var(Var::X) + SPoly::var(Var::U);
  SPoly expect = SPoly::constant(Surd(4)) * (s * s - SPoly::constant(Surd(Rational(1, 4))));
  REQUIRE(lr.A == expect);
  // rho denominator = 3 * 2^12 * gamma^8 * s (s+1) (1+2s)^2
  Rational g8 = Rational(8).pow(8);
  SPoly one = SPoly::constant(Surd(1));
  SPoly rd = SPoly::constant(Surd(Rational(3) * Rational(4096) * g8)) * s * (s + one) *
             (one + SPoly::constant(Surd(2)) * s) * (one + SPoly::constant(Surd(2)) * s);
  REQUIRE(lr.rho_denominator == rd);
}

TEST_CASE("ladder realization gamma zero") {
  QuadraticAlgebraSpec spec;
  spec.alpha = Rational(8);
  spec.gamma = Rational(0);
  spec.a = Rational(0);
  spec.epsilon = UniPoly<Rational>(std::vector<Rational>{Rational(16)});
  auto lr = build_ladder(spec);
  REQUIRE(lr.branch == Branch::GammaZeroEpsPositive);
  SPoly s = SPoly::var(Var::X) + SPoly::var(Var::U);
  REQUIRE(lr.A == SPoly::constant(Surd(4)) * s);
  REQUIRE(lr.b_regular == SPoly::constant(Surd(-8)) * s * s);
  REQUIRE(lr.b_pole_num.is_zero());
  REQUIRE(lr.rho_denominator == SPoly::constant(Surd(1)));
}

TEST_CASE("unsupported branch rejected") {
  QuadraticAlgebraSpec spec;
  spec.gamma = Rational(0);
  spec.epsilon = UniPoly<Rational>(std::vector<Rational>{Rational(-4)});
  REQUIRE_THROWS(build_ladder(spec));
  auto [mspec, mcas] = model_quantum_spec(params(1, 1, 1));
  mspec.gamma = Rational(0);
  mspec.epsilon = UniPoly<Rational>();
  REQUIRE_THROWS(build_structure_function(mspec, mcas));
}

TEST_CASE("phi identity across parameter sets") {
  for (auto [h, k, w2] : {std::tuple<long, long, long>{1, 1, 1}, {1, -1, 4}, {2, 1, 9}}) {
    auto rep = verify_phi_identity(params(h, k, w2));
    INFO("params " << h << " " << k << " " << w2);
    REQUIRE(rep.built_vs_factorized.proportional);
    REQUIRE(rep.built_vs_factorized.ratio == Surd(1));
    REQUIRE(rep.transcribed_vs_factorized.proportional);
    REQUIRE(rep.transcribed_vs_factorized.ratio == Surd(1));
    REQUIRE(rep.resolved_quartic_sign == "minus");
    REQUIRE_FALSE(rep.built_plus_vs_factorized.proportional);
    REQUIRE_FALSE(rep.built_plus_vs_factorized.mismatch_terms.empty());
    REQUIRE(rep.consistent());
  }
}

TEST_CASE("phi degree bounds for the model") {
  auto [spec, cas] = model_quantum_spec(params(1, 1, 1));
  auto sf = build_structure_function(spec, cas);
  int deg_s = 0;
  for (const auto& [e, c] : sf.phi.terms()) deg_s = std::max(deg_s, e[0] + e[1]);
  REQUIRE(deg_s == 8);
  REQUIRE(sf.phi.degree(Var::En) == 2);
}

TEST_CASE("phi vanishes at closed-form u and E") {
  auto sf = factorized_phi(params(1, 1, 1));
  Surd u1(Rational(1, 4), Rational(-1, 4), Rational(5));
  Surd e0(Rational(1, 2), Rational(-1, 2), Rational(5));  // p = 0 energy
  REQUIRE(sf.phi.evaluate({{Var::X, Surd(0)}, {Var::U, u1}, {Var::En, e0}}).is_zero());
  // p = 1: E = 9/2 - (3/2) sqrt5, Phi(0) = Phi(2) = 0, Phi(1) = 12884901888 (310 - 138 sqrt5)
  Surd e1(Rational(9, 2), Rational(-3, 2), Rational(5));
  REQUIRE(sf.phi.evaluate({{Var::X, Surd(0)}, {Var::U, u1}, {Var::En, e1}}).is_zero());
  REQUIRE(sf.phi.evaluate({{Var::X, Surd(2)}, {Var::U, u1}, {Var::En, e1}}).is_zero());
  Surd phi1 = sf.phi.evaluate({{Var::X, Surd(1)}, {Var::U, u1}, {Var::En, e1}});
  REQUIRE(phi1 == Surd(Rational(310), Rational(-138), Rational(5)) * Surd(Rational(12884901888L)));
  REQUIRE(phi1.sign() > 0);
  REQUIRE(std::abs(phi1.to_double() - 1.8330307592293316e10) < 1.0);
}

TEST_CASE("u-roots of phi at x = 0") {
  auto [spec, cas] = model_quantum_spec(params(1, 1, 1));
  auto sf = build_structure_function(spec, cas);
  // fix E = 2: E-dependent radicand is 8E + 5 = 21
  SPoly phi0 = sf.phi.substitute(Var::X, Surd(0)).substitute(Var::En, Surd(2));
  auto up = phi0.to_unipoly(Var::U);
  std::vector<Surd> cands;
  for (auto [base, rad] : {std::pair<Rational, Rational>{Rational(1, 4), Rational(5)},
                           {Rational(3, 4), Rational(5)},
                           {Rational(1, 4), Rational(21)},
                           {Rational(3, 4), Rational(21)}}) {
    cands.emplace_back(base, Rational(-1, 4), rad);
    cands.emplace_back(base, Rational(1, 4), rad);
  }
  auto roots = real_roots(up, 1e-12, cands);
  REQUIRE(roots.size() == 8);
  int exact_count = 0;
  for (const auto& r : roots) {
    REQUIRE(r.multiplicity == 1);
    if (r.exact) ++exact_count;
  }
  REQUIRE(exact_count == 8);
  // u1 + u2 = 1/2 and u3 + u4 = 3/2 style conjugate pairing
  REQUIRE(std::abs(roots.front().approx - (0.25 - std::sqrt(5.0) / 4)) > 0.0);
}

TEST_CASE("casimir substitution commutes with assembly") {
  auto [spec, cas] = model_quantum_spec(params(1, -1, 4));
  auto sf = build_structure_function(spec, cas);
  // evaluating Phi at a numeric E equals building with K already numeric there
  Surd e(Rational(7, 3));
  Surd k_at_e(cas.evaluate(Rational(7, 3)));
  SPoly phi_at_e = sf.phi.substitute(Var::En, e);
  Surd probe = phi_at_e.evaluate({{Var::X, Surd(Rational(1, 2))}, {Var::U, Surd(Rational(1, 5))}});
  Surd direct = sf.phi.evaluate(
      {{Var::X, Surd(Rational(1, 2))}, {Var::U, Surd(Rational(1, 5))}, {Var::En, e}});
  REQUIRE(probe == direct);
  REQUIRE(cas.poly().evaluate(Rational(7, 3)) == k_at_e.rational_part());
}

TEST_CASE("gamma zero build has the quadratic quartic coefficient") {
  // at kappa = 0 the s^4 coefficient must be alpha^2 / 4, not alpha^4 / 4
  auto [spec, cas] = model_quantum_spec(params(1, 0, 1));
  auto sf = build_structure_function(spec, cas);
  REQUIRE(sf.branch == Branch::GammaZeroEpsPositive);
  Surd c4 = sf.phi.coeff({4, 0, 0, 0});
  REQUIRE(c4 == Surd(Rational(16)));  // alpha = 8
  REQUIRE(sf.phi.coeff({0, 4, 0, 0}) == Surd(Rational(16)));
}
