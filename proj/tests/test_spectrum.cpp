#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "casimir/spectrum.hpp"

using namespace casimir;

static ModelParams params(long hbar, long kappa, long omega_sq) {
  ModelParams p;
  p.hbar = Rational(hbar);
  p.kappa = Rational(kappa);
  p.omega_sq = Rational(omega_sq);
  return p;
}

TEST_CASE("closed form u values") {
  auto u = closed_form_u(params(1, 1, 1), Surd(0));
  REQUIRE(u.size() == 8);
  double s5 = std::sqrt(5.0);
  REQUIRE(std::abs(u[0].approx - (0.25 - s5 / 4)) < 1e-14);
  REQUIRE(std::abs(u[1].approx - (0.25 + s5 / 4)) < 1e-14);
  REQUIRE(std::abs(u[2].approx - (0.75 + s5 / 4)) < 1e-14);
  REQUIRE(std::abs(u[3].approx - (0.75 - s5 / 4)) < 1e-14);
  // radicands coincide at E = 0: u5 = u1
  REQUIRE(u[4].exact.value() == u[0].exact.value());
  // conjugate-pair sums
  REQUIRE((*u[0].exact + *u[1].exact) == Surd(Rational(1, 2)));
  REQUIRE((*u[2].exact + *u[3].exact) == Surd(Rational(3, 2)));
}

TEST_CASE("closed form u flags complex branches") {
  // very negative E makes the shifted radicand negative
  auto u = closed_form_u(params(1, 1, 1), Surd(-100));
  REQUIRE_FALSE(u[4].is_real);
  REQUIRE(u[0].is_real);
}

TEST_CASE("closed form energies") {
  Surd e0 = energy_closed_form(0, params(1, 1, 1), Parity::EvenFormula);
  REQUIRE(e0 == Surd(Rational(1, 2), Rational(-1, 2), Rational(5)));
  REQUIRE(std::abs(e0.to_double() + 0.6180339887498949) < 1e-15);
  Surd e1 = energy_closed_form(1, params(1, 1, 1), Parity::EvenFormula);
  REQUIRE(e1 == Surd(Rational(9, 2), Rational(-3, 2), Rational(5)));
  REQUIRE(std::abs(e1.to_double() - 1.1458980337503155) < 1e-14);
  // omega = 0, kappa > 0: the radicand becomes a perfect square and E = 0
  ModelParams w0 = params(1, 1, 1);
  w0.omega_sq = Rational(0);
  REQUIRE(energy_closed_form(0, w0, Parity::EvenFormula) == Surd(0));
  REQUIRE_THROWS(energy_closed_form(-1, params(1, 1, 1), Parity::EvenFormula));
}

TEST_CASE("monotone gap sanity") {
  // hyperbolic: strictly decreasing in p; spherical: eventually positive growth
  auto hyp = params(1, -1, 2);
  for (int p = 0; p < 10; ++p) {
    REQUIRE(energy_closed_form(p + 1, hyp, Parity::EvenFormula) <
            energy_closed_form(p, hyp, Parity::EvenFormula));
  }
  auto sph = params(1, 1, 1);
  REQUIRE(energy_closed_form(10, sph, Parity::EvenFormula).sign() > 0);
}

TEST_CASE("closed form spectrum contains printed formulas") {
  auto mp = params(1, 1, 1);
  auto res = solve_spectrum(mp, 2, SolveMode::ClosedForm);
  REQUIRE_FALSE(res.lines.empty());
  for (int p = 0; p <= 2; ++p) {
    for (Parity par : {Parity::EvenFormula, Parity::OddFormula}) {
      Surd e = energy_closed_form(p, mp, par);
      bool found = false;
      for (const auto& l : res.lines) {
        if (l.p != p || l.u_branch != "u1" || !l.E_exact) continue;
        if ((*l.E_exact - e).is_zero()) {
          found = true;
          REQUIRE(l.matches_closed_form);
          REQUIRE(l.phi0_zero);
          REQUIRE(l.phiP1_zero);
          REQUIRE(l.all_positive);
          REQUIRE(l.exact);
        }
      }
      INFO("p=" << p << " parity=" << (par == Parity::EvenFormula ? "even" : "odd"));
      REQUIRE(found);
    }
  }
}

TEST_CASE("ladder values and amplitudes") {
  auto mp = params(1, 1, 1);
  auto res = solve_spectrum(mp, 1, SolveMode::ClosedForm);
  Surd e1 = energy_closed_form(1, mp, Parity::EvenFormula);
  const SpectrumLine* target = nullptr;
  for (const auto& l : res.lines)
    if (l.p == 1 && l.u_branch == "u1" && l.E_exact && (*l.E_exact - e1).is_zero()) target = &l;
  REQUIRE(target != nullptr);
  REQUIRE(target->phi_ladder.size() == 1);
  REQUIRE(std::abs(target->phi_ladder[0] - 1.8330307592293316e10) < 10.0);
  auto amps = ladder_amplitudes(*target);
  REQUIRE(amps.size() == 1);
  REQUIRE(std::abs(amps[0] * amps[0] - target->phi_ladder[0]) < 1e-4);
  // p = 0 lines have empty ladders
  for (const auto& l : res.lines)
    if (l.p == 0) REQUIRE(l.phi_ladder.empty());
}

TEST_CASE("mode agreement on the sphere") {
  auto mp = params(1, 1, 1);
  auto closed = solve_spectrum(mp, 3, SolveMode::ClosedForm);
  auto generic = solve_spectrum(mp, 3, SolveMode::Generic);
  for (const auto& cl : closed.lines) {
    bool found = false;
    for (const auto& gl : generic.lines) {
      if (gl.p != cl.p) continue;
      if (std::abs(gl.E - cl.E) < 1e-10 && std::abs(gl.u - cl.u) < 1e-10) found = true;
    }
    INFO("closed line p=" << cl.p << " u=" << cl.u << " E=" << cl.E
                          << " branch=" << cl.u_branch);
    REQUIRE(found);
  }
}

TEST_CASE("mode agreement on the hyperbolic plane") {
  auto mp = params(1, -1, 2);
  auto closed = solve_spectrum(mp, 2, SolveMode::ClosedForm);
  auto generic = solve_spectrum(mp, 2, SolveMode::Generic);
  REQUIRE_FALSE(closed.lines.empty());
  for (const auto& cl : closed.lines) {
    bool found = false;
    for (const auto& gl : generic.lines)
      if (gl.p == cl.p && std::abs(gl.E - cl.E) < 1e-10 && std::abs(gl.u - cl.u) < 1e-10)
        found = true;
    INFO("closed line p=" << cl.p << " u=" << cl.u << " E=" << cl.E);
    REQUIRE(found);
  }
}

TEST_CASE("flat branch consistency") {
  // gamma = 0 solver at kappa = 0 vs the gamma != 0 machinery at tiny kappa
  auto flat = solve_spectrum(params(1, 0, 1), 3, SolveMode::Generic);
  REQUIRE_FALSE(flat.lines.empty());
  ModelParams tiny = params(1, 1, 1);
  tiny.kappa = Rational(1, 10000000000L);
  auto curved = solve_spectrum(tiny, 3, SolveMode::ClosedForm);
  for (const auto& fl : flat.lines) {
    if (std::abs(fl.E) > 100) continue;
    bool found = false;
    for (const auto& cl : curved.lines)
      if (cl.p == fl.p && std::abs(cl.E - fl.E) < 1e-8) found = true;
    INFO("flat line p=" << fl.p << " E=" << fl.E << " u=" << fl.u);
    REQUIRE(found);
  }
}

TEST_CASE("parity shift identity") {
  REQUIRE(parity_shift_identity_holds(params(1, 1, 1)));
  REQUIRE(parity_shift_identity_holds(params(1, -1, 4)));
  REQUIRE(parity_shift_identity_holds(params(2, 1, 9)));
}

TEST_CASE("input validation") {
  REQUIRE_THROWS(solve_spectrum(params(1, 1, 1), -1, SolveMode::ClosedForm));
  REQUIRE_THROWS(solve_spectrum(params(1, 0, 1), 1, SolveMode::ClosedForm));
  SpectrumLine bad;
  bad.phi_ladder = {-1.0};
  REQUIRE_THROWS(ladder_amplitudes(bad));
}
