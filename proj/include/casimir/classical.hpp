// Numerical verification of the classical quadratic Poisson algebra on
// sampled phase-space points, with finite-difference brackets.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/model.hpp"

namespace casimir {

struct PhasePoint {
  double x = 0, y = 0, px = 0, py = 0;
};

/// Double-precision view of the parameters for the classical module.
struct ClassicalParams {
  double lambda = 0, kappa = 0, omega_sq = 1;

  static ClassicalParams from(const ModelParams& mp) {
    ClassicalParams cp;
    cp.lambda = mp.lambda().to_double();
    cp.kappa = mp.kappa.to_double();
    cp.omega_sq = mp.omega_sq.to_double();
    return cp;
  }
};

using Observable = std::function<double(const PhasePoint&)>;

inline double metric_factor(const ClassicalParams& p, const PhasePoint& pt) {
  return 1.0 + p.lambda * (pt.x * pt.x + pt.y * pt.y);
}

struct ClassicalInvariantSet {
  double H, H1, H2, H3, C1, C2, C3, C4, C5, F1, F2;
};

inline ClassicalInvariantSet eval_observables(const PhasePoint& pt, const ClassicalParams& p) {
  double g = metric_factor(p, pt);
  if (g <= 0) throw std::domain_error("eval_observables: metric factor not positive");
  ClassicalInvariantSet s{};
  s.H1 = 0.5 * (g * pt.px * pt.px + p.omega_sq * pt.x * pt.x / g);
  s.H2 = 0.5 * (g * pt.py * pt.py + p.omega_sq * pt.y * pt.y / g);
  double ang = pt.x * pt.py - pt.y * pt.px;
  s.H3 = 0.5 * ang * ang;
  s.H = s.H1 + s.H2 - p.lambda * s.H3;
  s.C1 = s.H;
  s.C2 = s.H1;
  s.C3 = s.H2;
  s.C4 = ang;
  s.C5 = g * pt.px * pt.py + p.omega_sq * pt.x * pt.y / g;
  s.F1 = s.C1 - (s.C2 + s.C3 + 0.5 * p.kappa * s.C4 * s.C4);
  // the omega^2 reading of the printed alpha^2 constant
  s.F2 = 2.0 * s.C2 * s.C3 - 0.5 * p.omega_sq * s.C4 * s.C4 - 0.5 * s.C5 * s.C5;
  return s;
}

enum class Obs { H, H1, H2, H3, C1, C2, C3, C4, C5, Xc, Yc, Px, Py };

inline Observable observable(Obs id, const ClassicalParams& p) {
  return [id, p](const PhasePoint& pt) -> double {
    switch (id) {
      case Obs::Xc: return pt.x;
      case Obs::Yc: return pt.y;
      case Obs::Px: return pt.px;
      case Obs::Py: return pt.py;
      default: break;
    }
    auto s = eval_observables(pt, p);
    switch (id) {
      case Obs::H: return s.H;
      case Obs::H1: case Obs::C2: return s.H1;
      case Obs::H2: case Obs::C3: return s.H2;
      case Obs::H3: return s.H3;
      case Obs::C1: return s.C1;
      case Obs::C4: return s.C4;
      case Obs::C5: return s.C5;
      default: throw std::invalid_argument("observable: unknown id");
    }
  };
}

namespace cdetail {

// central difference with one Richardson level: (4 D(h/2) - D(h)) / 3
inline double partial(const Observable& f, PhasePoint pt, int coord, double h) {
  auto shift = [&](double d) {
    PhasePoint q = pt;
    (coord == 0   ? q.x
     : coord == 1 ? q.y
     : coord == 2 ? q.px
                  : q.py) += d;
    return f(q);
  };
  auto central = [&](double hh) { return (shift(hh) - shift(-hh)) / (2.0 * hh); };
  return (4.0 * central(h / 2) - central(h)) / 3.0;
}

}  // namespace cdetail

/// Canonical Poisson bracket by finite differences of step h.
inline double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& pt,
                              double h) {
  using cdetail::partial;
  return partial(f, pt, 0, h) * partial(g, pt, 2, h) - partial(f, pt, 2, h) * partial(g, pt, 0, h) +
         partial(f, pt, 1, h) * partial(g, pt, 3, h) - partial(f, pt, 3, h) * partial(g, pt, 1, h);
}

inline double poisson_bracket(Obs f, Obs g, const PhasePoint& pt, const ClassicalParams& p,
                              double h = 1e-5) {
  return poisson_bracket(observable(f, p), observable(g, p), pt, h);
}

/// Bracket as a reusable observable; nested brackets need a wider step at
/// each level to keep the difference noise below the truncation gain.
inline Observable bracket_observable(Observable f, Observable g, double h) {
  return [f = std::move(f), g = std::move(g), h](const PhasePoint& pt) {
    return poisson_bracket(f, g, pt, h);
  };
}

struct ResidualTable {
  double max_AC = 0;        // {A,C} vs quadratic-algebra right-hand side
  double max_BC = 0;        // {B,C} row
  double max_jacobi = 0;    // {A,{B,C}} - {B,{A,C}}
  double max_casimir = 0;   // K of the classical algebra, expected 0
  double max_conservation = 0;  // {H,A}, {H,B}
  double max_F1 = 0, max_F2 = 0;
  double max_bracket_table = 0;  // six C_i bracket identities
  double max_antisymmetry = 0;
  int points_used = 0;
  std::string convention;  // "lambda = -kappa" or "lambda = kappa"

  bool pass(double tol_fd = 1e-5, double tol_exact = 1e-10) const {
    return max_AC < tol_fd && max_BC < tol_fd && max_jacobi < tol_fd && max_casimir < tol_fd &&
           max_conservation < 1e-6 && max_F1 < tol_exact && max_F2 < tol_exact &&
           max_bracket_table < tol_fd && max_antisymmetry < tol_fd;
  }
};

inline std::vector<PhasePoint> sample_points(const ClassicalParams& p, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pos(-0.5, 0.5), mom(-1.0, 1.0);
  std::vector<PhasePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    PhasePoint pt{pos(rng), pos(rng), mom(rng), mom(rng)};
    if (metric_factor(p, pt) > 0.1) pts.push_back(pt);
  }
  return pts;
}

inline ResidualTable verify_quadratic_poisson(const ModelParams& mp, int n_points, unsigned seed) {
  if (n_points < 1) throw std::invalid_argument("verify_quadratic_poisson: need n_points >= 1");
  ClassicalParams p = ClassicalParams::from(mp);
  ResidualTable table;
  table.convention = mp.convention == KappaConvention::LambdaIsMinusKappa
                         ? "lambda = -kappa"
                         : "lambda = kappa";
  // classical coefficients for A = 2 H1, B = 2 H3
  const double alpha = -8, gamma = -8 * p.kappa, eps = -16 * p.omega_sq;

  Observable A = [p](const PhasePoint& pt) { return 2.0 * eval_observables(pt, p).H1; };
  Observable B = [p](const PhasePoint& pt) { return 2.0 * eval_observables(pt, p).H3; };
  Observable Hf = observable(Obs::H, p);

  const double h1 = 1e-5;              // plain brackets
  const double hn1 = 1e-3, hn2 = 5e-3; // C inside one more bracket level
  const double hj1 = 1e-3, hj2 = 5e-3, hj3 = 2e-2;  // Jacobi triple nesting

  auto pts = sample_points(p, n_points, seed);
  auto upd = [](double& slot, double v) { slot = std::max(slot, std::abs(v)); };

  for (const auto& pt : pts) {
    auto s = eval_observables(pt, p);
    double Av = 2 * s.H1, Bv = 2 * s.H3;
    double delta = 16 * s.H;

    Observable C1b = bracket_observable(A, B, hn1);
    double Cv = poisson_bracket(A, B, pt, h1);
    double AC = poisson_bracket(A, C1b, pt, hn2);
    double BC = poisson_bracket(B, C1b, pt, hn2);
    upd(table.max_AC, AC - (alpha * Av * Av + 2 * gamma * Av * Bv + delta * Av + eps * Bv));
    upd(table.max_BC, BC - (-gamma * Bv * Bv - 2 * alpha * Av * Bv - delta * Bv));

    // Jacobi: {A,{B,C}} = {B,{A,C}}
    Observable Cj = bracket_observable(A, B, hj1);
    Observable BCj = bracket_observable(B, Cj, hj2);
    Observable ACj = bracket_observable(A, Cj, hj2);
    upd(table.max_jacobi,
        poisson_bracket(A, BCj, pt, hj3) - poisson_bracket(B, ACj, pt, hj3));

    // Casimir of the classical algebra, zero for this model
    double K = Cv * Cv - 2 * alpha * Av * Av * Bv - 2 * gamma * Av * Bv * Bv -
               2 * delta * Av * Bv - eps * Bv * Bv;
    upd(table.max_casimir, K);

    upd(table.max_conservation, poisson_bracket(Hf, A, pt, h1));
    upd(table.max_conservation, poisson_bracket(Hf, B, pt, h1));
    upd(table.max_F1, s.F1);
    upd(table.max_F2, s.F2);

    // Tegmen bracket table
    double w2 = p.omega_sq, k = p.kappa;
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C2, Obs::C4, pt, p, h1) - (-s.C5));
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C2, Obs::C3, pt, p, h1) - k * s.C4 * s.C5);
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C2, Obs::C5, pt, p, h1) - (w2 * s.C4 + 2 * k * s.C2 * s.C4));
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C3, Obs::C4, pt, p, h1) - s.C5);
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C3, Obs::C5, pt, p, h1) - (-w2 * s.C4 - 2 * k * s.C3 * s.C4));
    upd(table.max_bracket_table,
        poisson_bracket(Obs::C4, Obs::C5, pt, p, h1) - (2 * s.C3 - 2 * s.C2));

    upd(table.max_antisymmetry, poisson_bracket(Obs::C2, Obs::C4, pt, p, h1) +
                                    poisson_bracket(Obs::C4, Obs::C2, pt, p, h1));
    ++table.points_used;
  }
  return table;
}

}  // namespace casimir
