#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "casimir/multipoly.hpp"
#include "casimir/resultant.hpp"
#include "casimir/roots.hpp"
#include "casimir/unipoly.hpp"

using casimir::MultiPoly;
using casimir::Rational;
using casimir::real_roots;
using casimir::square_free;
using casimir::Surd;
using casimir::sylvester_resultant;
using casimir::UniPoly;
using casimir::Var;

using MP = MultiPoly<Rational>;
using UP = UniPoly<Rational>;

static MP X() { return MP::var(Var::X); }
static MP U() { return MP::var(Var::U); }
static MP E() { return MP::var(Var::En); }

TEST_CASE("multipoly arithmetic") {
  REQUIRE((X() + U()) * (X() - U()) == X() * X() - U() * U());
  MP p = X() * X() * E() + MP(3) * U();
  REQUIRE(p + MP(0) == p);
  MP q = (MP(2) * (X() + U()) - MP(1)).pow(2);
  MP expect = MP(4) * X() * X() + MP(8) * X() * U() + MP(4) * U() * U() - MP(4) * X() -
              MP(4) * U() + MP(1);
  REQUIRE(q == expect);
  REQUIRE((p - p).is_zero());
}

TEST_CASE("multipoly substitution") {
  MP p = X() * X() - U() * U();
  REQUIRE(p.substitute(Var::X, Rational(0)) == -(U() * U()));
  // simultaneous vs sequential
  MP q = X() * U() + X() + U();
  auto seq = q.substitute(Var::X, Rational(2)).substitute(Var::U, Rational(3));
  auto sim = q.substitute({{Var::X, MP(2)}, {Var::U, MP(3)}});
  REQUIRE(seq == sim);
  REQUIRE(sim.constant_value() == Rational(11));
  // polynomial substitution: x -> u + 1
  MP r = (X() * X()).substitute(Var::X, U() + MP(1));
  REQUIRE(r == U() * U() + MP(2) * U() + MP(1));
}

TEST_CASE("collect in a variable") {
  MP p = X() * X() * E() + X() * E() + MP(1);
  auto c = p.collect(Var::En);
  REQUIRE(c.size() == 2);
  REQUIRE(c[0] == MP(1));
  REQUIRE(c[1] == X() * X() + X());
  auto k = MP(7).collect(Var::En);
  REQUIRE(k.size() == 1);
  REQUIRE(k[0] == MP(7));
}

TEST_CASE("evaluate and to_unipoly") {
  MP p = X() * X() * U() - E();
  REQUIRE(p.evaluate({{Var::X, Rational(2)}, {Var::U, Rational(3)}, {Var::En, Rational(5)}}) ==
          Rational(7));
  MP q = E() * E() - MP(2) * E() + MP(1);
  UP uq = q.to_unipoly(Var::En);
  REQUIRE(uq.degree() == 2);
  REQUIRE(uq.evaluate(Rational(1)) == Rational(0));
}

TEST_CASE("unipoly division and gcd") {
  UP a(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  UP b(std::vector<Rational>{Rational(1), Rational(1)});                // x + 1
  auto [q, r] = a.divmod(b);
  REQUIRE(r.is_zero());
  REQUIRE(q == UP(std::vector<Rational>{Rational(-1), Rational(1)}));
  UP g = casimir::gcd(a, b);
  REQUIRE(g == b.monic());
  REQUIRE_THROWS(a.exact_div(UP(std::vector<Rational>{Rational(1), Rational(3)})));
}

TEST_CASE("square free decomposition") {
  // (x-1)^2 (x+3)
  UP f(std::vector<Rational>{Rational(3), Rational(-5), Rational(1), Rational(1)});
  auto parts = square_free(f);
  REQUIRE(parts.size() == 2);
  REQUIRE(parts[0] == UP(std::vector<Rational>{Rational(3), Rational(1)}));
  REQUIRE(parts[1] == UP(std::vector<Rational>{Rational(-1), Rational(1)}));
}

TEST_CASE("real roots of simple polynomials") {
  UP f(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  auto roots = real_roots(f);
  REQUIRE(roots.size() == 2);
  REQUIRE(std::abs(roots[0].approx + std::sqrt(2.0)) < 1e-11);
  REQUIRE(std::abs(roots[1].approx - std::sqrt(2.0)) < 1e-11);
  REQUIRE(roots[0].multiplicity == 1);

  UP g(std::vector<Rational>{Rational(3), Rational(-5), Rational(1), Rational(1)});
  auto groots = real_roots(g);
  REQUIRE(groots.size() == 2);
  REQUIRE(groots[0].exact.value() == Surd(-3));
  REQUIRE(groots[0].multiplicity == 1);
  REQUIRE(groots[1].exact.value() == Surd(1));
  REQUIRE(groots[1].multiplicity == 2);
}

TEST_CASE("real roots with surd candidates") {
  // u^2 - u - 1, roots (1 +- sqrt5)/2
  UP f(std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});
  Surd phi(Rational(1, 2), Rational(1, 2), Rational(5));
  Surd psi(Rational(1, 2), Rational(-1, 2), Rational(5));
  auto roots = real_roots(f, 1e-12, {phi, psi});
  REQUIRE(roots.size() == 2);
  REQUIRE(roots[0].exact.value() == psi);
  REQUIRE(roots[1].exact.value() == phi);
}

TEST_CASE("real roots rejects zero polynomial") {
  REQUIRE_THROWS(real_roots(UP()));
}

TEST_CASE("sturm count matches root count on random products") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    UP f(std::vector<Rational>{Rational(1)});
    std::vector<long> rs;
    for (int k = 0; k < 4; ++k) {
      long r = d(rng);
      rs.push_back(r);
      f = f * UP(std::vector<Rational>{Rational(-r), Rational(1)});
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    auto roots = real_roots(f);
    REQUIRE(roots.size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      REQUIRE(roots[i].exact.value() == Surd(rs[i]));
    }
  }
}

TEST_CASE("resultant eliminates shared variable") {
  using R = UniPoly<Rational>;
  R Ev = R::monomial(Rational(1), 1);  // the symbol E
  // p = E - u, q = u - 2, coefficients ascending in u
  std::vector<R> p{Ev, R(-1)};
  std::vector<R> q{R(-2), R(1)};
  R res = sylvester_resultant(p, q);
  R target(std::vector<Rational>{Rational(-2), Rational(1)});
  bool up_to_sign = (res == target) || (res == -target);
  REQUIRE(up_to_sign);
  REQUIRE(res.evaluate(Rational(2)).is_zero());
}

TEST_CASE("resultant vanishes exactly on shared roots") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    Rational a(d(rng)), b(d(rng)), c(d(rng));
    // p = (u - a)(u - b), q = (u - a)(u - c): share root a
    std::vector<Rational> p{a * b, -(a + b), Rational(1)};
    std::vector<Rational> q{a * c, -(a + c), Rational(1)};
    REQUIRE(sylvester_resultant(p, q).is_zero());
    if (b != c) {
      // remove the shared root: resultant of (u-a)(u-b) and (u-c) is nonzero iff c not in {a,b}
      std::vector<Rational> q2{-c, Rational(1)};
      bool shares = (c == a) || (c == b);
      REQUIRE(sylvester_resultant(p, q2).is_zero() == shares);
    }
  }
}

TEST_CASE("resultant input validation") {
  std::vector<Rational> k{Rational(3)};
  REQUIRE_THROWS(sylvester_resultant(k, k));
  std::vector<Rational> z;
  std::vector<Rational> l{Rational(1), Rational(1)};
  REQUIRE_THROWS(sylvester_resultant(z, l));
}

TEST_CASE("bareiss determinant with pivoting") {
  using casimir::bareiss_determinant;
  std::vector<std::vector<Rational>> m{
      {Rational(0), Rational(2), Rational(1)},
      {Rational(1), Rational(0), Rational(3)},
      {Rational(2), Rational(1), Rational(0)},
  };
  REQUIRE(bareiss_determinant(m) == Rational(13));
  std::vector<std::vector<Rational>> sing{
      {Rational(1), Rational(2)},
      {Rational(2), Rational(4)},
  };
  REQUIRE(bareiss_determinant(sing).is_zero());
}
