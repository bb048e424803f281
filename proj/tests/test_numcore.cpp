#include "doctest.h"

#include "resurgix/cplx.hpp"
#include "resurgix/holoexpr.hpp"
#include "resurgix/laurent.hpp"
#include "resurgix/linalg.hpp"
#include "resurgix/mjet.hpp"
#include "resurgix/series.hpp"

#include <random>

using namespace resurgix;

namespace {
Real tol(int d) { return pow_int(Cplx(Real(10)), -d).re; }

Cplx rand_cplx(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return Cplx(Real(u(rng)), Real(u(rng)));
}
}  // namespace

TEST_CASE("complex basics") {
  set_working_bits(128);
  Cplx z(Real(3), Real(4));
  CHECK(abs(z) == Real(5));
  CHECK(abs(exp(log(z)) - z) < tol(30));
  CHECK(abs(sqrt(z) * sqrt(z) - z) < tol(30));
  // principal log of -1 is i*pi
  Cplx l = log(Cplx(-1));
  CHECK(abs(l - Cplx(Real(0), pi())) < tol(35));
  // branch offset
  Cplx l2 = log_branch(Cplx(-1), -1);
  CHECK(abs(l2 - Cplx(Real(0), -pi())) < tol(35));
}

TEST_CASE("li2 reference values") {
  set_working_bits(192);
  // independent oracle: direct series summation of sum z^k/k^2 at z=1 is
  // pi^2/6 (slow convergence, so compare against the constant directly)
  Cplx v1 = li2(Cplx(Real(1)) - Cplx(tol(40)));
  CHECK(abs(v1 - Cplx(pi() * pi() / 6)) < tol(35));
  // Li2(1/2) = pi^2/12 - log(2)^2/2
  Cplx vhalf = li2(Cplx(Real(1) / 2));
  Real log2 = log(Cplx(Real(2))).re;
  CHECK(abs(vhalf - Cplx(pi() * pi() / 12 - log2 * log2 / 2)) < tol(45));
  // Li2(-1) = -pi^2/12
  CHECK(abs(li2(Cplx(Real(-1))) + Cplx(pi() * pi() / 12)) < tol(45));
  // golden ratio identity: Li2((sqrt5-1)/2) = pi^2/10 - log^2((sqrt5-1)/2)
  Real s5 = sqrt(Cplx(Real(5))).re;
  Real xg = (s5 - 1) / 2;
  Real lg = log(Cplx(xg)).re;
  CHECK(abs(li2(Cplx(xg)) - Cplx(pi() * pi() / 10 - lg * lg)) < tol(45));
  // Li2(-golden) = -pi^2/10 - log^2(phi)
  Real phi = (s5 + 1) / 2;
  Real lp = log(Cplx(phi)).re;
  CHECK(abs(li2(Cplx(-phi)) - Cplx(-pi() * pi() / 10 - lp * lp)) < tol(45));
  // consistency across region switches: reflection vs annulus code paths
  // checked by the defining ODE below (jet test); here check inversion region
  Cplx z(Real(3), Real("0.7"));
  Cplx lhs = li2(z) + li2(Cplx(1) / z);
  Cplx lmz = log(-z);
  CHECK(abs(lhs - (Cplx(-pi() * pi() / 6) - lmz * lmz / Cplx(2))) < tol(40));
}

TEST_CASE("series arithmetic: spec examples") {
  set_working_bits(128);
  // exp(log(1 + h)) at K=8 -> 1 + h exactly
  unsigned K = 8;
  std::vector<Cplx> c(K + 1);
  c[0] = Cplx(1);
  c[1] = Cplx(1);
  FormalSeries oneph(std::move(c));
  FormalSeries back = series_exp(series_log(oneph));
  CHECK(abs(back[0] - Cplx(1)) < tol(35));
  CHECK(abs(back[1] - Cplx(1)) < tol(35));
  for (unsigned k = 2; k <= K; ++k) CHECK(abs(back[k]) < tol(35));

  // reversion of u = h + h^2 at K=3 -> h - h^2 + 2h^3
  std::vector<Cplx> u(4);
  u[1] = Cplx(1);
  u[2] = Cplx(1);
  FormalSeries us(std::move(u));
  FormalSeries v = series_reversion(us);
  CHECK(abs(v[1] - Cplx(1)) < tol(35));
  CHECK(abs(v[2] - Cplx(-1)) < tol(35));
  CHECK(abs(v[3] - Cplx(2)) < tol(35));
  // derived check: u(v(h)) = h to order 3
  FormalSeries comp = series_compose(us, v);
  CHECK(abs(comp[1] - Cplx(1)) < tol(35));
  CHECK(abs(comp[2]) < tol(35));
  CHECK(abs(comp[3]) < tol(35));

  // (1/(1-h)) * (1-h) = 1 at K=5
  std::vector<Cplx> w(6);
  w[0] = Cplx(1);
  w[1] = Cplx(-1);
  FormalSeries onemh(std::move(w));
  FormalSeries prod = series_reciprocal(onemh) * onemh;
  CHECK(abs(prod[0] - Cplx(1)) < tol(35));
  for (unsigned k = 1; k <= 5; ++k) CHECK(abs(prod[k]) < tol(35));
}

TEST_CASE("series reversion round trip at high order") {
  set_working_bits(192);
  std::mt19937 rng(7);
  unsigned K = 40;
  std::vector<Cplx> a(K + 1);
  a[1] = Cplx(Real(1), Real("0.3"));
  for (unsigned k = 2; k <= K; ++k) a[k] = rand_cplx(rng);
  FormalSeries as(std::move(a));
  FormalSeries inv = series_reversion(as);
  FormalSeries comp = series_compose(as, inv);
  Real bound = pow2(-96);  // residual < 2^{-p/2}
  CHECK(abs(comp[1] - Cplx(1)) < bound);
  for (unsigned k = 2; k <= K; ++k) CHECK(abs(comp[k]) < bound);
  // errors
  CHECK_THROWS_AS(series_reciprocal(FormalSeries::identity(4)), ZeroLeadingCoefficient);
  CHECK_THROWS_AS(series_log(FormalSeries::identity(4)), ZeroLeadingCoefficient);
}

TEST_CASE("expr eval and jets: spec examples") {
  set_working_bits(128);
  // e = z^3/3 - z at x=1, first derivative -> 0
  auto e = parse_expr("z^3/3 - z", 1);
  Cplx d = holo_deriv(e, {Cplx(1)}, {1});
  CHECK(abs(d) < tol(35));
  // e = li2(z) near 1 -> pi^2/6
  auto e2 = parse_expr("li2(z)", 1);
  Cplx v = holo_eval(e2, {Cplx(Real(1) - tol(30))});
  CHECK(abs(v - Cplx(pi() * pi() / 6)) < tol(25));
  // e = log(z) at -1 -> i pi
  auto e3 = parse_expr("log(z)", 1);
  CHECK(abs(holo_eval(e3, {Cplx(-1)}) - Cplx(Real(0), pi())) < tol(35));
  // parse error reports offset
  CHECK_THROWS_AS(parse_expr("z +* 2", 1), ParseError);
}

TEST_CASE("jet derivatives match central finite differences") {
  set_working_bits(256);
  std::mt19937 rng(11);
  auto e = parse_expr("exp(z1*z2) + li2(z1/2 + z2^2/4) - log(2 + z1)", 2);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Cplx> x{rand_cplx(rng, 0.4), rand_cplx(rng, 0.4)};
    MJet j = holo_jet(e, x, 3);
    Real h = Real(1) / 1024;
    // d/dz1: central difference
    Cplx fp = holo_eval(e, {x[0] + Cplx(h), x[1]});
    Cplx fm = holo_eval(e, {x[0] - Cplx(h), x[1]});
    Cplx fd = (fp - fm) / Cplx(2 * h);
    Cplx jd = j.deriv({1, 0});
    CHECK(abs(fd - jd) < 10 * h * h * (abs(jd) + 1));
    // mixed d2/dz1dz2
    Cplx fpp = holo_eval(e, {x[0] + Cplx(h), x[1] + Cplx(h)});
    Cplx fpm = holo_eval(e, {x[0] + Cplx(h), x[1] - Cplx(h)});
    Cplx fmp = holo_eval(e, {x[0] - Cplx(h), x[1] + Cplx(h)});
    Cplx fmm = holo_eval(e, {x[0] - Cplx(h), x[1] - Cplx(h)});
    Cplx fd2 = (fpp - fpm - fmp + fmm) / Cplx(4 * h * h);
    Cplx jd2 = j.deriv({1, 1});
    CHECK(abs(fd2 - jd2) < 10 * h * h * (abs(jd2) + 1));
  }
}

TEST_CASE("li2 jet consistent with defining ODE") {
  set_working_bits(128);
  // z li2'(z) = -log(1-z)
  auto li = parse_expr("li2(z)", 1);
  auto rhs = parse_expr("-log(1 - z)", 1);
  for (const char* pt : {"0.3", "-0.8", "0.4"}) {
    Cplx z(real_from_string(pt));
    z += Cplx(Real(0), Real("0.2"));
    Cplx lhs = z * holo_deriv(li, {z}, {1});
    CHECK(abs(lhs - holo_eval(rhs, {z})) < tol(30));
  }
}

TEST_CASE("laurent normalize: spec examples") {
  std::vector<std::string> names{"a", "b", "f", "g", "s"};
  unsigned n = 5;
  auto V = [&](unsigned i, int p = 1) { return LaurentPoly::variable(n, i, p); };
  auto C = [&](long c) { return LaurentPoly::constant(n, Int(c)); };

  // (a^2-1)/(a-1) -> a+1
  LaurentRational r(V(0) * V(0) - C(1), V(0) - C(1));
  LaurentRational canon = r.canonicalized();
  LaurentRational expect = LaurentRational::from_poly(V(0) + C(1)).canonicalized();
  CHECK(canon.num() == expect.num());
  CHECK(canon.den() == expect.den());

  // ((a^3 f - a^2 f)(b^2 g - b^3 g)) / ((1 - a^3 f)(1 - b^3 g)): canonical form
  // equals itself and evaluates consistently
  LaurentPoly a3f = V(0, 3) * V(2), a2f = V(0, 2) * V(2);
  LaurentPoly b2g = V(1, 2) * V(3), b3g = V(1, 3) * V(3);
  LaurentRational big((a3f - a2f) * (b2g - b3g), (C(1) - a3f) * (C(1) - b3g));
  LaurentRational bc = big.canonicalized();
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    std::vector<Cplx> x;
    for (int i = 0; i < 5; ++i) {
      std::uniform_real_distribution<double> u(0, 6.28);
      x.push_back(polar(Real("0.9"), Real(u(rng))));
    }
    CHECK(abs(big.eval(x) - bc.eval(x)) < tol(25));
  }

  // r / r = 1 for random nonzero r
  LaurentPoly rn = V(0, 2) * V(1, -1) + C(3) * V(4) - V(2) * V(3, 2);
  LaurentRational one = LaurentRational(rn, C(1)) / LaurentRational(rn, C(1));
  LaurentRational onec = one.canonicalized();
  CHECK(onec.num() == C(1));
  CHECK(onec.den() == C(1));

  // zero denominator rejected
  CHECK_THROWS_AS(LaurentRational(C(1), LaurentPoly(n)), ZeroDenominator);
}

TEST_CASE("laurent rational equality via canonical forms at specializations") {
  std::vector<std::string> names{"a", "b"};
  unsigned n = 2;
  auto V = [&](unsigned i, int p = 1) { return LaurentPoly::variable(n, i, p); };
  auto C = [&](long c) { return LaurentPoly::constant(n, Int(c)); };
  // (a^2 b - b)/(a b - b) vs (a+1)/1
  LaurentRational r1(V(0, 2) * V(1) - V(1), V(0) * V(1) - V(1));
  LaurentRational r2(V(0) + C(1), C(1));
  CHECK(r1 == r2);
  // different rationals are different
  LaurentRational r3(V(0) + C(2), C(1));
  CHECK(!(r1 == r3));
  // Laurent shifts: (a^-1 + 1) == (1 + a)/a
  LaurentRational l1(V(0, -1) + C(1), C(1));
  LaurentRational l2(V(0) + C(1), V(0));
  CHECK(l1 == l2);
}

TEST_CASE("monomial parsing") {
  std::vector<std::string> names{"a", "b", "f", "g", "s"};
  LaurentPoly m = parse_monomial("a^3*f", names);
  CHECK(m.terms().size() == 1);
  auto e = m.terms().begin()->first;
  CHECK(e[0] == 3);
  CHECK(e[2] == 1);
  LaurentPoly m2 = parse_monomial("b*s^-1", names);
  auto e2 = m2.terms().begin()->first;
  CHECK(e2[1] == 1);
  CHECK(e2[4] == -1);
  LaurentPoly m3 = parse_monomial("1", names);
  CHECK(m3.is_constant());
}

TEST_CASE("linalg") {
  set_working_bits(128);
  std::mt19937 rng(5);
  CMat A(3, 3), b(3, 1);
  for (unsigned i = 0; i < 3; ++i) {
    b(i, 0) = rand_cplx(rng);
    for (unsigned j = 0; j < 3; ++j) A(i, j) = rand_cplx(rng);
  }
  CMat x = lu_solve(A, b);
  CMat r = A * x;
  for (unsigned i = 0; i < 3; ++i) CHECK(abs(r(i, 0) - b(i, 0)) < tol(30));
  // inverse * A = I
  CMat I = inverse(A) * A;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) CHECK(abs(I(i, j) - (i == j ? Cplx(1) : Cplx())) < tol(28));
  // complex symmetric congruence M^T H M = -Id
  CMat H(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i; j < 3; ++j) H(i, j) = H(j, i) = rand_cplx(rng);
  CMat M;
  Cplx droot;
  neg_unit_congruence(H, M, droot);
  // check M^T H M
  CMat Mt(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) Mt(i, j) = M(j, i);
  CMat res = Mt * H * M;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      CHECK(abs(res(i, j) - (i == j ? Cplx(-1) : Cplx())) < tol(28));
  // det_root^2 = det(-H)
  CMat negH(3, 3);
  for (unsigned i = 0; i < 9; ++i) negH.a[i] = -H.a[i];
  CHECK(abs(droot * droot - determinant(negH)) < tol(28));
}

TEST_CASE("precision context") {
  set_working_bits(128);
  {
    PrecisionGuard g(256);
    CHECK(working_bits() == 256);
    Real x = Real(1) / 3;
    CHECK(x.precision() >= 77);
  }
  CHECK(working_bits() == 128);
}

TEST_CASE("bernoulli and zeta(-n)") {
  auto b = bernoulli_upto(12);
  CHECK(b[2] == Rat(1, 6));
  CHECK(b[4] == Rat(-1, 30));
  CHECK(b[12] == Rat(-691, 2730));
  CHECK(zeta_neg(1) == Rat(-1, 12));
  CHECK(zeta_neg(3) == Rat(1, 120));
  CHECK(zeta_neg(2) == Rat(0));
}
