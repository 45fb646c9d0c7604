#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "symgb/matching.hpp"
#include "symgb/reduce.hpp"
#include "test_util.hpp"

using namespace symgb;
using namespace symgb::testutil;

namespace {

/// Rebuilds f from a reduction trace: remainder + sum of the subtracted
/// multiples. Exactness of the trace is the membership certificate for
/// f - remainder in the shifted-generator ideal.
Polynomial replayTrace(const RingSignature& sig, const NormalFormResult& res,
                       const std::vector<Polynomial>& gens) {
  Polynomial acc = res.remainder;
  for (const auto& step : res.steps) {
    Polynomial shifted = applyInc(sig, step.shift, gens[step.generatorIndex]);
    acc = acc.plus(shifted.timesTerm(step.coefficient, step.multiplier));
  }
  return acc;
}

}  // namespace

TEST_CASE("term storage merges duplicates and drops zeros") {
  RingPtr xr = xRing1();
  Monomial a = xm(*xr, 1);
  Monomial b = xm(*xr, 2);

  Polynomial f = Polynomial::fromTerms({{makeRational(2), a},
                                        {makeRational(3), b},
                                        {makeRational(-2), a},
                                        {makeRational(1, 2), b}});
  CHECK(f.termCount() == 1);
  CHECK(f.terms()[0].coeff == makeRational(7, 2));
  CHECK(f.terms()[0].mono == b);

  CHECK(Polynomial::fromTerms({{makeRational(1), a}, {makeRational(-1), a}}).isZero());
  CHECK(Polynomial::constant(makeRational(0)).isZero());
  CHECK(Polynomial::zero().degree() == -1);
  CHECK(Polynomial::constant(makeRational(5)).degree() == 0);
  CHECK(pp(*xr, "x[1,1]^2 x[1,3] + x[1,2]").degree() == 3);
}

TEST_CASE("coefficients are exact rationals") {
  RingPtr xr = xRing1();
  // 1/3 + 1/6 = 1/2 exactly.
  Polynomial f = Polynomial::constant(makeRational(1, 3)).plus(
      Polynomial::constant(makeRational(1, 6)));
  CHECK(f == Polynomial::constant(makeRational(1, 2)));

  // Huge coefficients survive arithmetic without loss.
  Polynomial big = pp(*xr, "1000000000000000000000000000000 x[1,1]");
  Polynomial sum = big.plus(big);
  CHECK(sum.terms()[0].coeff == Rational("2000000000000000000000000000000"));
  CHECK(sum.minus(big) == big);

  // Repeated halving and re-doubling is lossless.
  Polynomial h = pp(*xr, "x[1,1]");
  for (int i = 0; i < 50; ++i) h = h.timesScalar(makeRational(1, 2));
  for (int i = 0; i < 50; ++i) h = h.timesScalar(makeRational(2));
  CHECK(h == pp(*xr, "x[1,1]"));
}

TEST_CASE("polynomial arithmetic identities") {
  RingPtr yr = mixedRing();
  Polynomial f = pp(*yr, "u(1) y(1,2) - 2 y(2,3)");
  Polynomial g = pp(*yr, "3 u(2) + y(1,3)");
  Polynomial h = pp(*yr, "u(1) - u(3)");

  CHECK(f.plus(g).minus(g) == f);
  CHECK(f.minus(f).isZero());
  CHECK(f.negated().plus(f).isZero());
  CHECK(f.timesPoly(g.plus(h)) == f.timesPoly(g).plus(f.timesPoly(h)));
  CHECK(f.timesPoly(g) == g.timesPoly(f));
  CHECK(f.timesPoly(Polynomial::constant(makeRational(1))) == f);
  CHECK(f.timesPoly(Polynomial::zero()).isZero());

  // Shifts distribute over the ring operations.
  IncMap rho({2, 3, 5});
  CHECK(applyInc(*yr, rho, f.plus(g)) ==
        applyInc(*yr, rho, f).plus(applyInc(*yr, rho, g)));
  CHECK(applyInc(*yr, rho, f.timesPoly(g)) ==
        applyInc(*yr, rho, f).timesPoly(applyInc(*yr, rho, g)));
}

TEST_CASE("leading terms under the shipped orders") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);

  Polynomial f = pp(*xr, "x[1,2] - x[1,1]");
  CHECK(leadingMonomial(lex, f) == xm(*xr, 2));
  CHECK(leadingCoefficient(lex, f) == makeRational(1));

  Polynomial c = Polynomial::constant(makeRational(3));
  CHECK(leadingTerm(lex, c).mono.isOne());
  CHECK(leadingTerm(lex, c).coeff == makeRational(3));

  CHECK_THROWS_AS(leadingTerm(lex, Polynomial::zero()), ZeroPolynomial);

  // makeMonic divides through by the leading coefficient.
  Polynomial g = pp(*xr, "4 x[1,2] + 6 x[1,1]");
  Polynomial monic = makeMonic(lex, g);
  CHECK(leadingCoefficient(lex, monic) == makeRational(1));
  CHECK(monic == pp(*xr, "x[1,2] + 3/2 x[1,1]"));
}

TEST_CASE("the toric order decides y(1,2) vs y(2,1) by slot expansion") {
  RingPtr yr = pairRing();
  MonomialOrder hybrid = MonomialOrder::hybridToric(yr);

  Monomial y12 = mono(*yr, {{0, {1, 2}}});
  Monomial y21 = mono(*yr, {{0, {2, 1}}});

  // The two slot expansions differ, so the expansion comparison (not the
  // fiber tie-break) is what decides this pair.
  CHECK(!(exponentMatrixOf(*yr, y12) == exponentMatrixOf(*yr, y21)));

  Polynomial f = Polynomial::monomial(y12).minus(Polynomial::monomial(y21));
  CHECK(leadingMonomial(hybrid, f) == y12);
  CHECK(hybrid.less(y21, y12));
}

TEST_CASE("leading term commutes with index shifts") {
  RingPtr xr = xRing1();
  RingPtr yr = pairRing();
  std::vector<Polynomial> xsamples = pps(*xr, {
                                                  "x[1,2] - x[1,1]",
                                                  "x[1,1] x[1,2] + x[1,3]",
                                                  "x[1,1]^3 - 2 x[1,2] x[1,3] + 7",
                                                  "x[1,1] + x[1,2] + x[1,3] + 1",
                                              });
  std::vector<MonomialOrder> xorders{MonomialOrder::lex(xr), MonomialOrder::gradedLex(xr),
                                     MonomialOrder::gradedRevLex(xr),
                                     MonomialOrder::fiberRevLex(xr)};
  for (const auto& ord : xorders)
    for (const auto& f : xsamples)
      for (const IncMap& rho : IncMap::all(f.width(), f.width() + 2)) {
        Polynomial shifted = applyInc(*xr, rho, f);
        CHECK(leadingMonomial(ord, shifted) ==
              applyInc(*xr, rho, leadingMonomial(ord, f)));
      }

  std::vector<Polynomial> ysamples = pps(*yr, {
                                                  "y(1,2) - y(2,1)",
                                                  "y(1,2) y(3,4) - y(1,4) y(3,2)",
                                                  "y(2,1)^2 + y(1,3)",
                                              });
  std::vector<MonomialOrder> yorders{MonomialOrder::lex(yr), MonomialOrder::gradedLex(yr),
                                     MonomialOrder::gradedRevLex(yr),
                                     MonomialOrder::fiberRevLex(yr),
                                     MonomialOrder::hybridToric(yr)};
  for (const auto& ord : yorders)
    for (const auto& f : ysamples)
      for (const IncMap& rho : IncMap::all(f.width(), f.width() + 2)) {
        Polynomial shifted = applyInc(*yr, rho, f);
        CHECK(leadingMonomial(ord, shifted) ==
              applyInc(*yr, rho, leadingMonomial(ord, f)));
      }
}

TEST_CASE("single reductions pick the stated witnesses") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);

  // Reducing f by itself gives zero in one leading-term cancellation.
  Polynomial g = pp(*xr, "x[1,1] x[1,2] - x[1,1]");
  NormalFormResult self = normalForm(lex, g, {g}, true);
  CHECK(self.remainder.isZero());
  REQUIRE(!self.steps.empty());
  CHECK(self.steps[0].shift == IncMap::identity(2));
  CHECK(self.steps[0].multiplier.isOne());

  // x[1,1]x[1,3] reduces via rho = (1,3): subtract g shifted to x1 x3 - x1,
  // leaving x[1,1], which is irreducible against lead x[1,1]x[1,2].
  NormalFormResult res = normalForm(lex, pp(*xr, "x[1,1] x[1,3]"), {g}, true);
  CHECK(res.remainder == pp(*xr, "x[1,1]"));
  REQUIRE(res.steps.size() == 1);
  CHECK(res.steps[0].shift.images() == std::vector<int>{1, 3});
  CHECK(res.steps[0].multiplier.isOne());
  CHECK(res.steps[0].coefficient == makeRational(1));

  // No term of x[1,1] is divisible by the lead of x[1,2]x[1,3] - 1.
  NormalFormResult none =
      normalForm(lex, pp(*xr, "x[1,1]"), {pp(*xr, "x[1,2] x[1,3] - 1")}, true);
  CHECK(none.remainder == pp(*xr, "x[1,1]"));
  CHECK(none.steps.empty());
}

TEST_CASE("normal form contracts") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  std::vector<Polynomial> G = pps(*xr, {"x[1,1] x[1,2] - x[1,1]"});

  CHECK(normalForm(lex, Polynomial::zero(), G).remainder.isZero());
  CHECK(normalForm(lex, G[0], G).remainder.isZero());
  CHECK(normalForm(lex, pp(*xr, "x[1,1] x[1,3]"), G).remainder == pp(*xr, "x[1,1]"));

  // The remainder has no term with an equivariant divisor among the leads.
  Reducer red(lex, G);
  std::vector<Polynomial> probes = pps(*xr, {
                                                "x[1,2] x[1,4] + x[1,1]^2",
                                                "x[1,1] x[1,2] x[1,3] - 5",
                                                "x[1,3] x[1,5] + x[1,2] x[1,4] + x[1,1]",
                                            });
  for (const auto& f : probes) {
    Polynomial r = red.normalForm(f).remainder;
    for (const auto& t : r.terms()) CHECK(!red.reducible(t.mono));
  }
}

TEST_CASE("reduction traces reconstruct the input exactly") {
  RingPtr xr = xRing1();
  RingPtr yr = pairRing();

  {
    MonomialOrder lex = MonomialOrder::lex(xr);
    std::vector<Polynomial> G =
        pps(*xr, {"x[1,1] x[1,2] - x[1,1]", "x[1,1]^3 - x[1,2]"});
    std::vector<Polynomial> probes = pps(*xr, {
                                                  "x[1,2] x[1,4]",
                                                  "x[1,1]^4 + x[1,3] x[1,4] - 2",
                                                  "7 x[1,2]^3 x[1,3] + 1/3 x[1,1]",
                                              });
    for (const auto& f : probes) {
      NormalFormResult res = normalForm(lex, f, G, true);
      CHECK(replayTrace(*xr, res, G) == f);
      CHECK(res.stepCount == static_cast<long>(res.steps.size()));
    }
  }
  {
    MonomialOrder hybrid = MonomialOrder::hybridToric(yr);
    std::vector<Polynomial> G = pps(*yr, {"y(1,2) - y(2,1)"});
    std::vector<Polynomial> probes = pps(*yr, {
                                                  "y(1,3) y(2,4)",
                                                  "y(1,2) y(3,4) + y(2,3)",
                                              });
    for (const auto& f : probes) {
      NormalFormResult res = normalForm(hybrid, f, G, true);
      CHECK(replayTrace(*yr, res, G) == f);
    }
  }
}

TEST_CASE("each reduction cancels a strictly smaller term than the last") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  std::vector<Polynomial> G =
      pps(*xr, {"x[1,1] x[1,2] - x[1,1]", "x[1,1]^2 - x[1,1]"});
  std::vector<Polynomial> probes = pps(*xr, {
                                                "x[1,2]^2 x[1,3] + x[1,1] x[1,2]",
                                                "x[1,1]^3 x[1,2] - x[1,4]^2",
                                                "x[1,2] x[1,3] + x[1,1] x[1,4] + x[1,1]^2",
                                            });
  for (const auto& f : probes) {
    NormalFormResult res = normalForm(lex, f, G, true);
    REQUIRE(!res.steps.empty());
    for (size_t s = 1; s < res.steps.size(); ++s) {
      Monomial prev = res.steps[s - 1].multiplier.times(applyInc(
          *xr, res.steps[s - 1].shift, leadingMonomial(lex, G[res.steps[s - 1].generatorIndex])));
      Monomial cur = res.steps[s].multiplier.times(
          applyInc(*xr, res.steps[s].shift, leadingMonomial(lex, G[res.steps[s].generatorIndex])));
      CHECK(lex.less(cur, prev));
    }
  }
}

TEST_CASE("width-compatible reduction never widens the input") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  CHECK(lex.isWidthOrder());
  std::vector<Polynomial> G =
      pps(*xr, {"x[1,1] x[1,2] - x[1,1]", "x[1,2]^2 + x[1,1] - x[1,2]"});
  std::vector<Polynomial> probes = pps(*xr, {
                                                "x[1,3] x[1,4]",
                                                "x[1,2]^2 x[1,4] + x[1,1]",
                                                "x[1,1] x[1,2] x[1,3] x[1,4] - x[1,4]^3",
                                                "x[1,5]^2 + x[1,4] x[1,5] + x[1,3]",
                                            });
  for (const auto& f : probes) {
    NormalFormResult res = normalForm(lex, f, G, true);
    CHECK(res.remainder.width() <= f.width());
    // Stronger: no intermediate subtraction exceeds the width either.
    for (const auto& step : res.steps) {
      Polynomial used = applyInc(*xr, step.shift, G[step.generatorIndex])
                            .timesTerm(step.coefficient, step.multiplier);
      CHECK(used.width() <= f.width());
    }
  }
}

TEST_CASE("classical reduction uses plain divisibility only") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  // Equivariantly x[1,1] reduces x[1,2]; classically it does not.
  Polynomial g = pp(*xr, "x[1,1]");
  CHECK(classicalNormalForm(lex, pp(*xr, "x[1,2]"), {g}) == pp(*xr, "x[1,2]"));
  CHECK(normalForm(lex, pp(*xr, "x[1,2]"), {g}).remainder.isZero());
  // On matching variables the two coincide.
  CHECK(classicalNormalForm(lex, pp(*xr, "x[1,1]^2 + x[1,1]"), {g}).isZero());
}
