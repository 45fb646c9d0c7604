#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "symgb/engine.hpp"
#include "symgb/reduce.hpp"
#include "symgb/spair.hpp"
#include "test_util.hpp"

using namespace symgb;
using namespace symgb::testutil;

namespace {

long long binomialCoeff(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// The scaled left/right components of a generator pair: both share the
/// leading monomial pair.lcm.
std::pair<Polynomial, Polynomial> pairSides(const MonomialOrder& ord, const Polynomial& f,
                                            const Polynomial& g, const SPair& p) {
  const RingSignature& sig = *ord.ring();
  Polynomial u = applyInc(sig, p.rho1, f);
  Polynomial v = applyInc(sig, p.rho2, g);
  Monomial cu = *p.lcm.dividedBy(leadingMonomial(ord, u));
  Monomial cv = *p.lcm.dividedBy(leadingMonomial(ord, v));
  return {u.timesMonomial(cu), v.timesMonomial(cv)};
}

/// Does some returned generator pair, scaled by a monomial and pushed by an
/// increasing map, equal the matching-lead pair built from (sigma1, sigma2)
/// with extra cofactor `extra`? Exact polynomial equality, orientation
/// swapped as well when f == g.
bool coveredByGenerators(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g,
                         bool samePoly, const std::vector<SPair>& pairs, const IncMap& sigma1,
                         const IncMap& sigma2, const Monomial& extra) {
  const RingSignature& sig = *ord.ring();
  Monomial a = applyInc(sig, sigma1, leadingMonomial(ord, f));
  Monomial b = applyInc(sig, sigma2, leadingMonomial(ord, g));
  Monomial m = a.lcmWith(b).times(extra);
  Polynomial targetLeft = applyInc(sig, sigma1, f).timesMonomial(*m.dividedBy(a));
  Polynomial targetRight = applyInc(sig, sigma2, g).timesMonomial(*m.dividedBy(b));

  for (const SPair& p : pairs) {
    auto [genLeftBase, genRightBase] = pairSides(ord, f, g, p);
    for (int orient = 0; orient < (samePoly ? 2 : 1); ++orient) {
      const IncMap& r1 = orient == 0 ? p.rho1 : p.rho2;
      const IncMap& r2 = orient == 0 ? p.rho2 : p.rho1;
      const Polynomial& genLeft = orient == 0 ? genLeftBase : genRightBase;
      const Polynomial& genRight = orient == 0 ? genRightBase : genLeftBase;

      // rho is pinned on all of [p.width] by rho(r1(i)) = sigma1(i) and
      // rho(r2(j)) = sigma2(j) (joint surjectivity); it must be consistent
      // and strictly increasing.
      std::vector<int> img(p.width + 1, 0);
      bool consistent = true;
      for (int i = 1; i <= r1.domainSize() && consistent; ++i) {
        int want = sigma1(i);
        int& slot = img[r1(i)];
        if (slot != 0 && slot != want) consistent = false;
        slot = want;
      }
      for (int j = 1; j <= r2.domainSize() && consistent; ++j) {
        int want = sigma2(j);
        int& slot = img[r2(j)];
        if (slot != 0 && slot != want) consistent = false;
        slot = want;
      }
      if (!consistent) continue;
      std::vector<int> images(img.begin() + 1, img.end());
      bool increasing = !images.empty() && images[0] >= 1;
      for (size_t t = 1; t < images.size() && increasing; ++t)
        if (images[t] <= images[t - 1]) increasing = false;
      if (!increasing) continue;
      IncMap rho{images};

      Monomial shiftedLcm = applyInc(sig, rho, p.lcm);
      auto c = m.dividedBy(shiftedLcm);
      if (!c.has_value()) continue;
      if (applyInc(sig, rho, genLeft).timesMonomial(*c) == targetLeft &&
          applyInc(sig, rho, genRight).timesMonomial(*c) == targetRight)
        return true;
    }
  }
  return false;
}

/// Runs the completeness oracle for one (f, g): every matching-lead pair
/// with shifts into [widthBound] and a few extra cofactors is generated.
void checkCompleteness(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g,
                       bool samePoly, int widthBound,
                       const std::vector<Monomial>& extras) {
  std::vector<SPair> pairs = spairGenerators(ord, f, 0, g, samePoly ? 0 : 1, false);
  for (const IncMap& s1 : IncMap::all(f.width(), widthBound))
    for (const IncMap& s2 : IncMap::all(g.width(), widthBound)) {
      if (samePoly && !(s1.images() < s2.images())) continue;  // mirror + diagonal
      for (const Monomial& extra : extras) {
        INFO("f shifts to width ", widthBound);
        CHECK(coveredByGenerators(ord, f, g, samePoly, pairs, s1, s2, extra));
      }
    }
}

}  // namespace

TEST_CASE("interlacing counts are products of binomial coefficients") {
  CHECK(interlacings(1, 1).size() == 4);
  CHECK(interlacings(0, 3).size() == 1);
  CHECK(interlacings(2, 1).size() == 9);
  for (int wf = 0; wf <= 3; ++wf)
    for (int wg = 0; wg <= 3; ++wg)
      CHECK(static_cast<long long>(interlacings(wf, wg).size()) ==
            binomialCoeff(wf + wg, wf) * binomialCoeff(wf + wg, wg));

  // Each entry is a pair of increasing maps into [wf+wg], all distinct.
  auto all21 = interlacings(2, 1);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const auto& [r1, r2] : all21) {
    CHECK(r1.domainSize() == 2);
    CHECK(r2.domainSize() == 1);
    CHECK(r1(2) <= 3);
    CHECK(r2(1) <= 3);
    seen.insert({r1.images(), r2.images()});
  }
  CHECK(seen.size() == all21.size());
}

TEST_CASE("generator pairs share their shifted leading monomial") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  Polynomial f = pp(*xr, "x[1,1] x[1,2] - x[1,1]");
  Polynomial g = pp(*xr, "x[1,2]^2 - x[1,1]");

  for (bool skip : {false, true}) {
    std::vector<SPair> pairs = spairGenerators(lex, f, 0, g, 1, skip);
    CHECK(!pairs.empty());
    for (const SPair& p : pairs) {
      auto [left, right] = pairSides(lex, f, g, p);
      CHECK(leadingMonomial(lex, left) == p.lcm);
      CHECK(leadingMonomial(lex, right) == p.lcm);
      // The S-polynomial cancels that shared lead.
      Polynomial s = spolynomial(lex, f, g, p);
      if (!s.isZero()) CHECK(lex.less(leadingMonomial(lex, s), p.lcm));
      CHECK(s == left.timesScalar(makeRational(1) / leadingTerm(lex, left).coeff)
                     .minus(right.timesScalar(makeRational(1) / leadingTerm(lex, right).coeff)));
      // Joint images cover an initial segment of length p.width.
      std::vector<bool> hit(p.width + 1, false);
      for (int i = 1; i <= p.rho1.domainSize(); ++i) hit[p.rho1(i)] = true;
      for (int j = 1; j <= p.rho2.domainSize(); ++j) hit[p.rho2(j)] = true;
      for (int v = 1; v <= p.width; ++v) CHECK(hit[v]);
    }
  }
}

TEST_CASE("self-pairs drop the diagonal and keep one of each mirror pair") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  Polynomial f = pp(*xr, "x[1,1]^2 - x[1,1]");

  // Width 1 against itself: the only jointly surjective off-diagonal pair is
  // rho1=(1), rho2=(2); its shifted leads x1^2, x2^2 are coprime.
  std::vector<SPair> unpruned = spairGenerators(lex, f, 0, f, 0, false);
  REQUIRE(unpruned.size() == 1);
  CHECK(unpruned[0].rho1.images() == std::vector<int>{1});
  CHECK(unpruned[0].rho2.images() == std::vector<int>{2});
  CHECK(unpruned[0].width == 2);

  std::vector<SPair> pruned = spairGenerators(lex, f, 0, f, 0, true);
  CHECK(pruned.empty());

  // Overlapping self-pairs survive pruning: lead x1 x2 meets its own shifts.
  Polynomial h = pp(*xr, "x[1,1] x[1,2] - x[1,1]");
  std::vector<SPair> hp = spairGenerators(lex, h, 0, h, 0, true);
  CHECK(!hp.empty());
  for (const SPair& p : hp) {
    CHECK(p.rho1.images() < p.rho2.images());
    Monomial a = applyInc(*xr, p.rho1, leadingMonomial(lex, h));
    Monomial b = applyInc(*xr, p.rho2, leadingMonomial(lex, h));
    CHECK(!a.coprimeWith(b));
  }
}

TEST_CASE("disjoint-row leads make every interlacing coprime") {
  RingPtr x2 = makeXRing(2);
  MonomialOrder lex = MonomialOrder::lex(x2);
  Polynomial f = pp(*x2, "x[1,1] - 1");
  Polynomial g = pp(*x2, "x[2,1] - 1");

  // Rows never collide, so pruning removes every pair...
  CHECK(spairGenerators(lex, f, 0, g, 1, true).empty());
  // ...while the unpruned set still lists the three jointly surjective
  // interlacings of widths (1,1).
  std::vector<SPair> unpruned = spairGenerators(lex, f, 0, g, 1, false);
  CHECK(unpruned.size() == 3);
  for (const SPair& p : unpruned) {
    Monomial a = applyInc(*x2, p.rho1, leadingMonomial(lex, f));
    Monomial b = applyInc(*x2, p.rho2, leadingMonomial(lex, g));
    CHECK(a.coprimeWith(b));
  }
}

TEST_CASE("a nonzero constant yields no surviving pairs") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  Polynomial c = Polynomial::constant(makeRational(5));
  Polynomial g = pp(*xr, "x[1,1] x[1,2] - x[1,1]");
  // The unit lead is coprime with everything.
  CHECK(spairGenerators(lex, c, 0, g, 1, true).empty());
  CHECK_THROWS_AS(spairGenerators(lex, Polynomial::zero(), 0, g, 1, true), ZeroPolynomial);
}

TEST_CASE("generator enumeration is deterministic") {
  RingPtr yr = pairRing();
  MonomialOrder hybrid = MonomialOrder::hybridToric(yr);
  Polynomial f = pp(*yr, "y(1,2) - y(2,1)");
  auto a = spairGenerators(hybrid, f, 0, f, 0, true);
  auto b = spairGenerators(hybrid, f, 0, f, 0, true);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rho1 == b[i].rho1);
    CHECK(a[i].rho2 == b[i].rho2);
    CHECK(a[i].lcm == b[i].lcm);
  }
}

TEST_CASE("every matching-lead shift pair is generated: fixed examples") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);
  std::vector<Monomial> extras{Monomial::one(), xm(*xr, 5), xm(*xr, 1, 2)};

  // The square-vs-linear self pair from the generator-count example.
  checkCompleteness(lex, pp(*xr, "x[1,1]^2 - x[1,1]"), pp(*xr, "x[1,1]^2 - x[1,1]"), true, 4,
                    extras);
  // Overlapping two-index lead against itself.
  checkCompleteness(lex, pp(*xr, "x[1,1] x[1,2] - x[1,1]"), pp(*xr, "x[1,1] x[1,2] - x[1,1]"),
                    true, 5, extras);
  // Distinct generators.
  checkCompleteness(lex, pp(*xr, "x[1,1] x[1,2] - x[1,1]"), pp(*xr, "x[1,2]^2 - x[1,1]"), false,
                    5, extras);
}

TEST_CASE("every matching-lead shift pair is generated: random binomials") {
  RingPtr xr = xRing1();
  RingPtr yr = pairRing();
  MonomialOrder lex = MonomialOrder::lex(xr);
  MonomialOrder hybrid = MonomialOrder::hybridToric(yr);
  std::mt19937 rng(425243u);

  auto randomBinomial = [&](const RingSignature& sig, int maxWidth, int maxDeg) {
    std::vector<Monomial> box = monomialBox(sig, maxWidth, maxDeg);
    std::uniform_int_distribution<size_t> pick(0, box.size() - 1);
    for (;;) {
      Monomial m1 = box[pick(rng)];
      Monomial m2 = box[pick(rng)];
      if (m1 == m2 || m1.isOne() || m2.isOne()) continue;
      return Polynomial::monomial(m1).minus(Polynomial::monomial(m2));
    }
  };

  std::vector<Monomial> xExtras{Monomial::one(), xm(*xr, 5)};
  for (int t = 0; t < 8; ++t) {
    Polynomial f = randomBinomial(*xr, 2, 3);
    Polynomial g = randomBinomial(*xr, 2, 3);
    checkCompleteness(lex, f, g, false, 5, xExtras);
    checkCompleteness(lex, f, f, true, 5, xExtras);
  }

  std::vector<Monomial> yExtras{Monomial::one(), mono(*yr, {{0, {5, 1}}})};
  for (int t = 0; t < 4; ++t) {
    Polynomial f = randomBinomial(*yr, 2, 2);
    Polynomial g = randomBinomial(*yr, 2, 2);
    checkCompleteness(hybrid, f, g, false, 5, yExtras);
    checkCompleteness(hybrid, f, f, true, 5, yExtras);
  }
}

TEST_CASE("coprime pruning leaves the computed basis unchanged") {
  RingPtr xr = xRing1();
  MonomialOrder lex = MonomialOrder::lex(xr);

  std::vector<std::vector<Polynomial>> inputs{
      pps(*xr, {"x[1,1] + x[1,2]"}),
      pps(*xr, {"x[1,1] x[1,2] - x[1,1]"}),
      pps(*xr, {"x[1,1]^2 - x[1,1]"}),
      pps(*xr, {"x[1,1] x[1,2] - x[1,3]", "x[1,1]^2 - x[1,1]"}),
  };
  for (const auto& gens : inputs) {
    EgbOptions with;
    with.coprimePruning = true;
    EgbOptions without;
    without.coprimePruning = false;
    std::vector<Polynomial> basisWith = equivariantBuchberger(lex, gens, with).basis;
    std::vector<Polynomial> basisWithout = equivariantBuchberger(lex, gens, without).basis;
    // The reduced basis is canonical, so the two runs agree exactly...
    CHECK(basisWith == basisWithout);
    // ...and in particular span the same initial ideal up to width 5.
    std::set<Monomial> leadsWith, leadsWithout;
    for (const auto& p : basisWith)
      for (const auto& m : orbitMembersUpToWidth(*xr, leadingMonomial(lex, p), 5))
        leadsWith.insert(m);
    for (const auto& p : basisWithout)
      for (const auto& m : orbitMembersUpToWidth(*xr, leadingMonomial(lex, p), 5))
        leadsWithout.insert(m);
    CHECK(leadsWith == leadsWithout);
  }
}
