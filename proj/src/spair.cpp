#include "symgb/spair.hpp"

#include <functional>

#include "symgb/reduce.hpp"

namespace symgb {

std::vector<std::pair<IncMap, IncMap>> interlacings(int wf, int wg) {
  std::vector<std::pair<IncMap, IncMap>> out;
  auto left = IncMap::all(wf, wf + wg);
  auto right = IncMap::all(wg, wf + wg);
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) out.push_back({a, b});
  return out;
}

std::vector<SPair> spairGenerators(const MonomialOrder& ord, const Polynomial& f,
                                   size_t fIndex, const Polynomial& g, size_t gIndex,
                                   bool coprimeSkip) {
  const RingSignature& sig = *ord.ring();
  const int wf = f.width(), wg = g.width();
  const Monomial lmF = leadingMonomial(ord, f);
  const Monomial lmG = leadingMonomial(ord, g);
  const bool samePoly = fIndex == gIndex;

  std::vector<SPair> out;
  std::vector<int> imF, imG;
  imF.reserve(wf);
  imG.reserve(wg);

  // Assign values 1, 2, ... to the next free slot of rho1, of rho2, or both;
  // exactly the jointly surjective interlacings arise, each once.
  std::function<void(int)> go = [&](int value) {
    int i = static_cast<int>(imF.size()), j = static_cast<int>(imG.size());
    if (i == wf && j == wg) {
      IncMap rho1{std::vector<int>(imF)}, rho2{std::vector<int>(imG)};
      if (samePoly) {
        if (!(rho1.images() < rho2.images())) return;  // diagonal and mirror
      }
      Monomial a = applyInc(sig, rho1, lmF);
      Monomial b = applyInc(sig, rho2, lmG);
      if (coprimeSkip && a.coprimeWith(b)) return;
      out.push_back({fIndex, gIndex, std::move(rho1), std::move(rho2), a.lcmWith(b),
                     value - 1});
      return;
    }
    if (i < wf && j < wg) {
      imF.push_back(value);
      imG.push_back(value);
      go(value + 1);
      imG.pop_back();
      imF.pop_back();
    }
    if (i < wf) {
      imF.push_back(value);
      go(value + 1);
      imF.pop_back();
    }
    if (j < wg) {
      imG.push_back(value);
      go(value + 1);
      imG.pop_back();
    }
  };
  go(1);
  return out;
}

Polynomial spolynomial(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g,
                       const SPair& pair) {
  const RingSignature& sig = *ord.ring();
  Polynomial u = applyInc(sig, pair.rho1, f);
  Polynomial v = applyInc(sig, pair.rho2, g);
  const Term& ltu = leadingTerm(ord, u);
  const Term& ltv = leadingTerm(ord, v);
  Monomial lcm = ltu.mono.lcmWith(ltv.mono);
  Polynomial left = u.timesTerm(Rational(1) / ltu.coeff, *lcm.dividedBy(ltu.mono));
  Polynomial right = v.timesTerm(Rational(1) / ltv.coeff, *lcm.dividedBy(ltv.mono));
  return left.minus(right);
}

}  // namespace symgb
