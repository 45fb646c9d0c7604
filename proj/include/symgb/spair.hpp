#pragma once

#include <utility>
#include <vector>

#include "symgb/order.hpp"
#include "symgb/polynomial.hpp"

namespace symgb {

/// All interlacing shift pairs for widths (wf, wg): every pair of strictly
/// increasing maps [wf] -> [wf+wg] and [wg] -> [wf+wg].
std::vector<std::pair<IncMap, IncMap>> interlacings(int wf, int wg);

struct SPair {
  size_t fIndex = 0, gIndex = 0;
  IncMap rho1, rho2;  // full-domain shifts of f and g
  Monomial lcm;       // lcm of the shifted leading monomials
  int width = 0;      // size of the jointly covered initial segment
};

/// A generating set of S-pair shifts for (f, g): the jointly surjective
/// interlacings, i.e. pairs whose images together cover an initial segment.
/// Every other interlacing is an Inc(N) shift of a listed one. Pairs whose
/// shifted leads are coprime are dropped when coprimeSkip is set; for
/// fIndex == gIndex the symmetric half and the diagonal are dropped.
std::vector<SPair> spairGenerators(const MonomialOrder& ord, const Polynomial& f,
                                   size_t fIndex, const Polynomial& g, size_t gIndex,
                                   bool coprimeSkip);

/// The S-polynomial: the monic-scaled difference cancelling the shifted leads.
Polynomial spolynomial(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g,
                       const SPair& pair);

}  // namespace symgb
