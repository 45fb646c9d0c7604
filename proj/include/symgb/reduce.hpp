#pragma once

#include <set>
#include <vector>

#include "symgb/order.hpp"
#include "symgb/polynomial.hpp"

namespace symgb {

/// The order-largest term of f; throws ZeroPolynomial on zero input.
const Term& leadingTerm(const MonomialOrder& ord, const Polynomial& f);
const Monomial& leadingMonomial(const MonomialOrder& ord, const Polynomial& f);
Rational leadingCoefficient(const MonomialOrder& ord, const Polynomial& f);
Polynomial makeMonic(const MonomialOrder& ord, const Polynomial& f);

/// One certificate entry: the reduction subtracted
/// coefficient * multiplier * shift(generators[generatorIndex]).
struct ReductionStep {
  size_t generatorIndex;
  IncMap shift;
  Monomial multiplier;
  Rational coefficient;
};

struct NormalFormResult {
  Polynomial remainder;
  std::vector<ReductionStep> steps;  // filled only when requested
  long stepCount = 0;
};

/// Reduction against a fixed generator list. Precomputes leading data and
/// memoizes irreducible monomials across calls; generators must outlive the
/// reducer and stay unchanged.
class Reducer {
 public:
  Reducer(const MonomialOrder& ord, const std::vector<Polynomial>& gens);

  /// Fully reduces f: every term of the remainder has no leading monomial of
  /// a generator as an equivariant divisor. Each cancellation uses the lowest
  /// eligible generator index with the lexicographically least shift witness.
  NormalFormResult normalForm(const Polynomial& f, bool wantSteps = false) const;

  /// True when some generator's leading monomial equivariantly divides m.
  bool reducible(const Monomial& m) const;

  const MonomialOrder& order() const { return ord_; }

 private:
  struct GenInfo {
    const Polynomial* poly;
    Monomial lead;
    Rational leadCoeff;
    int leadDegree;
    int suppSize;
    int maxIndex;
    std::vector<long> orbitDegrees;
  };
  const MonomialOrder& ord_;
  std::vector<GenInfo> gens_;
  mutable std::set<Monomial> irreducible_;
};

/// Convenience wrapper: one-shot equivariant normal form.
NormalFormResult normalForm(const MonomialOrder& ord, const Polynomial& f,
                            const std::vector<Polynomial>& gens, bool wantSteps = false);

/// Normal form under plain (non-equivariant) divisibility of leading
/// monomials, for finite-variable computations.
Polynomial classicalNormalForm(const MonomialOrder& ord, const Polynomial& f,
                               const std::vector<Polynomial>& gens);

}  // namespace symgb
