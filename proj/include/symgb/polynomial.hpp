#pragma once

#include <compare>
#include <vector>

#include "symgb/monomial.hpp"
#include "symgb/rational.hpp"

namespace symgb {

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Polynomial with rational coefficients, stored as terms with pairwise
/// distinct monomials in ascending structural order and nonzero coefficients.
/// Storage order is independent of any active monomial order; leading terms
/// are computed against an order when one is supplied (see reduce.hpp).
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  static Polynomial monomial(Monomial m, Rational c = Rational(1));
  /// Merges duplicate monomials, drops zero coefficients, sorts structurally.
  static Polynomial fromTerms(std::vector<Term> terms);

  bool isZero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int termCount() const { return static_cast<int>(terms_.size()); }

  /// Largest index appearing in any term; 0 for constants and zero.
  int width() const;
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  std::vector<int> indexSupport() const;

  Polynomial plus(const Polynomial& other) const;
  Polynomial minus(const Polynomial& other) const;
  Polynomial negated() const;
  Polynomial timesScalar(const Rational& c) const;
  Polynomial timesTerm(const Rational& c, const Monomial& m) const;
  Polynomial timesMonomial(const Monomial& m) const { return timesTerm(Rational(1), m); }
  Polynomial timesPoly(const Polynomial& other) const;

  bool operator==(const Polynomial& other) const;
  /// Structural order (term vectors compared lexicographically); used only
  /// for deterministic storage, not as a polynomial ranking.
  std::strong_ordering operator<=>(const Polynomial& other) const;

 private:
  std::vector<Term> terms_;
};

Polynomial applyInc(const RingSignature& sig, const IncMap& rho, const Polynomial& f);
Polynomial applyIndexMap(const RingSignature& sig, const Polynomial& f,
                         const std::map<int, int>& map);
Polynomial applyPermutation(const RingSignature& sig, const std::vector<int>& images,
                            const Polynomial& f);

struct PolynomialCanonicalForm {
  Polynomial poly;
  IncMap shift;  // canonical witness: shift applied to poly recovers the input
};

/// Compresses the index support onto {1, ..., t}.
PolynomialCanonicalForm canonicalForm(const RingSignature& sig, const Polynomial& f);

/// A finite set S with Inc(N)·S = S_infinity-orbit union of f: the canonical
/// forms of the images of f under all permutations of [width(f)].
std::vector<Polynomial> sinftyToIncReps(const RingSignature& sig, const Polynomial& f);

/// All distinct images of f under Inc(N) maps with values in [n], sorted.
std::vector<Polynomial> orbitMembersUpToWidth(const RingSignature& sig, const Polynomial& f,
                                              int n);

/// Union of orbitMembersUpToWidth over F, deduplicated and sorted: the
/// generators of the width-n truncation of the equivariant ideal of F.
std::vector<Polynomial> generatorTruncation(const RingSignature& sig,
                                            const std::vector<Polynomial>& F, int n);

}  // namespace symgb
