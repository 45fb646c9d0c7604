#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "symgb/ring.hpp"

namespace symgb {

/// A variable of a ring: an orbit and a tuple of distinct natural indices,
/// kept canonical under the orbit stabilizer. Structural ordering is
/// (orbit, indices lexicographically); monomial orders impose their own keys.
struct Variable {
  int orbit = 0;
  std::vector<int> indices;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.indices <=> b.indices;
  }
};

/// Validates arity, positivity and distinctness, then canonicalizes the tuple.
Variable makeVariable(const RingSignature& sig, int orbit, std::vector<int> indices);

/// An element of Inc(N) restricted to a finite initial segment: the strictly
/// increasing image sequence of 1..domainSize(). Intrinsically rho(i) >= i.
class IncMap {
 public:
  IncMap() = default;
  explicit IncMap(std::vector<int> images);
  static IncMap identity(int n);

  int domainSize() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;  // 1-based; throws DomainTooSmall past the domain
  const std::vector<int>& images() const { return images_; }
  /// this after other; requires domainSize() >= max image of other.
  IncMap composedWith(const IncMap& other) const;
  /// Minimal extension to a larger domain: appended images grow by 1 but
  /// never drop below their position.
  IncMap extendedTo(int domain) const;
  /// All strictly increasing maps [domain] -> [codomain], ascending.
  static std::vector<IncMap> all(int domain, int codomain);

  friend bool operator==(const IncMap&, const IncMap&) = default;
  friend std::strong_ordering operator<=>(const IncMap& a, const IncMap& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// A power product with finitely many variables, exponents >= 1, factors
/// sorted structurally. Default-constructed value is 1.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial variable(Variable v, int exponent = 1);
  static Monomial fromFactors(std::vector<Factor> factors);

  bool isOne() const { return factors_.empty(); }
  int degree() const;
  /// Largest natural index occurring, 0 for the empty monomial.
  int width() const;
  int exponentOf(const Variable& v) const;
  const std::vector<Factor>& factors() const { return factors_; }
  /// Sorted distinct natural indices occurring in any variable.
  std::vector<int> indexSupport() const;

  Monomial times(const Monomial& other) const;
  std::optional<Monomial> dividedBy(const Monomial& other) const;
  bool isDivisibleBy(const Monomial& other) const;
  Monomial lcmWith(const Monomial& other) const;
  Monomial gcdWith(const Monomial& other) const;
  bool coprimeWith(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<Factor> factors_;
};

/// Relabels indices through an injective map defined on the whole support.
Monomial applyIndexMap(const RingSignature& sig, const Monomial& m,
                       const std::map<int, int>& map);
/// Applies rho in Inc(N); throws DomainTooSmall when domain < width(m).
Monomial applyInc(const RingSignature& sig, const IncMap& rho, const Monomial& m);
/// Applies a finite permutation given by 1-based images covering width(m).
Monomial applyPermutation(const RingSignature& sig, const std::vector<int>& images,
                          const Monomial& m);

struct MonomialCanonicalForm {
  Monomial monomial;  // index support compressed to 1..t
  IncMap shift;       // applyInc(shift, monomial) recovers the input
};
MonomialCanonicalForm canonicalForm(const RingSignature& sig, const Monomial& m);

/// Does a strictly increasing map with these (source, image) pairs extend to
/// an element of Inc(N)? Sources must be sorted strictly increasing. The
/// conditions are image >= source at the first pair and image gaps >= source
/// gaps between consecutive pairs.
bool incExtendable(const std::vector<std::pair<int, int>>& supportMap);
/// Minimal Inc(N) element through the pairs, with domain = last source.
IncMap extendToIncMap(const std::vector<std::pair<int, int>>& supportMap);

struct DivisionWitness {
  IncMap shift;
  Monomial quotient;  // quotient * applyInc(shift, a) == b
};
/// Finds rho in Inc(N) with rho(a) | b, preferring the lexicographically
/// smallest image sequence; nullopt when no shift works.
std::optional<DivisionWitness> equivariantDivides(const RingSignature& sig,
                                                  const Monomial& a,
                                                  const Monomial& b);

/// All rho(m) with rho in Inc(N) and width(rho(m)) <= n, each exactly once,
/// sorted structurally.
std::vector<Monomial> orbitMembersUpToWidth(const RingSignature& sig,
                                            const Monomial& m, int n);

}  // namespace symgb
