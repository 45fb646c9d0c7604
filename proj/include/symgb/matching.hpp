#pragma once

#include <optional>
#include <vector>

#include "symgb/polynomial.hpp"

namespace symgb {

/// Per-orbit slot-count matrices of a tuple-ring monomial u: block p has one
/// row per tuple slot and one column per index value, and entry (i, j) counts
/// (with exponent multiplicity) how often index j sits in slot i. This is the
/// exponent matrix of the slot expansion of u.
struct ExponentMatrix {
  /// blocks[p][i][j-1] for orbit p, row i (0-based slot), index value j.
  std::vector<std::vector<std::vector<long>>> blocks;

  int columns() const;
  long entry(int p, int i, int j) const;  // j is 1-based; 0 outside the stored width
  long rowSum(int p, int i) const;
  long columnSum(int p, int j) const;
  /// Sum over orbits and cells of |a - b|, padding missing columns with 0.
  static long normDistance(const ExponentMatrix& a, const ExponentMatrix& b);
  bool operator==(const ExponentMatrix& other) const;
};

/// The slot-count matrix of u (a monomial of a free tuple ring), with at
/// least minColumns columns.
ExponentMatrix exponentMatrixOf(const RingSignature& ring, const Monomial& u,
                                int minColumns = 0);

/// Membership in the matching monoid: per orbit, all row sums share a common
/// value d_p and every column sum is at most d_p.
bool mmMember(const ExponentMatrix& A);
/// The common row sums d_p; nullopt when A is not a member.
std::optional<std::vector<long>> mmDegrees(const ExponentMatrix& A);

/// Divisibility inside the matching monoid: A <= B entrywise and, per orbit,
/// every column sum of B - A is at most d_p(B) - d_p(A). Throws NotMember
/// when either argument is not a matching-monoid member.
bool mmDivides(const ExponentMatrix& A, const ExponentMatrix& B);

/// A monomial u of the ring with matrix(u) == B; the lexicographically least
/// variable is extracted at every step. Throws NotMember when B is not in
/// the matching monoid.
Monomial mmPreimage(const RingSignature& ring, const ExponentMatrix& B);

/// Bounded-distance preimage transport: v with matrix(v) == B such that
/// deg((u - v)/gcd(u, v)) <= 5 * normDistance(matrix(u), B). Keeps the
/// largest factor of u whose matrix fits under B column-feasibly and fills
/// the rest with mmPreimage. Throws NotMember when B is not a member.
/// When keptOut is non-null it receives the kept factor of u (the divisor
/// of both u and the result that the remainder is built on top of).
Monomial liftToFiber(const RingSignature& ring, const Monomial& u, const ExponentMatrix& B,
                     Monomial* keptOut = nullptr);

}  // namespace symgb
