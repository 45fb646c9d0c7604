#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symgb/monomial.hpp"

namespace symgb {

enum class OrderKind {
  Lex,           // variables ranked by (index tuple, orbit), larger tuple larger
  GradedLex,     // total degree, then Lex
  GradedRevLex,  // total degree, then reverse lex on the same variable ranking
  FiberRevLex,   // total degree, then reverse lex ranked by (max index, reversed tuple, orbit)
  HybridToric,   // slot-expansion images under graded lex on slots, ties by FiberRevLex
  Elimination,   // x-block graded lex first, then HybridToric on the tuple block
  Pushforward,   // images under the stabilizer-minimal section, compared by HybridToric
};

/// A total, Inc(N)-compatible monomial order bound to a ring.
///
/// All orders here are strictly compatible with multiplication, respect the
/// Inc(N) action, and refine equivariant divisibility; `validateOrder` checks
/// those axioms exhaustively on a finite box.
class MonomialOrder {
 public:
  static MonomialOrder lex(RingPtr ring);
  static MonomialOrder gradedLex(RingPtr ring);
  static MonomialOrder gradedRevLex(RingPtr ring);
  static MonomialOrder fiberRevLex(RingPtr ring);
  /// On a free tuple ring: compare the slot expansions z[p,i,a_i] under
  /// graded lex (slot variables ranked by index, then slot), ties broken by
  /// FiberRevLex on the original monomials.
  static MonomialOrder hybridToric(RingPtr freeRing);
  /// On a product ring: the x block dominates under graded lex (x variables
  /// ranked by index, then row); ties fall through to HybridToric on the
  /// tuple block.
  static MonomialOrder elimination(RingPtr product);
  /// On a ring with stabilizers: map every variable to its minimal free
  /// representative and compare those under HybridToric.
  static MonomialOrder pushforward(RingPtr ring);

  OrderKind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }

  /// Three-way comparison: negative if a < b, zero iff a == b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True when u < v whenever width(u) < width(v); holds exactly for Lex on
  /// rings whose orbits are all unary.
  bool isWidthOrder() const;
  std::string name() const;

 private:
  MonomialOrder(OrderKind kind, RingPtr ring);
  OrderKind kind_;
  RingPtr ring_;
  std::vector<int> slotBase_;  // per tuple-orbit: first slot id of its rows
};

/// The stabilizer-orbit representative of `tuple` whose singleton variable is
/// HybridToric-minimal; the action convention matches canonicalTuple.
std::vector<int> nuTuple(const OrbitSpec& spec, int orbit, int slotBase,
                         const std::vector<int>& tuple);

/// All monomials of the ring with indices <= maxWidth and degree <= maxDeg,
/// including 1, sorted structurally.
std::vector<Monomial> monomialBox(const RingSignature& sig, int maxWidth, int maxDeg);

struct OrderValidation {
  bool totalOrder = false;       // trichotomy, antisymmetry, sampled transitivity
  bool unitMinimal = false;      // 1 <= m for every box monomial
  bool multiplicative = false;   // a < b implies av < bv for box variables v
  bool incRespecting = false;    // a < b implies (rho a) < (rho b) for box IncMaps
  bool refinesDivisibility = false;  // a |_Pi b, a != b implies a < b
  long long comparisons = 0;
  std::string failure;  // empty when every check passed
  bool ok() const {
    return totalOrder && unitMinimal && multiplicative && incRespecting && refinesDivisibility;
  }
};

/// Exhaustively checks the order axioms on the box (maxWidth, maxDeg).
/// Transitivity and multiplicativity are subsampled deterministically when
/// the box is large; every reported count is of checks actually run.
OrderValidation validateOrder(const MonomialOrder& order, int maxWidth, int maxDeg);

/// The same checks against an arbitrary three-way comparator (negative,
/// zero, positive like MonomialOrder::compare), so a proposed comparison can
/// be vetted — or shown to break an axiom — before being adopted.
OrderValidation validateOrderWith(const RingSignature& sig,
                                  const std::function<int(const Monomial&, const Monomial&)>& cmp,
                                  int maxWidth, int maxDeg);

}  // namespace symgb
