#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symgb/errors.hpp"

namespace symgb {

/// How a variable of an orbit is rendered and interpreted.
///  Tuple: name(i1,...,ik), the general S_k-quotiented orbit shape.
///  XRow:  x[r,j], one natural index j, fixed row tag r.
///  ZSlot: z[p,i,j], one natural index j, fixed (orbit,row) tag.
enum class VariableStyle { Tuple, XRow, ZSlot };

/// A permutation of {0,...,k-1} given by its image list.
using Perm = std::vector<int>;

struct OrbitSpec {
  std::string name;
  int arity = 1;
  /// Subgroup of S_arity identifying index tuples; contains the identity and
  /// is closed under composition and inverse.
  std::vector<Perm> stabilizer;
  VariableStyle style = VariableStyle::Tuple;
  int xRow = 0;             // XRow: 1-based row
  int zOrbit = 0, zRow = 0; // ZSlot: 1-based source orbit and row
};

enum class RingKind { X, Y, Yprime, Z, Product };

/// Immutable description of an infinite polynomial ring: a finite list of
/// variable orbits, each indexed by tuples of distinct naturals.
class RingSignature {
 public:
  RingKind kind = RingKind::Y;
  std::vector<OrbitSpec> orbits;
  /// Product rings list the Y'-orbits first; this is where the X block starts.
  int xBlockStart = 0;

  int orbitCount() const { return static_cast<int>(orbits.size()); }
  int maxArity() const;
  bool allUnary() const;  // every orbit has arity <= 1

  bool operator==(const RingSignature& other) const;
};

using RingPtr = std::shared_ptr<const RingSignature>;

Perm identityPerm(int k);
bool isPerm(const Perm& p);
/// Throws SemanticError unless the set is a subgroup of S_k containing id.
void validateStabilizer(int arity, const std::vector<Perm>& stabilizer);
std::vector<Perm> fullSymmetricGroup(int k);
std::vector<Perm> trivialGroup(int k);

/// Lexicographically smallest tuple in the stabilizer orbit of `indices`.
std::vector<int> canonicalTuple(const OrbitSpec& orbit, const std::vector<int>& indices);

RingPtr makeXRing(int rows);
RingPtr makeYRing(std::vector<OrbitSpec> orbits);
/// Same orbits with trivial stabilizers.
RingPtr freeCoverRing(const RingSignature& y);
/// One ZSlot orbit per (orbit p, row i) of a free ring.
RingPtr zRingFor(const RingSignature& yprime);
/// Y'-orbits (indices preserved) followed by `rows` XRow orbits.
RingPtr productRing(RingPtr yprime, int rows);

}  // namespace symgb
