#pragma once

#include "symgb/engine.hpp"
#include "symgb/order.hpp"
#include "symgb/polynomial.hpp"

namespace symgb {

/// An equivariant monomial map K[Y] -> K[X]: each source orbit y_p (arity k)
/// is sent to a monomial in the x-variables whose natural indices lie in
/// {1,...,k}; the image of y_p(j_1,...,j_k) substitutes i -> j_i.
struct MonomialMapSpec {
  RingPtr source;  // Tuple-style orbits, arbitrary stabilizers
  RingPtr target;  // XRow-style unary rows
  std::vector<Monomial> images;  // one per source orbit, in the target ring
};

/// Structural checks: ring kinds, one image per orbit with indices inside the
/// orbit arity, and compatibility of each image with the orbit stabilizer
/// (sigma fixes the image for every sigma in the stabilizer). Throws
/// SemanticError / ImageTooWide / NotEquivariant.
void validateMap(const MonomialMapSpec& spec);

/// The image of one source variable under the map.
Monomial mapVariable(const MonomialMapSpec& spec, const Variable& v);
/// The map applied multiplicatively to a whole monomial.
Monomial applyMap(const MonomialMapSpec& spec, const Monomial& m);

/// The same map presented on the free cover ring Y' (trivial stabilizers).
struct FreeCover {
  RingPtr yprime;
  MonomialMapSpec liftedMap;  // source == yprime, same target and images
};
FreeCover buildFreeCover(const MonomialMapSpec& spec);

/// theta: K[Y'] -> K[Y], sending each tuple to its stabilizer-canonical
/// form. Term collisions are merged; cancellation can shorten the result.
Monomial thetaMonomial(const RingSignature& y, const Monomial& m);
Polynomial theta(const RingSignature& y, const Polynomial& f);

/// pi: K[Y'] -> K[Z], splitting y'_p(j_1,...,j_k) into one z-slot factor
/// z[p,i,j_i] per tuple position. `z` must be zRingFor(yprime).
Monomial piImage(const RingSignature& yprime, const RingSignature& z, const Monomial& m);

/// psi: K[Z] -> K[X], sending z[p,i,j] to the part of images[p] that uses
/// index i, relabeled i -> j. The lifted map factors as psi o pi.
Monomial psiSlotImage(const MonomialMapSpec& spec, int orbit, int row, int index);
Monomial psiImage(const MonomialMapSpec& spec, const RingSignature& z, const Monomial& m);

/// Elimination presentation of the graph of the lifted map: in the product
/// ring K[Y' x X] the ideal generated by y'_p(tau) - tau.image_p over all
/// orbits p and permutations tau of {1,...,k_p}, under the x-eliminating
/// order. Its x-free basis elements present ker(phi o theta).
struct GraphSetup {
  RingPtr product;
  MonomialOrder order;
  std::vector<Polynomial> generators;
};
GraphSetup graphSetup(const FreeCover& cover);

struct KernelResult {
  FreeCover cover;
  /// Equivariant Groebner basis of ker(phi o theta) in K[Y'], under coverOrder.
  std::vector<Polynomial> coverBasis;
  /// Equivariant Groebner basis of ker(phi) in K[Y], under order.
  std::vector<Polynomial> basis;
  TruncationReport elimination;
  MonomialOrder coverOrder;  // toric order on Y'
  MonomialOrder order;       // its pushforward along theta, on Y
};

/// Full pipeline: validate, lift to the free cover, eliminate the graph up
/// to the given truncation width, keep the x-free elements, push forward
/// through theta. Throws MaxWidthReached when the elimination does not
/// stabilize within maxWidth.
KernelResult computeKernelEgb(const MonomialMapSpec& spec, int maxWidth,
                              EgbOptions opts = {});

/// The slot-splitting map pi of a free ring, presented as a monomial map
/// whose target has one x-row per (orbit, position) slot; its kernel is the
/// ideal of slot relations.
MonomialMapSpec slotMapSpec(RingPtr yprime);

}  // namespace symgb
