#pragma once

#include <iosfwd>
#include <vector>

#include "symgb/reduce.hpp"
#include "symgb/spair.hpp"

namespace symgb {

struct EgbOptions {
  /// Skip S-pairs whose shifted leading monomials are coprime.
  bool coprimePruning = true;
  /// Replace every new generator (and S-polynomial representative) by its
  /// index-compressed form. Sound only when the generated ideal is invariant
  /// under arbitrary permutations of the index set, not just increasing maps;
  /// off by default.
  bool compressGenerators = false;
  /// Hard bound on S-pair widths for the width-queue algorithm.
  int widthCap = 12;
  int threads = 1;
  /// When set, one progress line per level is written here.
  std::ostream* progress = nullptr;
};

struct LevelStats {
  int width = 0;  // pair width (width queue) or truncation width
  long long pairsConsidered = 0;
  long long reductionsToZero = 0;
  long long generatorsAdded = 0;
  size_t basisSize = 0;
};

struct EgbReport {
  std::vector<Polynomial> basis;
  std::vector<LevelStats> levels;
  long long pairsConsidered = 0;
  long long reductionsToZero = 0;
  long long generatorsAdded = 0;
  int maxPairWidth = 0;
};

/// One witness that a candidate basis fails certification: either a
/// generating S-pair whose S-polynomial has a nonzero normal form, or (with
/// inputContainment set) an input generator that does not reduce to zero.
/// In the latter case pair.fIndex == pair.gIndex names the generator and the
/// shift maps are identities.
struct CriterionFailure {
  SPair pair;
  Polynomial normalForm;
  bool inputContainment = false;
};

struct TruncationReport {
  std::vector<Polynomial> basis;
  /// True when the certificate (S-pair criterion plus containment of the
  /// input generators) was obtained; the basis is then a complete
  /// equivariant Groebner basis, not just a truncation.
  bool stabilized = false;
  int widthReached = 0;
  std::vector<LevelStats> levels;
  /// Failure witnesses for the final basis; empty exactly when stabilized.
  std::vector<CriterionFailure> certificate;
};

/// Completing the basis would need S-pairs wider than the cap.
class WidthCapExceeded : public Error {
 public:
  WidthCapExceeded(int cap, int requested, std::vector<Polynomial> partial)
      : Error("the width cap of " + std::to_string(cap) +
              " is below the required pair width " + std::to_string(requested)),
        cap(cap),
        requested(requested),
        partialBasis(std::move(partial)) {}
  int cap;
  int requested;
  std::vector<Polynomial> partialBasis;
};

/// The truncation loop hit its width bound without the certificate.
class MaxWidthReached : public Error {
 public:
  MaxWidthReached(int maxWidth, std::vector<Polynomial> last,
                  std::vector<CriterionFailure> cert = {})
      : Error("no stabilization certificate up to width " + std::to_string(maxWidth)),
        maxWidth(maxWidth),
        lastBasis(std::move(last)),
        certificate(std::move(cert)) {}
  int maxWidth;
  std::vector<Polynomial> lastBasis;
  std::vector<CriterionFailure> certificate;
};

/// Width-queue completion: processes S-pair generators in batches of
/// ascending pair width. Requires a width-compatible order (isWidthOrder);
/// output is the reduced equivariant Groebner basis of the Inc(N)-ideal
/// generated by gens. Identical output for any thread count.
EgbReport equivariantBuchberger(const MonomialOrder& ord, std::vector<Polynomial> gens,
                                const EgbOptions& opts = {});

/// Truncation ladder for general orders: for n rising to maxWidth, computes a
/// classical Groebner basis of the width-n truncation (seeded with the
/// previous level) and stops as soon as the result passes the equivariant
/// criterion and reduces every input generator to zero.
TruncationReport truncatedEgb(const MonomialOrder& ord, std::vector<Polynomial> gens,
                              int maxWidth, const EgbOptions& opts = {});

/// S-pair criterion: every generating S-polynomial reduces to zero. When
/// certificate is non-null it is cleared and receives every failing pair
/// with its nonzero normal form (the scan then covers all pairs instead of
/// stopping at the first failure).
bool isEquivariantGb(const MonomialOrder& ord, const std::vector<Polynomial>& basis,
                     std::vector<CriterionFailure>* certificate = nullptr);

/// Classical Buchberger over the finitely many variables present in gens;
/// returns the reduced Groebner basis (monic, minimal, tails reduced). When
/// stats is given, pairsConsidered and reductionsToZero are accumulated.
std::vector<Polynomial> classicalBuchberger(const MonomialOrder& ord,
                                            std::vector<Polynomial> gens,
                                            LevelStats* stats = nullptr);

/// Monic, exact-deduplicated, lead-minimal under equivariant divisibility,
/// tail-reduced, deterministically sorted. With compress, generators are
/// index-compressed first (see EgbOptions::compressGenerators).
std::vector<Polynomial> postprocessBasis(const MonomialOrder& ord,
                                         std::vector<Polynomial> basis, bool compress);

/// Equivariant normal form of f against basis (a convenience wrapper).
Polynomial equivariantNormalForm(const MonomialOrder& ord, const Polynomial& f,
                                 const std::vector<Polynomial>& basis);

}  // namespace symgb
