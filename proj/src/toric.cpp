#include "symgb/toric.hpp"

#include <algorithm>
#include <map>

namespace symgb {

namespace {

/// 0-based offset of slot (orbit p, row 1) in the z-ring / slot-map target.
std::vector<int> slotOffsets(const RingSignature& source) {
  std::vector<int> base(source.orbitCount() + 1, 0);
  for (int p = 0; p < source.orbitCount(); ++p)
    base[p + 1] = base[p] + source.orbits[p].arity;
  return base;
}

}  // namespace

void validateMap(const MonomialMapSpec& spec) {
  if (!spec.source || !spec.target) throw SemanticError("monomial map is missing a ring");
  const RingSignature& y = *spec.source;
  const RingSignature& x = *spec.target;
  if (x.kind != RingKind::X) throw SemanticError("monomial map target must be an x-row ring");
  if (y.kind != RingKind::Y && y.kind != RingKind::Yprime)
    throw SemanticError("monomial map source must be a tuple-orbit ring");
  if (y.orbitCount() == 0) throw SemanticError("monomial map source has no orbits");
  if (static_cast<int>(spec.images.size()) != y.orbitCount())
    throw SemanticError("monomial map needs exactly one image per source orbit");
  for (int p = 0; p < y.orbitCount(); ++p) {
    const OrbitSpec& orbit = y.orbits[p];
    if (orbit.arity < 1)
      throw SemanticError("orbit '" + orbit.name + "' must have arity at least 1");
    const Monomial& image = spec.images[p];
    for (const auto& [v, e] : image.factors()) {
      if (v.orbit < 0 || v.orbit >= x.orbitCount())
        throw SemanticError("image of '" + orbit.name + "' uses an unknown x-row");
      if (v.indices.size() != 1 || v.indices[0] < 1)
        throw SemanticError("image of '" + orbit.name + "' has a malformed variable");
      if (v.indices[0] > orbit.arity)
        throw ImageTooWide("image of '" + orbit.name + "' uses index " +
                           std::to_string(v.indices[0]) + " beyond its arity " +
                           std::to_string(orbit.arity));
    }
    for (const Perm& sigma : orbit.stabilizer) {
      std::map<int, int> relabel;
      for (int i = 1; i <= orbit.arity; ++i) relabel[i] = sigma[i - 1] + 1;
      if (!(applyIndexMap(x, image, relabel) == image))
        throw NotEquivariant("image of '" + orbit.name +
                                 "' is not fixed by the orbit stabilizer",
                             sigma);
    }
  }
}

Monomial mapVariable(const MonomialMapSpec& spec, const Variable& v) {
  std::map<int, int> relabel;
  for (size_t i = 0; i < v.indices.size(); ++i) relabel[static_cast<int>(i) + 1] = v.indices[i];
  return applyIndexMap(*spec.target, spec.images[v.orbit], relabel);
}

Monomial applyMap(const MonomialMapSpec& spec, const Monomial& m) {
  Monomial out = Monomial::one();
  for (const auto& [v, e] : m.factors()) {
    Monomial img = mapVariable(spec, v);
    for (int c = 0; c < e; ++c) out = out.times(img);
  }
  return out;
}

FreeCover buildFreeCover(const MonomialMapSpec& spec) {
  FreeCover cover;
  cover.yprime = freeCoverRing(*spec.source);
  cover.liftedMap = MonomialMapSpec{cover.yprime, spec.target, spec.images};
  return cover;
}

Monomial thetaMonomial(const RingSignature& y, const Monomial& m) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [v, e] : m.factors())
    factors.push_back({makeVariable(y, v.orbit, canonicalTuple(y.orbits[v.orbit], v.indices)), e});
  return Monomial::fromFactors(std::move(factors));
}

Polynomial theta(const RingSignature& y, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.coeff, thetaMonomial(y, t.mono)});
  return Polynomial::fromTerms(std::move(terms));
}

Monomial piImage(const RingSignature& yprime, const RingSignature& z, const Monomial& m) {
  std::vector<int> base = slotOffsets(yprime);
  std::vector<Monomial::Factor> factors;
  for (const auto& [v, e] : m.factors())
    for (size_t i = 0; i < v.indices.size(); ++i)
      factors.push_back(
          {makeVariable(z, base[v.orbit] + static_cast<int>(i), {v.indices[i]}), e});
  return Monomial::fromFactors(std::move(factors));
}

Monomial psiSlotImage(const MonomialMapSpec& spec, int orbit, int row, int index) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [v, e] : spec.images[orbit].factors())
    if (v.indices[0] == row)
      factors.push_back({makeVariable(*spec.target, v.orbit, {index}), e});
  return Monomial::fromFactors(std::move(factors));
}

Monomial psiImage(const MonomialMapSpec& spec, const RingSignature& z, const Monomial& m) {
  Monomial out = Monomial::one();
  for (const auto& [v, e] : m.factors()) {
    const OrbitSpec& slot = z.orbits[v.orbit];
    Monomial img = psiSlotImage(spec, slot.zOrbit - 1, slot.zRow, v.indices[0]);
    for (int c = 0; c < e; ++c) out = out.times(img);
  }
  return out;
}

GraphSetup graphSetup(const FreeCover& cover) {
  const RingSignature& yprime = *cover.yprime;
  const RingSignature& x = *cover.liftedMap.target;
  RingPtr product = productRing(cover.yprime, x.orbitCount());
  const int xStart = product->xBlockStart;

  std::vector<Polynomial> generators;
  for (int p = 0; p < yprime.orbitCount(); ++p) {
    const int k = yprime.orbits[p].arity;
    for (const Perm& tau : fullSymmetricGroup(k)) {
      std::vector<int> tuple(k);
      for (int i = 0; i < k; ++i) tuple[i] = tau[i] + 1;
      Variable yvar = makeVariable(*product, p, tuple);

      std::map<int, int> relabel;
      for (int i = 1; i <= k; ++i) relabel[i] = tau[i - 1] + 1;
      Monomial image = applyIndexMap(x, cover.liftedMap.images[p], relabel);
      std::vector<Monomial::Factor> embedded;
      for (const auto& [v, e] : image.factors())
        embedded.push_back({makeVariable(*product, xStart + v.orbit, v.indices), e});

      generators.push_back(
          Polynomial::monomial(Monomial::variable(yvar))
              .minus(Polynomial::monomial(Monomial::fromFactors(std::move(embedded)))));
    }
  }
  MonomialOrder order = MonomialOrder::elimination(product);
  return GraphSetup{product, std::move(order), std::move(generators)};
}

KernelResult computeKernelEgb(const MonomialMapSpec& spec, int maxWidth, EgbOptions opts) {
  validateMap(spec);
  FreeCover cover = buildFreeCover(spec);
  GraphSetup setup = graphSetup(cover);

  // The generating set is closed under permutations of the tuple entries, so
  // the graph ideal is invariant under the full symmetric action and index
  // compression is sound here.
  opts.compressGenerators = true;
  TruncationReport report = truncatedEgb(setup.order, setup.generators, maxWidth, opts);
  if (!report.stabilized) throw MaxWidthReached(maxWidth, report.basis, report.certificate);

  const int xStart = setup.product->xBlockStart;
  std::vector<Polynomial> coverBasis;
  for (const auto& g : report.basis) {
    bool xfree = true;
    for (const auto& t : g.terms()) {
      for (const auto& [v, e] : t.mono.factors())
        if (v.orbit >= xStart) {
          xfree = false;
          break;
        }
      if (!xfree) break;
    }
    if (xfree) coverBasis.push_back(g);
  }

  MonomialOrder coverOrder = MonomialOrder::hybridToric(cover.yprime);
  MonomialOrder yOrder = MonomialOrder::pushforward(spec.source);

  std::vector<Polynomial> mapped;
  for (const auto& g : coverBasis) {
    Polynomial h = theta(*spec.source, g);
    if (!h.isZero()) mapped.push_back(std::move(h));
  }
  std::vector<Polynomial> basis = postprocessBasis(yOrder, std::move(mapped), true);

  return KernelResult{std::move(cover),   std::move(coverBasis), std::move(basis),
                      std::move(report),  std::move(coverOrder), std::move(yOrder)};
}

MonomialMapSpec slotMapSpec(RingPtr yprime) {
  const RingSignature& y = *yprime;
  std::vector<int> base = slotOffsets(y);
  RingPtr target = makeXRing(base.back());
  std::vector<Monomial> images;
  for (int p = 0; p < y.orbitCount(); ++p) {
    std::vector<Monomial::Factor> factors;
    for (int i = 1; i <= y.orbits[p].arity; ++i)
      factors.push_back({makeVariable(*target, base[p] + i - 1, {i}), 1});
    images.push_back(Monomial::fromFactors(std::move(factors)));
  }
  return MonomialMapSpec{std::move(yprime), std::move(target), std::move(images)};
}

}  // namespace symgb
