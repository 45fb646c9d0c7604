#include "symgb/engine.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <thread>
#include <tuple>

namespace symgb {

namespace {

std::vector<Polynomial> cleanGenerators(const MonomialOrder& ord,
                                        std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& f : gens)
    if (!f.isZero()) out.push_back(makeMonic(ord, f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool containsUnit(const std::vector<Polynomial>& gens) {
  for (const auto& f : gens)
    if (!f.isZero() && f.degree() == 0) return true;
  return false;
}

std::vector<Polynomial> unitBasis() { return {Polynomial::constant(Rational(1))}; }

/// True when the rank-wise map between two equal-size sorted supports extends
/// to Inc(N); members of one compression class transport along it.
bool supportReachable(const std::vector<int>& src, const std::vector<int>& dst) {
  if (src.size() != dst.size()) return false;
  std::vector<std::pair<int, int>> pairs(src.size());
  for (size_t i = 0; i < src.size(); ++i) pairs[i] = {src[i], dst[i]};
  return incExtendable(pairs);
}

/// Reduces a batch of S-polynomials to a generating core: zeros and exact
/// duplicates go away; within a compression class, members reachable from a
/// kept member are dropped (their reductions follow by shifting). With
/// compress, each class is replaced by its compressed representative.
std::vector<Polynomial> spolyCore(const RingSignature& sig, std::vector<Polynomial> spolys,
                                  bool compress) {
  std::map<Polynomial, std::vector<Polynomial>> classes;
  for (auto& s : spolys) {
    if (s.isZero()) continue;
    classes[canonicalForm(sig, s).poly].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  for (auto& [rep, members] : classes) {
    if (compress) {
      out.push_back(rep);
      continue;
    }
    std::sort(members.begin(), members.end(),
              [](const Polynomial& a, const Polynomial& b) {
                auto sa = a.indexSupport(), sb = b.indexSupport();
                if (sa != sb) return sa < sb;
                return a < b;
              });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<const Polynomial*> kept;
    for (const auto& m : members) {
      bool covered = false;
      auto sm = m.indexSupport();
      for (const Polynomial* k : kept)
        if (supportReachable(k->indexSupport(), sm)) {
          covered = true;
          break;
        }
      if (!covered) {
        kept.push_back(&m);
        out.push_back(m);
      }
    }
  }
  return out;
}

/// Normal forms of polys against a fixed basis snapshot; deterministic in the
/// thread count (each slot depends only on the snapshot).
std::vector<Polynomial> batchNormalForms(const MonomialOrder& ord,
                                         const std::vector<Polynomial>& basis,
                                         const std::vector<Polynomial>& polys, int threads) {
  std::vector<Polynomial> out(polys.size());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(polys.size())));
  if (threads == 1) {
    Reducer red(ord, basis);
    for (size_t i = 0; i < polys.size(); ++i) out[i] = red.normalForm(polys[i]).remainder;
    return out;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      Reducer red(ord, basis);
      for (size_t i = t; i < polys.size(); i += threads)
        out[i] = red.normalForm(polys[i]).remainder;
    });
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace

std::vector<Polynomial> postprocessBasis(const MonomialOrder& ord,
                                         std::vector<Polynomial> basis, bool compress) {
  const RingSignature& sig = *ord.ring();
  std::vector<Polynomial> clean = cleanGenerators(ord, std::move(basis));
  if (compress) {
    for (auto& f : clean) f = makeMonic(ord, canonicalForm(sig, f).poly);
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  }
  if (clean.empty()) return clean;
  if (containsUnit(clean)) return unitBasis();

  // Keep only generators whose lead has no equivariant divisor among the
  // kept leads; order-ascending traversal sees divisors first.
  std::vector<size_t> idx(clean.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Monomial> leads;
  leads.reserve(clean.size());
  for (const auto& f : clean) leads.push_back(leadingMonomial(ord, f));
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = ord.compare(leads[a], leads[b]);
    if (c != 0) return c < 0;
    return clean[a] < clean[b];
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimalLeads;
  for (size_t i : idx) {
    bool dominated = false;
    for (const auto& lm : minimalLeads)
      if (equivariantDivides(sig, lm, leads[i])) {
        dominated = true;
        break;
      }
    if (!dominated) {
      minimal.push_back(clean[i]);
      minimalLeads.push_back(leads[i]);
    }
  }

  // Tail reduction to a fixpoint; leads are minimal, so they survive.
  for (int pass = 0; pass < 50; ++pass) {
    bool changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = makeMonic(ord, normalForm(ord, minimal[i], others).remainder);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    const Monomial& la = leadingMonomial(ord, a);
    const Monomial& lb = leadingMonomial(ord, b);
    if (la.width() != lb.width()) return la.width() < lb.width();
    int c = ord.compare(la, lb);
    if (c != 0) return c < 0;
    return a < b;
  });
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return minimal;
}

EgbReport equivariantBuchberger(const MonomialOrder& ord, std::vector<Polynomial> gens,
                                const EgbOptions& opts) {
  if (!ord.isWidthOrder())
    throw SemanticError("width-queue completion requires a width-compatible order");
  const RingSignature& sig = *ord.ring();
  EgbReport report;
  std::vector<Polynomial> basis = cleanGenerators(ord, std::move(gens));
  if (basis.empty()) return report;
  if (containsUnit(basis)) {
    report.basis = unitBasis();
    return report;
  }

  // Initial inter-reduction: replace every generator by its normal form
  // against the others, dropping zeros, until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      if (others.empty()) break;
      Polynomial r = normalForm(ord, basis[i], others).remainder;
      if (r.isZero()) {
        basis.erase(basis.begin() + i);
        changed = true;
        break;
      }
      r = makeMonic(ord, r);
      if (!(r == basis[i])) {
        basis[i] = std::move(r);
        changed = true;
        break;
      }
    }
  }
  if (containsUnit(basis)) {
    report.basis = unitBasis();
    return report;
  }

  std::map<int, std::vector<SPair>> queue;
  auto seedPairs = [&](size_t i, size_t j) {
    for (auto& sp : spairGenerators(ord, basis[i], i, basis[j], j, opts.coprimePruning)) {
      report.maxPairWidth = std::max(report.maxPairWidth, sp.width);
      queue[sp.width].push_back(std::move(sp));
    }
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) seedPairs(i, j);

  while (!queue.empty()) {
    auto it = queue.begin();
    const int w = it->first;
    if (w > opts.widthCap)
      throw WidthCapExceeded(opts.widthCap, w,
                             postprocessBasis(ord, basis, opts.compressGenerators));
    std::vector<SPair> batch = std::move(it->second);
    queue.erase(it);

    LevelStats lv;
    lv.width = w;
    lv.pairsConsidered = static_cast<long long>(batch.size());

    std::vector<Polynomial> spolys;
    spolys.reserve(batch.size());
    for (const auto& sp : batch)
      spolys.push_back(spolynomial(ord, basis[sp.fIndex], basis[sp.gIndex], sp));
    std::vector<Polynomial> core = spolyCore(sig, std::move(spolys), opts.compressGenerators);

    std::vector<Polynomial> remainders = batchNormalForms(ord, basis, core, opts.threads);
    bool grew = false;
    for (auto& r : remainders) {
      if (!r.isZero() && grew) r = normalForm(ord, r, basis).remainder;
      if (r.isZero()) {
        ++lv.reductionsToZero;
        continue;
      }
      Polynomial g = makeMonic(ord, r);
      if (opts.compressGenerators) g = makeMonic(ord, canonicalForm(sig, g).poly);
      if (g.degree() == 0) {
        report.basis = unitBasis();
        report.levels.push_back(lv);
        return report;
      }
      basis.push_back(std::move(g));
      grew = true;
      ++lv.generatorsAdded;
      const size_t newIndex = basis.size() - 1;
      for (size_t i = 0; i <= newIndex; ++i) seedPairs(i, newIndex);
    }
    lv.basisSize = basis.size();
    report.pairsConsidered += lv.pairsConsidered;
    report.reductionsToZero += lv.reductionsToZero;
    report.generatorsAdded += lv.generatorsAdded;
    report.levels.push_back(lv);
    if (opts.progress)
      (*opts.progress) << "level n=" << w << " basis=" << lv.basisSize
                       << " queue=" << lv.pairsConsidered << " zeros=" << lv.reductionsToZero
                       << "\n";
  }
  report.basis = postprocessBasis(ord, basis, opts.compressGenerators);
  return report;
}

bool isEquivariantGb(const MonomialOrder& ord, const std::vector<Polynomial>& basis,
                     std::vector<CriterionFailure>* certificate) {
  if (certificate) certificate->clear();
  if (basis.empty()) return true;
  for (const auto& f : basis)
    if (f.isZero()) return false;
  Reducer red(ord, basis);
  bool ok = true;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      for (const auto& sp : spairGenerators(ord, basis[i], i, basis[j], j, true)) {
        Polynomial s = spolynomial(ord, basis[i], basis[j], sp);
        if (s.isZero()) continue;
        Polynomial r = red.normalForm(s).remainder;
        if (r.isZero()) continue;
        ok = false;
        if (!certificate) return false;
        certificate->push_back({sp, std::move(r), false});
      }
    }
  return ok;
}

std::vector<Polynomial> classicalBuchberger(const MonomialOrder& ord,
                                            std::vector<Polynomial> gens, LevelStats* stats) {
  std::vector<Polynomial> basis = cleanGenerators(ord, std::move(gens));
  if (basis.empty()) return basis;
  if (containsUnit(basis)) return unitBasis();

  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& f : basis) leads.push_back(leadingMonomial(ord, f));

  // (lcm degree, j, i): small pairs first, deterministic.
  std::set<std::tuple<int, size_t, size_t>> pending;
  auto push = [&](size_t i, size_t j) {
    if (leads[i].coprimeWith(leads[j])) return;
    pending.insert({leads[i].lcmWith(leads[j]).degree(), j, i});
  };
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) push(i, j);

  while (!pending.empty()) {
    auto [deg, j, i] = *pending.begin();
    pending.erase(pending.begin());
    if (stats) ++stats->pairsConsidered;
    Monomial lcm = leads[i].lcmWith(leads[j]);
    Polynomial left = basis[i].timesTerm(Rational(1) / leadingCoefficient(ord, basis[i]),
                                         *lcm.dividedBy(leads[i]));
    Polynomial right = basis[j].timesTerm(Rational(1) / leadingCoefficient(ord, basis[j]),
                                          *lcm.dividedBy(leads[j]));
    Polynomial r = classicalNormalForm(ord, left.minus(right), basis);
    if (r.isZero()) {
      if (stats) ++stats->reductionsToZero;
      continue;
    }
    r = makeMonic(ord, r);
    if (r.degree() == 0) return unitBasis();
    basis.push_back(r);
    leads.push_back(leadingMonomial(ord, r));
    const size_t n = basis.size() - 1;
    for (size_t k = 0; k < n; ++k) push(k, n);
  }

  // Minimal: drop leads divisible by another kept lead.
  std::vector<size_t> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = ord.compare(leads[a], leads[b]);
    if (c != 0) return c < 0;
    return basis[a] < basis[b];
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minLeads;
  for (size_t i : idx) {
    bool dominated = false;
    for (const auto& lm : minLeads)
      if (leads[i].isDivisibleBy(lm)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      minimal.push_back(basis[i]);
      minLeads.push_back(leads[i]);
    }
  }
  // Reduced: tails in normal form against the rest.
  for (int pass = 0; pass < 50; ++pass) {
    bool changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = makeMonic(ord, classicalNormalForm(ord, minimal[i], others));
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.compare(leadingMonomial(ord, a), leadingMonomial(ord, b));
    if (c != 0) return c < 0;
    return a < b;
  });
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return minimal;
}

TruncationReport truncatedEgb(const MonomialOrder& ord, std::vector<Polynomial> gens,
                              int maxWidth, const EgbOptions& opts) {
  const RingSignature& sig = *ord.ring();
  TruncationReport report;
  std::vector<Polynomial> base = cleanGenerators(ord, std::move(gens));
  if (base.empty()) {
    report.stabilized = true;
    return report;
  }
  if (containsUnit(base)) {
    report.basis = unitBasis();
    report.stabilized = true;
    return report;
  }

  auto certified = [&](const std::vector<Polynomial>& candidate,
                       std::vector<CriterionFailure>* cert = nullptr) {
    if (!isEquivariantGb(ord, candidate, cert) && !cert) return false;
    Reducer red(ord, candidate);
    for (size_t idx = 0; idx < base.size(); ++idx) {
      Polynomial r = red.normalForm(base[idx]).remainder;
      if (r.isZero()) continue;
      if (!cert) return false;
      SPair marker;
      marker.fIndex = marker.gIndex = idx;
      marker.rho1 = marker.rho2 = IncMap::identity(base[idx].width());
      marker.lcm = leadingMonomial(ord, base[idx]);
      marker.width = base[idx].width();
      cert->push_back({std::move(marker), std::move(r), true});
    }
    return !cert || cert->empty();
  };

  // The input may already be a basis; then no truncation round is needed.
  {
    std::vector<Polynomial> candidate = postprocessBasis(ord, base, opts.compressGenerators);
    if (certified(candidate)) {
      report.basis = std::move(candidate);
      report.stabilized = true;
      for (const auto& f : report.basis)
        report.widthReached = std::max(report.widthReached, f.width());
      return report;
    }
  }

  int n0 = 1;
  for (const auto& f : base) n0 = std::max(n0, f.width());
  std::vector<Polynomial> seed;
  for (int n = n0; n <= maxWidth; ++n) {
    std::vector<Polynomial> truncation = generatorTruncation(sig, base, n);
    truncation.insert(truncation.end(), seed.begin(), seed.end());
    std::sort(truncation.begin(), truncation.end());
    truncation.erase(std::unique(truncation.begin(), truncation.end()), truncation.end());

    LevelStats lv;
    lv.width = n;
    std::vector<Polynomial> gb = classicalBuchberger(ord, truncation, &lv);
    std::vector<Polynomial> candidate = postprocessBasis(ord, gb, opts.compressGenerators);

    lv.generatorsAdded = static_cast<long long>(truncation.size());
    lv.basisSize = candidate.size();
    report.levels.push_back(lv);
    report.widthReached = n;
    if (opts.progress)
      (*opts.progress) << "level n=" << n << " basis=" << lv.basisSize
                       << " queue=" << lv.pairsConsidered << " zeros=" << lv.reductionsToZero
                       << "\n";

    if (certified(candidate)) {
      report.basis = std::move(candidate);
      report.stabilized = true;
      return report;
    }
    report.basis = std::move(candidate);
    seed = std::move(gb);
  }
  certified(report.basis, &report.certificate);
  return report;
}

Polynomial equivariantNormalForm(const MonomialOrder& ord, const Polynomial& f,
                                 const std::vector<Polynomial>& basis) {
  if (basis.empty()) return f;
  return normalForm(ord, f, basis).remainder;
}

}  // namespace symgb
