#include "symgb/reduce.hpp"

#include <algorithm>

namespace symgb {

namespace {

size_t leadingIndex(const MonomialOrder& ord, const Polynomial& f) {
  if (f.isZero()) throw ZeroPolynomial("zero polynomial has no leading term");
  size_t best = 0;
  const auto& terms = f.terms();
  for (size_t i = 1; i < terms.size(); ++i)
    if (ord.less(terms[best].mono, terms[i].mono)) best = i;
  return best;
}

std::vector<long> orbitDegreesOf(const RingSignature& sig, const Monomial& m) {
  std::vector<long> d(sig.orbitCount(), 0);
  for (const auto& [v, e] : m.factors()) d[v.orbit] += e;
  return d;
}

}  // namespace

const Term& leadingTerm(const MonomialOrder& ord, const Polynomial& f) {
  return f.terms()[leadingIndex(ord, f)];
}

const Monomial& leadingMonomial(const MonomialOrder& ord, const Polynomial& f) {
  return leadingTerm(ord, f).mono;
}

Rational leadingCoefficient(const MonomialOrder& ord, const Polynomial& f) {
  return leadingTerm(ord, f).coeff;
}

Polynomial makeMonic(const MonomialOrder& ord, const Polynomial& f) {
  if (f.isZero()) return f;
  return f.timesScalar(Rational(1) / leadingCoefficient(ord, f));
}

Reducer::Reducer(const MonomialOrder& ord, const std::vector<Polynomial>& gens) : ord_(ord) {
  const RingSignature& sig = *ord.ring();
  gens_.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.isZero()) throw ZeroPolynomial("zero polynomial in a generator list");
    GenInfo info;
    info.poly = &g;
    info.lead = leadingMonomial(ord, g);
    info.leadCoeff = leadingCoefficient(ord, g);
    info.leadDegree = info.lead.degree();
    auto supp = info.lead.indexSupport();
    info.suppSize = static_cast<int>(supp.size());
    info.maxIndex = supp.empty() ? 0 : supp.back();
    info.orbitDegrees = orbitDegreesOf(sig, info.lead);
    gens_.push_back(std::move(info));
  }
}

bool Reducer::reducible(const Monomial& m) const {
  if (irreducible_.count(m)) return false;
  const RingSignature& sig = *ord_.ring();
  auto supp = m.indexSupport();
  int suppSize = static_cast<int>(supp.size());
  int maxIndex = supp.empty() ? 0 : supp.back();
  int deg = m.degree();
  auto orbDeg = orbitDegreesOf(sig, m);
  for (const auto& g : gens_) {
    if (g.leadDegree > deg || g.suppSize > suppSize || g.maxIndex > maxIndex) continue;
    bool dominated = true;
    for (size_t o = 0; o < orbDeg.size(); ++o)
      if (g.orbitDegrees[o] > orbDeg[o]) {
        dominated = false;
        break;
      }
    if (!dominated) continue;
    if (equivariantDivides(sig, g.lead, m)) return true;
  }
  irreducible_.insert(m);
  return false;
}

NormalFormResult Reducer::normalForm(const Polynomial& f, bool wantSteps) const {
  const RingSignature& sig = *ord_.ring();
  NormalFormResult out;
  Polynomial work = f;
  std::vector<Term> done;  // terms proven irreducible

  while (!work.isZero()) {
    // Cancel the largest term; a term only becomes final once no generator
    // lead equivariantly divides it.
    size_t top = leadingIndex(ord_, work);
    const Term topTerm = work.terms()[top];

    bool used = false;
    if (!irreducible_.count(topTerm.mono)) {
      auto supp = topTerm.mono.indexSupport();
      int suppSize = static_cast<int>(supp.size());
      int maxIndex = supp.empty() ? 0 : supp.back();
      int deg = topTerm.mono.degree();
      auto orbDeg = orbitDegreesOf(sig, topTerm.mono);
      for (size_t gi = 0; gi < gens_.size() && !used; ++gi) {
        const GenInfo& g = gens_[gi];
        if (g.leadDegree > deg || g.suppSize > suppSize || g.maxIndex > maxIndex) continue;
        bool dominated = true;
        for (size_t o = 0; o < orbDeg.size(); ++o)
          if (g.orbitDegrees[o] > orbDeg[o]) {
            dominated = false;
            break;
          }
        if (!dominated) continue;
        auto witness = equivariantDivides(sig, g.lead, topTerm.mono);
        if (!witness) continue;
        IncMap shift = witness->shift.extendedTo(g.poly->width());
        Polynomial shifted = applyInc(sig, shift, *g.poly);
        Rational c = topTerm.coeff / g.leadCoeff;
        work = work.minus(shifted.timesTerm(c, witness->quotient));
        ++out.stepCount;
        if (wantSteps) out.steps.push_back({gi, shift, witness->quotient, c});
        used = true;
      }
      if (!used) irreducible_.insert(topTerm.mono);
    }
    if (!used) {
      done.push_back(topTerm);
      work = work.minus(Polynomial::monomial(topTerm.mono, topTerm.coeff));
    }
  }
  out.remainder = Polynomial::fromTerms(std::move(done));
  return out;
}

NormalFormResult normalForm(const MonomialOrder& ord, const Polynomial& f,
                            const std::vector<Polynomial>& gens, bool wantSteps) {
  return Reducer(ord, gens).normalForm(f, wantSteps);
}

Polynomial classicalNormalForm(const MonomialOrder& ord, const Polynomial& f,
                               const std::vector<Polynomial>& gens) {
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back({leadingMonomial(ord, g), leadingCoefficient(ord, g)});

  Polynomial work = f;
  std::vector<Term> done;
  while (!work.isZero()) {
    size_t top = leadingIndex(ord, work);
    const Term topTerm = work.terms()[top];
    bool used = false;
    for (size_t gi = 0; gi < gens.size() && !used; ++gi) {
      auto q = topTerm.mono.dividedBy(leads[gi].first);
      if (!q) continue;
      work = work.minus(gens[gi].timesTerm(topTerm.coeff / leads[gi].second, *q));
      used = true;
    }
    if (!used) {
      done.push_back(topTerm);
      work = work.minus(Polynomial::monomial(topTerm.mono, topTerm.coeff));
    }
  }
  return Polynomial::fromTerms(std::move(done));
}

}  // namespace symgb
