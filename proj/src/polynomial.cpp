#include "symgb/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace symgb {

Polynomial Polynomial::constant(Rational c) {
  return monomial(Monomial::one(), std::move(c));
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial f;
  if (!symgb::isZero(c)) f.terms_.push_back({std::move(c), std::move(m)});
  return f;
}

Polynomial Polynomial::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial f;
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
      if (symgb::isZero(f.terms_.back().coeff)) f.terms_.pop_back();
    } else if (!symgb::isZero(t.coeff)) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

int Polynomial::width() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.mono.width());
  return w;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::vector<int> Polynomial::indexSupport() const {
  std::vector<int> supp;
  for (const auto& t : terms_) {
    auto s = t.mono.indexSupport();
    supp.insert(supp.end(), s.begin(), s.end());
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return supp;
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono))
      out.terms_.push_back(*a++);
    else if (a == terms_.end() || b->mono < a->mono)
      out.terms_.push_back(*b++);
    else {
      Rational c = a->coeff + b->coeff;
      if (!symgb::isZero(c)) out.terms_.push_back({std::move(c), a->mono});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  return plus(other.negated());
}

Polynomial Polynomial::negated() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::timesScalar(const Rational& c) const {
  if (symgb::isZero(c)) return Polynomial();
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::timesTerm(const Rational& c, const Monomial& m) const {
  if (symgb::isZero(c)) return Polynomial();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coeff * c, t.mono.times(m)});
  // Multiplication by a fixed monomial preserves the structural term order
  // and cannot merge distinct monomials, but normalize defensively.
  return fromTerms(std::move(terms));
}

Polynomial Polynomial::timesPoly(const Polynomial& other) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) terms.push_back({a.coeff * b.coeff, a.mono.times(b.mono)});
  return fromTerms(std::move(terms));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) ||
        cmp(terms_[i].coeff, other.terms_[i].coeff) != 0)
      return false;
  return true;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
  size_t n = std::min(terms_.size(), other.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = terms_[i].mono <=> other.terms_[i].mono;
    if (c != 0) return c;
    int cc = cmp(terms_[i].coeff, other.terms_[i].coeff);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

namespace {

template <typename MapMono>
Polynomial mapTerms(const Polynomial& f, MapMono&& mapMono) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, mapMono(t.mono)});
  return Polynomial::fromTerms(std::move(terms));
}

}  // namespace

Polynomial applyInc(const RingSignature& sig, const IncMap& rho, const Polynomial& f) {
  return mapTerms(f, [&](const Monomial& m) { return applyInc(sig, rho, m); });
}

Polynomial applyIndexMap(const RingSignature& sig, const Polynomial& f,
                         const std::map<int, int>& map) {
  return mapTerms(f, [&](const Monomial& m) { return applyIndexMap(sig, m, map); });
}

Polynomial applyPermutation(const RingSignature& sig, const std::vector<int>& images,
                            const Polynomial& f) {
  return mapTerms(f, [&](const Monomial& m) { return applyPermutation(sig, images, m); });
}

PolynomialCanonicalForm canonicalForm(const RingSignature& sig, const Polynomial& f) {
  std::vector<int> supp = f.indexSupport();
  std::map<int, int> down;
  for (size_t i = 0; i < supp.size(); ++i) down[supp[i]] = static_cast<int>(i) + 1;
  return {applyIndexMap(sig, f, down), IncMap(supp)};
}

std::vector<Polynomial> sinftyToIncReps(const RingSignature& sig, const Polynomial& f) {
  std::vector<Polynomial> out;
  int w = f.width();
  std::vector<int> perm(w);
  for (int i = 0; i < w; ++i) perm[i] = i + 1;
  do {
    out.push_back(canonicalForm(sig, applyPermutation(sig, perm, f)).poly);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polynomial> orbitMembersUpToWidth(const RingSignature& sig, const Polynomial& f,
                                              int n) {
  std::vector<Polynomial> out;
  if (f.isZero()) return out;
  if (n < f.width()) return out;
  std::vector<int> supp = f.indexSupport();
  if (supp.empty()) {
    out.push_back(f);
    return out;
  }
  // Enumerate strictly increasing, Inc(N)-extendable maps supp -> [n] by
  // choosing images in ascending order with the gap constraints.
  std::vector<std::pair<int, int>> chosen;
  int lastSrc = supp.back();
  std::function<void(size_t, int)> go = [&](size_t i, int minImg) {
    if (i == supp.size()) {
      std::map<int, int> full(chosen.begin(), chosen.end());
      out.push_back(applyIndexMap(sig, f, full));
      return;
    }
    int prevSrc = i == 0 ? 0 : chosen.back().first;
    int prevImg = i == 0 ? 0 : chosen.back().second;
    for (int img = std::max(minImg, prevImg + (supp[i] - prevSrc));
         img + (lastSrc - supp[i]) <= n; ++img) {
      chosen.push_back({supp[i], img});
      go(i + 1, img + 1);
      chosen.pop_back();
    }
  };
  go(0, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polynomial> generatorTruncation(const RingSignature& sig,
                                            const std::vector<Polynomial>& F, int n) {
  std::vector<Polynomial> out;
  for (const auto& f : F) {
    auto members = orbitMembersUpToWidth(sig, f, n);
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symgb
