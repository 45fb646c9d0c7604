#include "symgb/monomial.hpp"

#include <algorithm>
#include <functional>

namespace symgb {

Variable makeVariable(const RingSignature& sig, int orbit, std::vector<int> indices) {
  if (orbit < 0 || orbit >= sig.orbitCount())
    throw RingMismatch("orbit index out of range for ring");
  const OrbitSpec& spec = sig.orbits[orbit];
  if (static_cast<int>(indices.size()) != spec.arity)
    throw RingMismatch("index tuple length does not match orbit arity");
  for (int v : indices)
    if (v < 1) throw SemanticError("variable indices must be positive");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw SemanticError("variable indices must be pairwise distinct");
  return Variable{orbit, canonicalTuple(spec, indices)};
}

IncMap::IncMap(std::vector<int> images) : images_(std::move(images)) {
  int prev = 0;
  for (int v : images_) {
    if (v <= prev) throw SemanticError("IncMap images must be strictly increasing and positive");
    prev = v;
  }
}

IncMap IncMap::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return IncMap(std::move(im));
}

IncMap IncMap::extendedTo(int domain) const {
  std::vector<int> im = images_;
  int prev = im.empty() ? 0 : im.back();
  for (int pos = domainSize() + 1; pos <= domain; ++pos) {
    prev = std::max(prev + 1, pos);
    im.push_back(prev);
  }
  return IncMap(std::move(im));
}

std::vector<IncMap> IncMap::all(int domain, int codomain) {
  std::vector<IncMap> maps;
  std::vector<int> im(domain);
  std::function<void(int, int)> go = [&](int pos, int minVal) {
    if (pos == domain) {
      maps.push_back(IncMap(im));
      return;
    }
    for (int v = minVal; codomain - v >= domain - pos - 1; ++v) {
      im[pos] = v;
      go(pos + 1, v + 1);
    }
  };
  go(0, 1);
  return maps;
}

int IncMap::operator()(int i) const {
  if (i < 1 || i > domainSize())
    throw DomainTooSmall("IncMap applied outside its domain");
  return images_[i - 1];
}

IncMap IncMap::composedWith(const IncMap& other) const {
  if (other.domainSize() > 0 && other.images_.back() > domainSize())
    throw DomainTooSmall("outer IncMap domain does not cover inner images");
  std::vector<int> im(other.domainSize());
  for (int i = 0; i < other.domainSize(); ++i) im[i] = images_[other.images_[i] - 1];
  return IncMap(std::move(im));
}

Monomial Monomial::variable(Variable v, int exponent) {
  Monomial m;
  if (exponent < 0) throw SemanticError("negative exponent");
  if (exponent > 0) m.factors_.push_back({std::move(v), exponent});
  return m;
}

Monomial Monomial::fromFactors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second < 0) throw SemanticError("negative exponent");
    if (f.second == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(std::move(f));
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::width() const {
  int w = 0;
  for (const auto& f : factors_)
    for (int idx : f.first.indices) w = std::max(w, idx);
  return w;
}

int Monomial::exponentOf(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  if (it != factors_.end() && it->first == v) return it->second;
  return 0;
}

std::vector<int> Monomial::indexSupport() const {
  std::vector<int> supp;
  for (const auto& f : factors_)
    supp.insert(supp.end(), f.first.indices.begin(), f.first.indices.end());
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  return supp;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::dividedBy(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& g : other.factors_) {
    while (a != factors_.end() && a->first < g.first) out.factors_.push_back(*a++);
    if (a == factors_.end() || !(a->first == g.first) || a->second < g.second)
      return std::nullopt;
    if (a->second > g.second) out.factors_.push_back({a->first, a->second - g.second});
    ++a;
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  return out;
}

bool Monomial::isDivisibleBy(const Monomial& other) const {
  auto a = factors_.begin();
  for (const auto& g : other.factors_) {
    while (a != factors_.end() && a->first < g.first) ++a;
    if (a == factors_.end() || !(a->first == g.first) || a->second < g.second) return false;
    ++a;
  }
  return true;
}

Monomial Monomial::lcmWith(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
      out.factors_.push_back(*a++);
    else if (a == factors_.end() || b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.push_back({a->first, std::max(a->second, b->second)});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::gcdWith(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      out.factors_.push_back({a->first, std::min(a->second, b->second)});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::coprimeWith(const Monomial& other) const {
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else
      return false;
  }
  return true;
}

namespace {

Monomial mapIndices(const RingSignature& sig, const Monomial& m,
                    const std::function<int(int)>& f) {
  std::vector<Monomial::Factor> factors;
  factors.reserve(m.factors().size());
  for (const auto& [v, e] : m.factors()) {
    std::vector<int> mapped(v.indices.size());
    for (size_t i = 0; i < v.indices.size(); ++i) mapped[i] = f(v.indices[i]);
    factors.push_back({makeVariable(sig, v.orbit, std::move(mapped)), e});
  }
  return Monomial::fromFactors(std::move(factors));
}

}  // namespace

Monomial applyIndexMap(const RingSignature& sig, const Monomial& m,
                       const std::map<int, int>& map) {
  std::vector<int> used;
  for (int s : m.indexSupport()) {
    auto it = map.find(s);
    if (it == map.end()) throw SemanticError("index map does not cover the support");
    used.push_back(it->second);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    throw SemanticError("index map is not injective on the support");
  return mapIndices(sig, m, [&](int i) { return map.at(i); });
}

Monomial applyInc(const RingSignature& sig, const IncMap& rho, const Monomial& m) {
  if (m.width() > rho.domainSize())
    throw DomainTooSmall("IncMap domain does not cover the monomial width");
  return mapIndices(sig, m, [&](int i) { return rho(i); });
}

Monomial applyPermutation(const RingSignature& sig, const std::vector<int>& images,
                          const Monomial& m) {
  if (m.width() > static_cast<int>(images.size()))
    throw DomainTooSmall("permutation does not cover the monomial width");
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw SemanticError("not a permutation of an initial segment");
  return mapIndices(sig, m, [&](int i) { return images[i - 1]; });
}

MonomialCanonicalForm canonicalForm(const RingSignature& sig, const Monomial& m) {
  std::vector<int> supp = m.indexSupport();
  std::map<int, int> down;
  for (size_t i = 0; i < supp.size(); ++i) down[supp[i]] = static_cast<int>(i) + 1;
  return {applyIndexMap(sig, m, down), IncMap(supp)};
}

bool incExtendable(const std::vector<std::pair<int, int>>& supportMap) {
  int prevSrc = 0, prevImg = 0;
  for (const auto& [src, img] : supportMap) {
    if (src <= prevSrc || img <= prevImg) return false;
    if (img - prevImg < src - prevSrc) return false;
    prevSrc = src;
    prevImg = img;
  }
  return true;
}

IncMap extendToIncMap(const std::vector<std::pair<int, int>>& supportMap) {
  if (!incExtendable(supportMap))
    throw SemanticError("support map does not extend to Inc(N)");
  int domain = supportMap.empty() ? 0 : supportMap.back().first;
  std::vector<int> im(domain);
  size_t next = 0;
  int prev = 0;
  for (int pos = 1; pos <= domain; ++pos) {
    if (next < supportMap.size() && supportMap[next].first == pos)
      prev = supportMap[next++].second;
    else
      prev = std::max(prev + 1, pos);
    im[pos - 1] = prev;
  }
  return IncMap(std::move(im));
}

namespace {

/// Shared DFS over strictly increasing, Inc(N)-extendable maps defined on
/// `support` with images drawn from `pool` (sorted). Calls visit with the
/// complete (source, image) list; visit returns false to stop the search.
bool searchSupportMaps(const std::vector<int>& support, const std::vector<int>& pool,
                       const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit,
                       const std::function<bool(size_t, int)>& admissible) {
  std::vector<std::pair<int, int>> chosen;
  chosen.reserve(support.size());
  std::function<bool(size_t, size_t)> go = [&](size_t i, size_t poolFrom) -> bool {
    if (i == support.size()) return visit(chosen);
    if (pool.size() - poolFrom < support.size() - i) return true;
    for (size_t j = poolFrom; j < pool.size(); ++j) {
      int img = pool[j];
      int prevSrc = i == 0 ? 0 : chosen.back().first;
      int prevImg = i == 0 ? 0 : chosen.back().second;
      if (img - prevImg < support[i] - prevSrc) continue;
      if (admissible && !admissible(i, img)) continue;
      chosen.push_back({support[i], img});
      bool carryOn = go(i + 1, j + 1);
      chosen.pop_back();
      if (!carryOn) return false;
    }
    return true;
  };
  return go(0, 0);
}

}  // namespace

std::optional<DivisionWitness> equivariantDivides(const RingSignature& sig,
                                                  const Monomial& a, const Monomial& b) {
  if (a.isOne()) return DivisionWitness{IncMap::identity(0), b};
  if (a.degree() > b.degree()) return std::nullopt;

  std::vector<int> suppA = a.indexSupport();
  std::vector<int> suppB = b.indexSupport();
  if (suppA.size() > suppB.size()) return std::nullopt;

  // Variables become fully mapped once their largest index is assigned;
  // check exponent dominance right then to prune the search.
  std::vector<std::vector<size_t>> completers(suppA.size());
  for (size_t fi = 0; fi < a.factors().size(); ++fi) {
    int maxIdx = *std::max_element(a.factors()[fi].first.indices.begin(),
                                   a.factors()[fi].first.indices.end());
    size_t pos = std::lower_bound(suppA.begin(), suppA.end(), maxIdx) - suppA.begin();
    completers[pos].push_back(fi);
  }

  std::optional<DivisionWitness> found;
  std::vector<std::pair<int, int>> current;
  std::map<int, int> partial;

  std::function<bool(size_t, size_t)> go = [&](size_t i, size_t poolFrom) -> bool {
    if (i == suppA.size()) {
      std::map<int, int> full(current.begin(), current.end());
      Monomial shifted = applyIndexMap(sig, a, full);
      auto quotient = b.dividedBy(shifted);
      if (!quotient) return true;
      found = DivisionWitness{extendToIncMap(current), std::move(*quotient)};
      return false;
    }
    if (suppB.size() - poolFrom < suppA.size() - i) return true;
    for (size_t j = poolFrom; j < suppB.size(); ++j) {
      int img = suppB[j];
      int prevSrc = i == 0 ? 0 : current.back().first;
      int prevImg = i == 0 ? 0 : current.back().second;
      if (img - prevImg < suppA[i] - prevSrc) continue;
      current.push_back({suppA[i], img});
      partial[suppA[i]] = img;
      bool ok = true;
      for (size_t fi : completers[i]) {
        const auto& [v, e] = a.factors()[fi];
        std::vector<int> mapped(v.indices.size());
        for (size_t t = 0; t < v.indices.size(); ++t) mapped[t] = partial.at(v.indices[t]);
        if (b.exponentOf(makeVariable(sig, v.orbit, std::move(mapped))) < e) {
          ok = false;
          break;
        }
      }
      bool carryOn = !ok || go(i + 1, j + 1);
      partial.erase(suppA[i]);
      current.pop_back();
      if (!carryOn) return false;
    }
    return true;
  };
  go(0, 0);
  return found;
}

std::vector<Monomial> orbitMembersUpToWidth(const RingSignature& sig, const Monomial& m,
                                            int n) {
  std::vector<Monomial> out;
  std::vector<int> supp = m.indexSupport();
  if (supp.empty()) {
    if (n >= 0) out.push_back(m);
    return out;
  }
  if (n < m.width()) return out;
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  int lastSrc = supp.back();
  searchSupportMaps(
      supp, pool,
      [&](const std::vector<std::pair<int, int>>& chosen) {
        std::map<int, int> full(chosen.begin(), chosen.end());
        out.push_back(applyIndexMap(sig, m, full));
        return true;
      },
      [&](size_t i, int img) { return img + (lastSrc - supp[i]) <= n; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symgb
