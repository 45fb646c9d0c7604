#include "symgb/order.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <set>

namespace symgb {

namespace {

constexpr int kKeyLen = 8;
using VarKey = std::array<int32_t, kKeyLen>;

struct KeyExp {
  VarKey key;
  long exp;
};

// Rank by (index tuple, orbit); zero padding makes shorter tuples smaller.
VarKey tupleKey(const Variable& v) {
  VarKey k{};
  for (size_t i = 0; i < v.indices.size(); ++i) k[i] = v.indices[i];
  k[6] = v.orbit;
  return k;
}

// Rank by (max index, reversed tuple, orbit).
VarKey fiberKeyOf(int orbit, const std::vector<int>& tuple) {
  VarKey k{};
  int mx = 0;
  for (int idx : tuple) mx = std::max(mx, idx);
  k[0] = mx;
  for (size_t i = 0; i < tuple.size(); ++i) k[1 + i] = tuple[tuple.size() - 1 - i];
  k[7] = orbit;
  return k;
}

VarKey fiberKey(const Variable& v) { return fiberKeyOf(v.orbit, v.indices); }

void sortAndMerge(std::vector<KeyExp>& out) {
  std::sort(out.begin(), out.end(),
            [](const KeyExp& a, const KeyExp& b) { return a.key < b.key; });
  size_t w = 0;
  for (size_t r = 0; r < out.size(); ++r) {
    if (w > 0 && out[w - 1].key == out[r].key)
      out[w - 1].exp += out[r].exp;
    else
      out[w++] = out[r];
  }
  out.resize(w);
}

template <typename KeyFn>
void buildKeyed(const Monomial& m, KeyFn keyOf, std::vector<KeyExp>& out) {
  out.clear();
  for (const auto& [v, e] : m.factors()) out.push_back({keyOf(v), e});
  std::sort(out.begin(), out.end(),
            [](const KeyExp& a, const KeyExp& b) { return a.key < b.key; });
}

/// Slot expansion y[p](a_1..a_k) -> product of slot variables (a_i, slot p.i),
/// restricted to orbits below slotBase.size(). Returns the expansion degree.
long buildSlotKeyed(const Monomial& m, const std::vector<int>& slotBase,
                    std::vector<KeyExp>& out) {
  out.clear();
  long deg = 0;
  for (const auto& [v, e] : m.factors()) {
    if (v.orbit >= static_cast<int>(slotBase.size())) continue;
    for (size_t i = 0; i < v.indices.size(); ++i) {
      VarKey k{};
      k[0] = v.indices[i];
      k[1] = slotBase[v.orbit] + static_cast<int>(i);
      out.push_back({k, e});
      deg += e;
    }
  }
  sortAndMerge(out);
  return deg;
}

/// Both lists ascending by key. Largest differing variable decides; a larger
/// exponent there wins.
int walkLexDesc(const std::vector<KeyExp>& A, const std::vector<KeyExp>& B) {
  auto a = A.rbegin();
  auto b = B.rbegin();
  while (a != A.rend() && b != B.rend()) {
    if (a->key != b->key) return a->key > b->key ? 1 : -1;
    if (a->exp != b->exp) return a->exp > b->exp ? 1 : -1;
    ++a;
    ++b;
  }
  if (a != A.rend()) return 1;
  if (b != B.rend()) return -1;
  return 0;
}

/// Both lists ascending by key. Smallest differing variable decides; a larger
/// exponent there loses.
int walkRevLexAsc(const std::vector<KeyExp>& A, const std::vector<KeyExp>& B) {
  auto a = A.begin();
  auto b = B.begin();
  while (a != A.end() && b != B.end()) {
    if (a->key != b->key) return a->key < b->key ? -1 : 1;
    if (a->exp != b->exp) return a->exp > b->exp ? -1 : 1;
    ++a;
    ++b;
  }
  if (a != A.end()) return -1;
  if (b != B.end()) return 1;
  return 0;
}

int hybridCompare(const Monomial& a, const Monomial& b, const std::vector<int>& slotBase) {
  thread_local std::vector<KeyExp> ka, kb;
  long da = buildSlotKeyed(a, slotBase, ka);
  long db = buildSlotKeyed(b, slotBase, kb);
  if (da != db) return da < db ? -1 : 1;
  int c = walkLexDesc(ka, kb);
  if (c != 0) return c;
  // Identical slot expansions: break the tie inside the fiber.
  long ta = a.degree(), tb = b.degree();
  if (ta != tb) return ta < tb ? -1 : 1;
  buildKeyed(a, fiberKey, ka);
  buildKeyed(b, fiberKey, kb);
  return walkRevLexAsc(ka, kb);
}

std::vector<int> slotBasesFor(const RingSignature& sig, int orbitLimit) {
  std::vector<int> base(orbitLimit);
  int acc = 0;
  for (int p = 0; p < orbitLimit; ++p) {
    base[p] = acc;
    acc += sig.orbits[p].arity;
  }
  return base;
}

void requireFreeOrbits(const RingSignature& sig, int orbitLimit, const char* what) {
  for (int p = 0; p < orbitLimit; ++p)
    if (sig.orbits[p].stabilizer.size() > 1)
      throw SemanticError(std::string(what) + " requires trivial stabilizers");
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, RingPtr ring)
    : kind_(kind), ring_(std::move(ring)) {
  if (!ring_) throw SemanticError("order requires a ring");
  switch (kind_) {
    case OrderKind::HybridToric:
      requireFreeOrbits(*ring_, ring_->orbitCount(), "the toric order");
      slotBase_ = slotBasesFor(*ring_, ring_->orbitCount());
      break;
    case OrderKind::Elimination:
      if (ring_->kind != RingKind::Product)
        throw SemanticError("the elimination order requires a product ring");
      requireFreeOrbits(*ring_, ring_->xBlockStart, "the elimination order");
      slotBase_ = slotBasesFor(*ring_, ring_->xBlockStart);
      break;
    case OrderKind::Pushforward:
      slotBase_ = slotBasesFor(*ring_, ring_->orbitCount());
      break;
    default:
      break;
  }
}

MonomialOrder MonomialOrder::lex(RingPtr ring) { return {OrderKind::Lex, std::move(ring)}; }
MonomialOrder MonomialOrder::gradedLex(RingPtr ring) {
  return {OrderKind::GradedLex, std::move(ring)};
}
MonomialOrder MonomialOrder::gradedRevLex(RingPtr ring) {
  return {OrderKind::GradedRevLex, std::move(ring)};
}
MonomialOrder MonomialOrder::fiberRevLex(RingPtr ring) {
  return {OrderKind::FiberRevLex, std::move(ring)};
}
MonomialOrder MonomialOrder::hybridToric(RingPtr freeRing) {
  return {OrderKind::HybridToric, std::move(freeRing)};
}
MonomialOrder MonomialOrder::elimination(RingPtr product) {
  return {OrderKind::Elimination, std::move(product)};
}
MonomialOrder MonomialOrder::pushforward(RingPtr ring) {
  return {OrderKind::Pushforward, std::move(ring)};
}

std::vector<int> nuTuple(const OrbitSpec& spec, int orbit, int slotBase,
                         const std::vector<int>& tuple) {
  auto slotKeys = [&](const std::vector<int>& t) {
    std::vector<KeyExp> ks;
    ks.reserve(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
      VarKey k{};
      k[0] = t[i];
      k[1] = slotBase + static_cast<int>(i);
      ks.push_back({k, 1});
    }
    sortAndMerge(ks);
    return ks;
  };
  std::vector<int> best = tuple;
  std::vector<KeyExp> bestKeys = slotKeys(best);
  VarKey bestFiber = fiberKeyOf(orbit, best);
  std::vector<int> cand(tuple.size());
  for (const Perm& p : spec.stabilizer) {
    for (size_t i = 0; i < tuple.size(); ++i) cand[i] = tuple[p[i]];
    auto candKeys = slotKeys(cand);
    int c = walkLexDesc(candKeys, bestKeys);
    if (c < 0 || (c == 0 && fiberKeyOf(orbit, cand) < bestFiber)) {
      best = cand;
      bestKeys = std::move(candKeys);
      bestFiber = fiberKeyOf(orbit, best);
    }
  }
  return best;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  thread_local std::vector<KeyExp> ka, kb;
  switch (kind_) {
    case OrderKind::Lex: {
      buildKeyed(a, tupleKey, ka);
      buildKeyed(b, tupleKey, kb);
      return walkLexDesc(ka, kb);
    }
    case OrderKind::GradedLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      buildKeyed(a, tupleKey, ka);
      buildKeyed(b, tupleKey, kb);
      return walkLexDesc(ka, kb);
    }
    case OrderKind::GradedRevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      buildKeyed(a, tupleKey, ka);
      buildKeyed(b, tupleKey, kb);
      return walkRevLexAsc(ka, kb);
    }
    case OrderKind::FiberRevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      buildKeyed(a, fiberKey, ka);
      buildKeyed(b, fiberKey, kb);
      return walkRevLexAsc(ka, kb);
    }
    case OrderKind::HybridToric:
      return hybridCompare(a, b, slotBase_);
    case OrderKind::Elimination: {
      const int xStart = ring_->xBlockStart;
      ka.clear();
      kb.clear();
      long dxa = 0, dxb = 0;
      for (const auto& [v, e] : a.factors())
        if (v.orbit >= xStart) {
          ka.push_back({tupleKey(v), e});
          dxa += e;
        }
      for (const auto& [v, e] : b.factors())
        if (v.orbit >= xStart) {
          kb.push_back({tupleKey(v), e});
          dxb += e;
        }
      if (dxa != dxb) return dxa < dxb ? -1 : 1;
      // factor lists are sorted by (orbit, tuple); within the x block every
      // orbit is unary, so (tuple, orbit) sorting needs a re-sort
      std::sort(ka.begin(), ka.end(),
                [](const KeyExp& x, const KeyExp& y) { return x.key < y.key; });
      std::sort(kb.begin(), kb.end(),
                [](const KeyExp& x, const KeyExp& y) { return x.key < y.key; });
      int c = walkLexDesc(ka, kb);
      if (c != 0) return c;
      return hybridCompare(a, b, slotBase_);
    }
    case OrderKind::Pushforward: {
      std::vector<Monomial::Factor> fa, fb;
      fa.reserve(a.factors().size());
      fb.reserve(b.factors().size());
      for (const auto& [v, e] : a.factors())
        fa.push_back({Variable{v.orbit, nuTuple(ring_->orbits[v.orbit], v.orbit,
                                                slotBase_[v.orbit], v.indices)},
                      e});
      for (const auto& [v, e] : b.factors())
        fb.push_back({Variable{v.orbit, nuTuple(ring_->orbits[v.orbit], v.orbit,
                                                slotBase_[v.orbit], v.indices)},
                      e});
      return hybridCompare(Monomial::fromFactors(std::move(fa)),
                           Monomial::fromFactors(std::move(fb)), slotBase_);
    }
  }
  return 0;
}

bool MonomialOrder::isWidthOrder() const {
  return kind_ == OrderKind::Lex && ring_->allUnary();
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GradedLex:
      return "grlex";
    case OrderKind::GradedRevLex:
      return "grevlex";
    case OrderKind::FiberRevLex:
      return "fiber-revlex";
    case OrderKind::HybridToric:
      return "toric";
    case OrderKind::Elimination:
      return "elim";
    case OrderKind::Pushforward:
      return "pushforward";
  }
  return "?";
}

std::vector<Monomial> monomialBox(const RingSignature& sig, int maxWidth, int maxDeg) {
  std::vector<Variable> vars;
  for (int o = 0; o < sig.orbitCount(); ++o) {
    const int k = sig.orbits[o].arity;
    if (k > maxWidth) continue;
    std::set<std::vector<int>> tuples;
    std::vector<int> tuple(k);
    std::vector<bool> used(maxWidth + 1, false);
    std::function<void(int)> pick = [&](int pos) {
      if (pos == k) {
        tuples.insert(canonicalTuple(sig.orbits[o], tuple));
        return;
      }
      for (int j = 1; j <= maxWidth; ++j) {
        if (used[j]) continue;
        used[j] = true;
        tuple[pos] = j;
        pick(pos + 1);
        used[j] = false;
      }
    };
    pick(0);
    for (const auto& t : tuples) vars.push_back(Variable{o, t});
  }
  std::sort(vars.begin(), vars.end());

  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  std::function<void(size_t, int)> go = [&](size_t from, int degLeft) {
    out.push_back(Monomial::fromFactors(current));
    if (degLeft == 0) return;
    for (size_t j = from; j < vars.size(); ++j)
      for (int e = 1; e <= degLeft; ++e) {
        current.push_back({vars[j], e});
        go(j + 1, degLeft - e);
        current.pop_back();
      }
  };
  go(0, maxDeg);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int sign(int c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

}  // namespace

OrderValidation validateOrderWith(const RingSignature& sig,
                                  const std::function<int(const Monomial&, const Monomial&)>& cmp,
                                  int maxWidth, int maxDeg) {
  OrderValidation rep;
  std::vector<Monomial> box = monomialBox(sig, maxWidth, maxDeg);
  const size_t n = box.size();
  auto fail = [&](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };
  auto less = [&](const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; };

  // Trichotomy and antisymmetry over all pairs.
  bool total = true;
  for (size_t i = 0; i < n && total; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int c1 = cmp(box[i], box[j]);
      int c2 = cmp(box[j], box[i]);
      ++rep.comparisons;
      if (c1 == 0 || sign(c1) != -sign(c2)) {
        total = false;
        fail("distinct monomials that do not compare strictly and consistently");
        break;
      }
    }
  // Transitivity, exhaustively on small boxes, sampled otherwise.
  if (total) {
    auto check3 = [&](const Monomial& a, const Monomial& b, const Monomial& c) {
      ++rep.comparisons;
      return !(less(a, b) && less(b, c)) || less(a, c);
    };
    if (n <= 80) {
      for (size_t i = 0; i < n && total; ++i)
        for (size_t j = 0; j < n && total; ++j)
          for (size_t k = 0; k < n; ++k)
            if (!check3(box[i], box[j], box[k])) {
              total = false;
              fail("transitivity violated");
              break;
            }
    } else {
      std::mt19937 rng(20240917u);
      std::uniform_int_distribution<size_t> pick(0, n - 1);
      for (int t = 0; t < 200000 && total; ++t)
        if (!check3(box[pick(rng)], box[pick(rng)], box[pick(rng)])) {
          total = false;
          fail("transitivity violated");
        }
    }
  }
  rep.totalOrder = total;

  // The unit must be the minimum.
  rep.unitMinimal = true;
  Monomial unit = Monomial::one();
  for (const auto& m : box) {
    ++rep.comparisons;
    if (!(m == unit) && !less(unit, m)) {
      rep.unitMinimal = false;
      fail("a monomial compares below 1");
      break;
    }
  }

  // Multiplier variables: the degree-1 box monomials.
  std::vector<Monomial> multipliers;
  for (const auto& m : box)
    if (m.degree() == 1) multipliers.push_back(m);

  const long long pairTotal = static_cast<long long>(n) * (n - 1) / 2;
  auto strideFor = [&](long long perPairCost, long long budget) {
    long long work = pairTotal * perPairCost;
    return work <= budget ? 1 : static_cast<size_t>((work + budget - 1) / budget);
  };

  // Strict compatibility with multiplication by a variable.
  rep.multiplicative = true;
  {
    size_t stride = strideFor(static_cast<long long>(multipliers.size()), 2000000);
    size_t idx = 0;
    for (size_t i = 0; i < n && rep.multiplicative; ++i)
      for (size_t j = i + 1; j < n && rep.multiplicative; ++j) {
        if (idx++ % stride != 0) continue;
        int c = cmp(box[i], box[j]);
        for (const auto& v : multipliers) {
          ++rep.comparisons;
          if (sign(cmp(box[i].times(v), box[j].times(v))) != sign(c)) {
            rep.multiplicative = false;
            fail("multiplying by a variable changed a comparison");
            break;
          }
        }
      }
  }

  // Inc(N) maps preserve comparisons.
  rep.incRespecting = true;
  {
    std::vector<IncMap> maps = IncMap::all(maxWidth, maxWidth + 2);
    size_t stride = strideFor(static_cast<long long>(maps.size()), 2000000);
    size_t idx = 0;
    for (size_t i = 0; i < n && rep.incRespecting; ++i)
      for (size_t j = i + 1; j < n && rep.incRespecting; ++j) {
        if (idx++ % stride != 0) continue;
        int c = cmp(box[i], box[j]);
        for (const auto& rho : maps) {
          ++rep.comparisons;
          if (sign(cmp(applyInc(sig, rho, box[i]), applyInc(sig, rho, box[j]))) != sign(c)) {
            rep.incRespecting = false;
            fail("an index shift changed a comparison");
            break;
          }
        }
      }
  }

  // The order refines equivariant divisibility.
  rep.refinesDivisibility = true;
  {
    size_t stride = strideFor(2, 2000000);
    size_t idx = 0;
    for (size_t i = 0; i < n && rep.refinesDivisibility; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (idx++ % stride != 0) continue;
        ++rep.comparisons;
        if (equivariantDivides(sig, box[i], box[j]) && !less(box[i], box[j])) {
          rep.refinesDivisibility = false;
          fail("a monomial with an equivariant divisor does not dominate it");
          break;
        }
      }
  }
  return rep;
}

OrderValidation validateOrder(const MonomialOrder& order, int maxWidth, int maxDeg) {
  return validateOrderWith(
      *order.ring(),
      [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b); }, maxWidth,
      maxDeg);
}

}  // namespace symgb
