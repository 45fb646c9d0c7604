#include "symgb/ring.hpp"

#include <algorithm>
#include <set>

namespace symgb {

int RingSignature::maxArity() const {
  int m = 0;
  for (const auto& o : orbits) m = std::max(m, o.arity);
  return m;
}

bool RingSignature::allUnary() const {
  return std::all_of(orbits.begin(), orbits.end(),
                     [](const OrbitSpec& o) { return o.arity <= 1; });
}

bool RingSignature::operator==(const RingSignature& other) const {
  if (kind != other.kind || xBlockStart != other.xBlockStart ||
      orbits.size() != other.orbits.size())
    return false;
  for (size_t i = 0; i < orbits.size(); ++i) {
    const OrbitSpec &a = orbits[i], &b = other.orbits[i];
    if (a.name != b.name || a.arity != b.arity || a.style != b.style ||
        a.xRow != b.xRow || a.zOrbit != b.zOrbit || a.zRow != b.zRow ||
        a.stabilizer != b.stabilizer)
      return false;
  }
  return true;
}

Perm identityPerm(int k) {
  Perm p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  return p;
}

bool isPerm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void validateStabilizer(int arity, const std::vector<Perm>& stabilizer) {
  std::set<Perm> group(stabilizer.begin(), stabilizer.end());
  if (group.empty()) throw SemanticError("stabilizer must contain the identity");
  for (const Perm& p : group) {
    if (static_cast<int>(p.size()) != arity || !isPerm(p))
      throw SemanticError("stabilizer element is not a permutation of the arity");
    Perm inv(arity);
    for (int i = 0; i < arity; ++i) inv[p[i]] = i;
    if (!group.count(inv)) throw SemanticError("stabilizer not closed under inverse");
    for (const Perm& q : group) {
      Perm pq(arity);
      for (int i = 0; i < arity; ++i) pq[i] = p[q[i]];
      if (!group.count(pq)) throw SemanticError("stabilizer not closed under composition");
    }
  }
  if (!group.count(identityPerm(arity)))
    throw SemanticError("stabilizer must contain the identity");
}

std::vector<Perm> fullSymmetricGroup(int k) {
  Perm p = identityPerm(k);
  std::vector<Perm> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

std::vector<Perm> trivialGroup(int k) { return {identityPerm(k)}; }

std::vector<int> canonicalTuple(const OrbitSpec& orbit, const std::vector<int>& indices) {
  std::vector<int> best = indices;
  std::vector<int> image(indices.size());
  for (const Perm& p : orbit.stabilizer) {
    for (size_t i = 0; i < indices.size(); ++i) image[i] = indices[p[i]];
    if (image < best) best = image;
  }
  return best;
}

namespace {

constexpr int kMaxArity = 6;

void checkArity(int arity) {
  if (arity < 0 || arity > kMaxArity)
    throw SemanticError("orbit arity must be between 0 and " + std::to_string(kMaxArity));
}

}  // namespace

RingPtr makeXRing(int rows) {
  if (rows < 1) throw SemanticError("an X-ring needs at least one row");
  auto sig = std::make_shared<RingSignature>();
  sig->kind = RingKind::X;
  sig->xBlockStart = 0;
  for (int r = 1; r <= rows; ++r) {
    OrbitSpec o;
    o.name = "x";
    o.arity = 1;
    o.stabilizer = trivialGroup(1);
    o.style = VariableStyle::XRow;
    o.xRow = r;
    sig->orbits.push_back(std::move(o));
  }
  return sig;
}

RingPtr makeYRing(std::vector<OrbitSpec> orbits) {
  if (orbits.empty()) throw SemanticError("a ring needs at least one orbit");
  std::set<std::string> names;
  for (auto& o : orbits) {
    checkArity(o.arity);
    if (o.stabilizer.empty()) o.stabilizer = trivialGroup(o.arity);
    validateStabilizer(o.arity, o.stabilizer);
    if (o.name.empty()) throw SemanticError("orbit needs a name");
    if (!names.insert(o.name).second)
      throw SemanticError("duplicate orbit name: " + o.name);
  }
  auto sig = std::make_shared<RingSignature>();
  sig->kind = RingKind::Y;
  sig->orbits = std::move(orbits);
  sig->xBlockStart = sig->orbitCount();
  return sig;
}

RingPtr freeCoverRing(const RingSignature& y) {
  auto sig = std::make_shared<RingSignature>();
  sig->kind = RingKind::Yprime;
  sig->orbits = y.orbits;
  for (auto& o : sig->orbits) o.stabilizer = trivialGroup(o.arity);
  sig->xBlockStart = sig->orbitCount();
  return sig;
}

RingPtr zRingFor(const RingSignature& yprime) {
  auto sig = std::make_shared<RingSignature>();
  sig->kind = RingKind::Z;
  for (int p = 0; p < yprime.orbitCount(); ++p) {
    for (int i = 1; i <= yprime.orbits[p].arity; ++i) {
      OrbitSpec o;
      o.name = "z";
      o.arity = 1;
      o.stabilizer = trivialGroup(1);
      o.style = VariableStyle::ZSlot;
      o.zOrbit = p + 1;
      o.zRow = i;
      sig->orbits.push_back(std::move(o));
    }
  }
  if (sig->orbits.empty()) throw SemanticError("Z-ring is empty: all arities are 0");
  sig->xBlockStart = sig->orbitCount();
  return sig;
}

RingPtr productRing(RingPtr yprime, int rows) {
  if (rows < 1) throw SemanticError("an X-ring needs at least one row");
  auto sig = std::make_shared<RingSignature>();
  sig->kind = RingKind::Product;
  sig->orbits = yprime->orbits;
  sig->xBlockStart = sig->orbitCount();
  for (int r = 1; r <= rows; ++r) {
    OrbitSpec o;
    o.name = "x";
    o.arity = 1;
    o.stabilizer = trivialGroup(1);
    o.style = VariableStyle::XRow;
    o.xRow = r;
    sig->orbits.push_back(std::move(o));
  }
  return sig;
}

}  // namespace symgb
