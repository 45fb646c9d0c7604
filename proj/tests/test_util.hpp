#pragma once

// Shared fixtures for the test binaries: small ring factories and terse
// builders for variables, monomials, and polynomials.

#include <initializer_list>
#include <string>
#include <vector>

#include "symgb/io.hpp"
#include "symgb/monomial.hpp"
#include "symgb/polynomial.hpp"
#include "symgb/ring.hpp"

namespace symgb::testutil {

/// K[x_1, x_2, ...]: one unary row.
inline RingPtr xRing1() { return makeXRing(1); }

/// Ring with one binary orbit "y", trivial stabilizer: y(i,j) != y(j,i).
inline RingPtr pairRing() {
  OrbitSpec o;
  o.name = "y";
  o.arity = 2;
  o.stabilizer = trivialGroup(2);
  return makeYRing({o});
}

/// Ring with one binary orbit "y", full S2 stabilizer: y(i,j) == y(j,i).
inline RingPtr symPairRing() {
  OrbitSpec o;
  o.name = "y";
  o.arity = 2;
  o.stabilizer = fullSymmetricGroup(2);
  return makeYRing({o});
}

/// Ring with a unary orbit "u" and a binary orbit "y" (trivial stabilizer).
inline RingPtr mixedRing() {
  OrbitSpec u;
  u.name = "u";
  u.arity = 1;
  u.stabilizer = trivialGroup(1);
  OrbitSpec y;
  y.name = "y";
  y.arity = 2;
  y.stabilizer = trivialGroup(2);
  return makeYRing({u, y});
}

/// x[row, j]^e as a monomial (row defaults to the sole row of an X ring).
inline Monomial xm(const RingSignature& sig, int j, int e = 1) {
  return Monomial::variable(makeVariable(sig, 0, {j}), e);
}
inline Monomial xm(const RingSignature& sig, int row, int j, int e) {
  return Monomial::variable(makeVariable(sig, row - 1, {j}), e);
}

/// Variable of orbit `orbit` with the given tuple.
inline Variable tv(const RingSignature& sig, int orbit, std::vector<int> idx) {
  return makeVariable(sig, orbit, std::move(idx));
}

/// Monomial from (orbit, tuple, exponent) triples.
struct FactorSpec {
  int orbit;
  std::vector<int> indices;
  int exponent = 1;
};
inline Monomial mono(const RingSignature& sig, std::initializer_list<FactorSpec> fs) {
  std::vector<Monomial::Factor> factors;
  for (const auto& f : fs)
    factors.push_back({makeVariable(sig, f.orbit, f.indices), f.exponent});
  return Monomial::fromFactors(std::move(factors));
}

/// Polynomial from source text (see parsePolyExpr).
inline Polynomial pp(const RingSignature& sig, const std::string& text) {
  return parsePolyExpr(sig, text);
}
inline std::vector<Polynomial> pps(const RingSignature& sig,
                                   std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parsePolyExpr(sig, t));
  return out;
}

}  // namespace symgb::testutil
