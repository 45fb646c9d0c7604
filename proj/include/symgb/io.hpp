#pragma once

#include <string>
#include <vector>

#include "symgb/order.hpp"
#include "symgb/polynomial.hpp"
#include "symgb/toric.hpp"

namespace symgb {

/// Line-oriented map file:
///   orbit NAME arity INT [symmetric]
///   xrows INT
///   image NAME(1,...,k) = x[r,j] ... (each factor optionally ^e)
///   # comment
/// Tokens may be separated by any whitespace; indices are 1-based; the image
/// declaration must spell the representative tuple (1,...,k). The resolved
/// spec is validated before it is returned. Throws SyntaxError /
/// SemanticError / ImageTooWide / NotEquivariant.
MonomialMapSpec parseMapFile(const std::string& text);

/// Canonical printing; parseMapFile(renderMapFile(s)) resolves to s again.
std::string renderMapFile(const MonomialMapSpec& spec);

/// Line-oriented generator file: ring declarations (orbit / xrows lines as in
/// map files) followed by one polynomial expression per line. Declarations
/// must precede the first polynomial.
struct GeneratorFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
};
GeneratorFile parseGeneratorFile(const std::string& text);

/// One polynomial expression: terms joined by + or -, each an optional
/// rational coefficient (INT or INT/INT) followed by juxtaposed factors
/// NAME(i1,...,ik), x[r,j] or z[p,i,j], each optionally ^e.
Polynomial parsePolyExpr(const RingSignature& sig, const std::string& text);

std::string renderVariable(const RingSignature& sig, const Variable& v);
std::string renderMonomial(const RingSignature& sig, const Monomial& m);
/// Terms in descending structural order.
std::string renderPolynomial(const RingSignature& sig, const Polynomial& f);
/// Terms in descending monomial order (leading term first).
std::string renderPolynomial(const MonomialOrder& ord, const Polynomial& f);
/// One polynomial per line, each terminated by '\n'.
std::string renderBasis(const MonomialOrder& ord, const std::vector<Polynomial>& basis);

/// Whole-file read; throws SemanticError when the file cannot be opened.
std::string readFileOrThrow(const std::string& path);

}  // namespace symgb
