#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symgb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values that must share a ring signature do not.
struct RingMismatch : Error {
  using Error::Error;
};

/// An IncMap was applied to something wider than its domain.
struct DomainTooSmall : Error {
  using Error::Error;
};

/// Leading term of the zero polynomial requested.
struct ZeroPolynomial : Error {
  using Error::Error;
};

/// Matrix is not a matching-monoid member where one was required.
struct NotMember : Error {
  using Error::Error;
};

/// Monomial map image uses an index beyond the orbit arity.
struct ImageTooWide : Error {
  using Error::Error;
};

/// Monomial map is not compatible with an orbit stabilizer; carries the
/// violating permutation (0-based images).
struct NotEquivariant : Error {
  std::vector<int> witness;
  NotEquivariant(const std::string& what, std::vector<int> perm)
      : Error(what), witness(std::move(perm)) {}
};

/// Lexing/grammar failure in a text input, with 1-based position.
struct SyntaxError : Error {
  int line = 0;
  int column = 0;
  SyntaxError(const std::string& what, int ln, int col)
      : Error(what + " (line " + std::to_string(ln) + ", column " +
              std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};

/// Well-formed input with an invalid meaning (unknown orbit, bad tuple, ...).
struct SemanticError : Error {
  using Error::Error;
};

}  // namespace symgb
