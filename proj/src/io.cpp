#include "symgb/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace symgb {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;  // identifier text, punct character, or digit string
  long value = 0;    // small integer value (indices, arities, exponents)
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& text, int startLine)
      : text_(text), line_(startLine) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Int;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok_.text.push_back(text_[pos_]);
        ++pos_;
        ++col_;
      }
      tok_.value = tok_.text.size() <= 9 ? std::stol(tok_.text) : 2000000000L;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok_.text.push_back(text_[pos_]);
        ++pos_;
        ++col_;
      }
      return;
    }
    static const std::string punct = "()[],=^+-/*";
    if (punct.find(c) != std::string::npos) {
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token tok_;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
  std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
  throw SyntaxError("expected " + expected + ", got " + got, t.line, t.col);
}

Token expectPunct(Lexer& lex, char c) {
  if (lex.peek().kind != Token::Punct || lex.peek().text[0] != c)
    fail(lex.peek(), std::string("'") + c + "'");
  return lex.next();
}

long expectInt(Lexer& lex, const std::string& what, long lo, long hi) {
  if (lex.peek().kind != Token::Int) fail(lex.peek(), what);
  Token t = lex.next();
  if (t.value < lo || t.value > hi)
    throw SemanticError(what + " " + t.text + " is out of range [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
  return t.value;
}

std::string expectIdent(Lexer& lex, const std::string& what) {
  if (lex.peek().kind != Token::Ident) fail(lex.peek(), what);
  return lex.next().text;
}

bool peekPunct(const Lexer& lex, char c) {
  return lex.peek().kind == Token::Punct && lex.peek().text[0] == c;
}

bool isReservedName(const std::string& s) {
  return s == "x" || s == "z" || s == "orbit" || s == "xrows" || s == "image" ||
         s == "arity" || s == "symmetric";
}

/// One variable reference, resolved against the ring.
Variable parseVariableRef(Lexer& lex, const RingSignature& sig) {
  Token name = lex.next();  // caller guarantees Ident
  if (name.text == "x") {
    expectPunct(lex, '[');
    long r = expectInt(lex, "x-row", 1, 1000000);
    expectPunct(lex, ',');
    long j = expectInt(lex, "index", 1, 1000000);
    expectPunct(lex, ']');
    for (int p = 0; p < sig.orbitCount(); ++p)
      if (sig.orbits[p].style == VariableStyle::XRow && sig.orbits[p].xRow == r)
        return makeVariable(sig, p, {static_cast<int>(j)});
    throw SemanticError("this ring has no x-row " + std::to_string(r));
  }
  if (name.text == "z") {
    expectPunct(lex, '[');
    long p0 = expectInt(lex, "z-orbit", 1, 1000000);
    expectPunct(lex, ',');
    long i0 = expectInt(lex, "z-row", 1, 1000000);
    expectPunct(lex, ',');
    long j = expectInt(lex, "index", 1, 1000000);
    expectPunct(lex, ']');
    for (int p = 0; p < sig.orbitCount(); ++p)
      if (sig.orbits[p].style == VariableStyle::ZSlot && sig.orbits[p].zOrbit == p0 &&
          sig.orbits[p].zRow == i0)
        return makeVariable(sig, p, {static_cast<int>(j)});
    throw SemanticError("this ring has no slot z[" + std::to_string(p0) + "," +
                        std::to_string(i0) + ",-]");
  }
  int orbit = -1;
  for (int p = 0; p < sig.orbitCount(); ++p)
    if (sig.orbits[p].style == VariableStyle::Tuple && sig.orbits[p].name == name.text) {
      orbit = p;
      break;
    }
  if (orbit < 0) throw SemanticError("unknown orbit '" + name.text + "'");
  expectPunct(lex, '(');
  std::vector<int> indices;
  indices.push_back(static_cast<int>(expectInt(lex, "index", 1, 1000000)));
  while (peekPunct(lex, ',')) {
    lex.next();
    indices.push_back(static_cast<int>(expectInt(lex, "index", 1, 1000000)));
  }
  expectPunct(lex, ')');
  return makeVariable(sig, orbit, indices);
}

/// factor := variable ['^' INT]
Monomial::Factor parseFactor(Lexer& lex, const RingSignature& sig) {
  Variable v = parseVariableRef(lex, sig);
  int e = 1;
  if (peekPunct(lex, '^')) {
    lex.next();
    e = static_cast<int>(expectInt(lex, "exponent", 0, 1000000));
  }
  return {std::move(v), e};
}

Rational parseCoefficient(Lexer& lex) {
  Token num = lex.next();  // caller guarantees Int
  if (peekPunct(lex, '/')) {
    lex.next();
    if (lex.peek().kind != Token::Int) fail(lex.peek(), "denominator");
    Token den = lex.next();
    if (den.text == "0") throw SemanticError("zero denominator");
    Rational q(num.text + "/" + den.text);
    q.canonicalize();
    return q;
  }
  return Rational(num.text);
}

Polynomial parsePolyTokens(Lexer& lex, const RingSignature& sig) {
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    int sign = 1;
    if (peekPunct(lex, '+') || peekPunct(lex, '-')) {
      sign = lex.next().text[0] == '-' ? -1 : 1;
    } else if (!first) {
      break;
    }
    Rational coeff = Rational(1);
    std::vector<Monomial::Factor> factors;
    bool haveCoeff = false;
    if (lex.peek().kind == Token::Int) {
      coeff = parseCoefficient(lex);
      haveCoeff = true;
      if (peekPunct(lex, '*')) {
        lex.next();
        if (lex.peek().kind != Token::Ident) fail(lex.peek(), "a variable");
      }
    }
    while (lex.peek().kind == Token::Ident) {
      factors.push_back(parseFactor(lex, sig));
      if (peekPunct(lex, '*')) {
        lex.next();
        if (lex.peek().kind != Token::Ident) fail(lex.peek(), "a variable");
      }
    }
    if (!haveCoeff && factors.empty()) fail(lex.peek(), "a term");
    if (sign < 0) coeff = -coeff;
    terms.push_back({std::move(coeff), Monomial::fromFactors(std::move(factors))});
    first = false;
  }
  if (lex.peek().kind != Token::End) fail(lex.peek(), "'+', '-' or end of input");
  return Polynomial::fromTerms(std::move(terms));
}

std::vector<std::string> splitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  lines.push_back(current);
  return lines;
}

bool blankOrComment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct OrbitDecl {
  std::string name;
  int arity = 1;
  bool symmetric = false;
  int line = 0;
};

OrbitDecl parseOrbitDecl(Lexer& lex, int lineNo) {
  OrbitDecl d;
  d.line = lineNo;
  d.name = expectIdent(lex, "an orbit name");
  if (isReservedName(d.name))
    throw SemanticError("orbit name '" + d.name + "' is reserved");
  if (expectIdent(lex, "'arity'") != "arity") throw SemanticError("expected 'arity'");
  d.arity = static_cast<int>(expectInt(lex, "arity", 1, 6));
  if (lex.peek().kind == Token::Ident) {
    if (lex.next().text != "symmetric") throw SemanticError("expected 'symmetric'");
    d.symmetric = true;
  }
  if (lex.peek().kind != Token::End) fail(lex.peek(), "end of line");
  return d;
}

std::string renderTupleHead(const std::string& name, int k) {
  std::string s = name + "(";
  for (int i = 1; i <= k; ++i) {
    if (i > 1) s += ",";
    s += std::to_string(i);
  }
  return s + ")";
}

}  // namespace

MonomialMapSpec parseMapFile(const std::string& text) {
  std::vector<OrbitDecl> orbits;
  std::map<std::string, int> orbitIndex;
  int xrows = 0;
  std::vector<std::vector<Monomial::Factor>> imageFactors;
  std::vector<bool> haveImage;
  RingPtr xring;

  std::vector<std::string> lines = splitLines(text);
  for (size_t li = 0; li < lines.size(); ++li) {
    if (blankOrComment(lines[li])) continue;
    const int lineNo = static_cast<int>(li) + 1;
    Lexer lex(lines[li], lineNo);
    if (lex.peek().kind != Token::Ident) fail(lex.peek(), "a declaration");
    std::string head = lex.next().text;
    if (head == "orbit") {
      OrbitDecl d = parseOrbitDecl(lex, lineNo);
      if (orbitIndex.count(d.name))
        throw SemanticError("orbit '" + d.name + "' is declared twice");
      orbitIndex[d.name] = static_cast<int>(orbits.size());
      orbits.push_back(d);
      imageFactors.emplace_back();
      haveImage.push_back(false);
    } else if (head == "xrows") {
      if (xrows > 0) throw SemanticError("xrows is declared twice");
      xrows = static_cast<int>(expectInt(lex, "row count", 1, 4096));
      if (lex.peek().kind != Token::End) fail(lex.peek(), "end of line");
      xring = makeXRing(xrows);
    } else if (head == "image") {
      std::string name = expectIdent(lex, "an orbit name");
      auto it = orbitIndex.find(name);
      if (it == orbitIndex.end()) throw SemanticError("unknown orbit '" + name + "'");
      if (xrows == 0) throw SemanticError("xrows must be declared before images");
      const OrbitDecl& orbit = orbits[it->second];
      expectPunct(lex, '(');
      std::vector<long> tuple;
      tuple.push_back(expectInt(lex, "index", 1, 1000000));
      while (peekPunct(lex, ',')) {
        lex.next();
        tuple.push_back(expectInt(lex, "index", 1, 1000000));
      }
      expectPunct(lex, ')');
      bool representative = static_cast<int>(tuple.size()) == orbit.arity;
      for (size_t i = 0; representative && i < tuple.size(); ++i)
        if (tuple[i] != static_cast<long>(i) + 1) representative = false;
      if (!representative)
        throw SemanticError("the image of '" + name + "' must be declared on the tuple " +
                            renderTupleHead(name, orbit.arity).substr(name.size()));
      expectPunct(lex, '=');
      if (haveImage[it->second])
        throw SemanticError("orbit '" + name + "' has two images");
      std::vector<Monomial::Factor> factors;
      while (lex.peek().kind != Token::End) {
        if (lex.peek().kind != Token::Ident || lex.peek().text != "x")
          fail(lex.peek(), "an x-variable");
        factors.push_back(parseFactor(lex, *xring));
      }
      if (factors.empty()) fail(lex.peek(), "an x-variable");
      imageFactors[it->second] = std::move(factors);
      haveImage[it->second] = true;
    } else {
      throw SyntaxError("unknown declaration '" + head + "'", lineNo, 1);
    }
  }

  if (orbits.empty()) throw SemanticError("map file declares no orbits");
  if (xrows == 0) throw SemanticError("map file declares no xrows");
  for (size_t p = 0; p < orbits.size(); ++p)
    if (!haveImage[p]) throw SemanticError("orbit '" + orbits[p].name + "' has no image");

  std::vector<OrbitSpec> specs;
  for (const auto& d : orbits) {
    OrbitSpec o;
    o.name = d.name;
    o.arity = d.arity;
    o.stabilizer = d.symmetric ? fullSymmetricGroup(d.arity) : trivialGroup(d.arity);
    o.style = VariableStyle::Tuple;
    specs.push_back(std::move(o));
  }
  MonomialMapSpec spec;
  spec.source = makeYRing(std::move(specs));
  spec.target = xring;
  for (auto& f : imageFactors) spec.images.push_back(Monomial::fromFactors(std::move(f)));
  validateMap(spec);
  return spec;
}

std::string renderMapFile(const MonomialMapSpec& spec) {
  std::ostringstream out;
  const RingSignature& y = *spec.source;
  for (const auto& o : y.orbits) {
    out << "orbit " << o.name << " arity " << o.arity;
    if (o.stabilizer.size() > 1) out << " symmetric";
    out << "\n";
  }
  out << "xrows " << spec.target->orbitCount() << "\n";
  for (int p = 0; p < y.orbitCount(); ++p)
    out << "image " << renderTupleHead(y.orbits[p].name, y.orbits[p].arity) << " = "
        << renderMonomial(*spec.target, spec.images[p]) << "\n";
  return out.str();
}

GeneratorFile parseGeneratorFile(const std::string& text) {
  std::vector<OrbitDecl> orbits;
  std::map<std::string, int> orbitIndex;
  int xrows = 0;
  GeneratorFile result;

  auto buildRing = [&]() {
    if (orbits.empty() && xrows == 0)
      throw SemanticError("generator file declares no ring");
    std::vector<OrbitSpec> specs;
    for (const auto& d : orbits) {
      OrbitSpec o;
      o.name = d.name;
      o.arity = d.arity;
      o.stabilizer = d.symmetric ? fullSymmetricGroup(d.arity) : trivialGroup(d.arity);
      o.style = VariableStyle::Tuple;
      specs.push_back(std::move(o));
    }
    if (specs.empty())
      result.ring = makeXRing(xrows);
    else if (xrows == 0)
      result.ring = makeYRing(std::move(specs));
    else
      result.ring = productRing(makeYRing(std::move(specs)), xrows);
  };

  std::vector<std::string> lines = splitLines(text);
  for (size_t li = 0; li < lines.size(); ++li) {
    if (blankOrComment(lines[li])) continue;
    const int lineNo = static_cast<int>(li) + 1;
    Lexer lex(lines[li], lineNo);
    const Token& head = lex.peek();
    if (head.kind == Token::Ident && head.text == "orbit") {
      if (result.ring)
        throw SemanticError("ring declarations must precede the first polynomial");
      lex.next();
      OrbitDecl d = parseOrbitDecl(lex, lineNo);
      if (orbitIndex.count(d.name))
        throw SemanticError("orbit '" + d.name + "' is declared twice");
      orbitIndex[d.name] = static_cast<int>(orbits.size());
      orbits.push_back(d);
      continue;
    }
    if (head.kind == Token::Ident && head.text == "xrows") {
      if (result.ring)
        throw SemanticError("ring declarations must precede the first polynomial");
      lex.next();
      if (xrows > 0) throw SemanticError("xrows is declared twice");
      xrows = static_cast<int>(expectInt(lex, "row count", 1, 4096));
      if (lex.peek().kind != Token::End) fail(lex.peek(), "end of line");
      continue;
    }
    if (!result.ring) buildRing();
    Polynomial f = parsePolyTokens(lex, *result.ring);
    result.generators.push_back(std::move(f));
  }
  if (!result.ring) buildRing();
  return result;
}

Polynomial parsePolyExpr(const RingSignature& sig, const std::string& text) {
  Lexer lex(text, 1);
  return parsePolyTokens(lex, sig);
}

std::string renderVariable(const RingSignature& sig, const Variable& v) {
  const OrbitSpec& o = sig.orbits[v.orbit];
  std::string s;
  switch (o.style) {
    case VariableStyle::Tuple: {
      s = o.name + "(";
      for (size_t i = 0; i < v.indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.indices[i]);
      }
      s += ")";
      break;
    }
    case VariableStyle::XRow:
      s = "x[" + std::to_string(o.xRow) + "," + std::to_string(v.indices[0]) + "]";
      break;
    case VariableStyle::ZSlot:
      s = "z[" + std::to_string(o.zOrbit) + "," + std::to_string(o.zRow) + "," +
          std::to_string(v.indices[0]) + "]";
      break;
  }
  return s;
}

std::string renderMonomial(const RingSignature& sig, const Monomial& m) {
  if (m.isOne()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += " ";
    s += renderVariable(sig, v);
    if (e >= 2) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

std::string renderSortedTerms(const RingSignature& sig, std::vector<Term> terms) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    Rational a = t.coeff;
    if (first) {
      if (sgn(a) < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    if (t.mono.isOne())
      s += toString(a);
    else if (a == 1)
      s += renderMonomial(sig, t.mono);
    else
      s += toString(a) + " " + renderMonomial(sig, t.mono);
    first = false;
  }
  return s;
}

}  // namespace

std::string renderPolynomial(const RingSignature& sig, const Polynomial& f) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  return renderSortedTerms(sig, std::move(terms));
}

std::string renderPolynomial(const MonomialOrder& ord, const Polynomial& f) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(b.mono, a.mono) < 0;
  });
  return renderSortedTerms(*ord.ring(), std::move(terms));
}

std::string renderBasis(const MonomialOrder& ord, const std::vector<Polynomial>& basis) {
  std::string s;
  for (const auto& g : basis) s += renderPolynomial(ord, g) + "\n";
  return s;
}

std::string readFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SemanticError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace symgb
