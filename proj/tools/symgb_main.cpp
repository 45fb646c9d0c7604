#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symgb/engine.hpp"
#include "symgb/io.hpp"
#include "symgb/toric.hpp"

namespace {

using namespace symgb;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;      // parse or semantic error
constexpr int kExitWidth = 3;      // width cap / truncation bound reached
constexpr int kExitVerify = 4;     // oracle mismatch or internal failure

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw SemanticError("cannot write file: " + outPath);
  out << text;
}

MonomialOrder classicOrder(const std::string& name, RingPtr ring) {
  if (name == "lex") return MonomialOrder::lex(std::move(ring));
  if (name == "grlex") return MonomialOrder::gradedLex(std::move(ring));
  if (name == "grevlex") return MonomialOrder::gradedRevLex(std::move(ring));
  throw SemanticError("unknown order '" + name + "'");
}

bool xFree(const Polynomial& g, int xStart) {
  for (const auto& t : g.terms())
    for (const auto& [v, e] : t.mono.factors())
      if (v.orbit >= xStart) return false;
  return true;
}

/// Classical elimination cross-check at truncation width w: the pipeline
/// basis and the x-free part of a classical Groebner basis of the truncated
/// graph ideal must reduce each other to zero.
bool oracleAgrees(const MonomialMapSpec& spec, const KernelResult& res, int w,
                  std::ostream& diag) {
  GraphSetup setup = graphSetup(res.cover);
  std::vector<Polynomial> trunc = generatorTruncation(*setup.product, setup.generators, w);
  std::vector<Polynomial> gb = classicalBuchberger(setup.order, trunc);
  const int xStart = setup.product->xBlockStart;

  bool ok = true;
  for (const auto& o : gb) {
    if (!xFree(o, xStart)) continue;
    Polynomial h = theta(*spec.source, o);
    if (h.isZero()) continue;
    if (!equivariantNormalForm(res.order, h, res.basis).isZero()) {
      diag << "oracle element not reduced by the basis: "
           << renderPolynomial(res.order, h) << "\n";
      ok = false;
    }
  }
  for (const auto& b : res.basis) {
    if (b.width() > w) continue;
    if (!classicalNormalForm(setup.order, b, gb).isZero()) {
      diag << "basis element not in the truncated elimination ideal: "
           << renderPolynomial(res.order, b) << "\n";
      ok = false;
    }
  }
  return ok;
}

int runKernel(const std::string& mapPath, int maxWidth, int oracleWidth, bool stats,
              const std::string& outPath, int threads, bool noCoprime) {
  MonomialMapSpec spec = parseMapFile(readFileOrThrow(mapPath));
  EgbOptions opts;
  opts.threads = threads;
  opts.coprimePruning = !noCoprime;
  if (stats) opts.progress = &std::cerr;

  KernelResult res = computeKernelEgb(spec, maxWidth, opts);
  if (stats)
    std::cerr << "kernel basis size " << res.basis.size() << ", elimination width "
              << res.elimination.widthReached << "\n";

  if (oracleWidth > 0 && !oracleAgrees(spec, res, oracleWidth, std::cerr)) {
    std::cerr << "oracle mismatch at truncation width " << oracleWidth << "\n";
    return kExitVerify;
  }
  emit(renderBasis(res.order, res.basis), outPath);
  return kExitOk;
}

int runEgb(const std::string& gensPath, const std::string& orderName, int maxWidth,
           bool stats, const std::string& outPath, int threads, bool sinftyClosed) {
  GeneratorFile gf = parseGeneratorFile(readFileOrThrow(gensPath));
  MonomialOrder ord = classicOrder(orderName, gf.ring);
  EgbOptions opts;
  opts.threads = threads;
  opts.compressGenerators = sinftyClosed;
  if (stats) opts.progress = &std::cerr;

  TruncationReport rep = truncatedEgb(ord, gf.generators, maxWidth, opts);
  if (!rep.stabilized) {
    std::cerr << "no stabilization certificate up to width " << maxWidth << "\n";
    return kExitWidth;
  }
  if (stats)
    std::cerr << "basis size " << rep.basis.size() << ", certified at width "
              << rep.widthReached << "\n";
  emit(renderBasis(ord, rep.basis), outPath);
  return kExitOk;
}

int runNf(const std::string& gensPath, const std::string& orderName,
          const std::string& polyText) {
  GeneratorFile gf = parseGeneratorFile(readFileOrThrow(gensPath));
  MonomialOrder ord = classicOrder(orderName, gf.ring);
  Polynomial f = parsePolyExpr(*gf.ring, polyText);
  Polynomial r = equivariantNormalForm(ord, f, gf.generators);
  std::cout << renderPolynomial(ord, r) << "\n";
  return kExitOk;
}

int runValidateOrder(const std::string& orderName, const std::string& mapPath,
                     const std::string& gensPath, int width, int deg) {
  MonomialOrder ord = [&]() {
    if (orderName == "toric") {
      if (mapPath.empty())
        throw SemanticError("--order toric needs --map to supply the monomial map");
      MonomialMapSpec spec = parseMapFile(readFileOrThrow(mapPath));
      FreeCover cover = buildFreeCover(spec);
      return graphSetup(cover).order;
    }
    RingPtr ring;
    if (!gensPath.empty())
      ring = parseGeneratorFile(readFileOrThrow(gensPath)).ring;
    else if (!mapPath.empty())
      ring = parseMapFile(readFileOrThrow(mapPath)).source;
    else
      ring = makeXRing(1);
    return classicOrder(orderName, std::move(ring));
  }();

  OrderValidation v = validateOrder(ord, width, deg);
  if (v.ok()) {
    std::cout << ord.name() << ": ok (comparisons=" << v.comparisons << ")\n";
    return kExitOk;
  }
  std::cerr << ord.name() << ": FAIL " << v.failure << "\n";
  return kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant Groebner bases of symmetric ideals in infinite polynomial rings"};
  app.require_subcommand(1);

  std::string mapPath, gensPath, polyText, orderName, outPath;
  int maxWidth = 12, oracleWidth = 0, threads = 1, width = 3, deg = 2;
  bool stats = false, noCoprime = false, sinftyClosed = false;

  auto* kernel = app.add_subcommand(
      "kernel", "equivariant Groebner basis of the kernel of a monomial map");
  kernel->add_option("--map", mapPath, "map specification file")->required();
  kernel->add_option("--max-width", maxWidth, "truncation width bound (default 12)");
  kernel->add_option("--check-oracle", oracleWidth,
                     "also run the classical elimination oracle at this width");
  kernel->add_flag("--stats", stats, "progress records on stderr");
  kernel->add_option("--output", outPath, "write the basis to a file");
  kernel->add_option("--threads", threads, "worker threads");
  kernel->add_flag("--no-coprime-pruning", noCoprime, "disable the coprime-lead skip");

  auto* egb = app.add_subcommand("egb", "equivariant Groebner basis of a generator file");
  egb->add_option("--gens", gensPath, "generator file")->required();
  egb->add_option("--order", orderName, "lex|grlex|grevlex")->required();
  egb->add_option("--max-width", maxWidth, "truncation width bound (default 12)");
  egb->add_flag("--stats", stats, "progress records on stderr");
  egb->add_option("--output", outPath, "write the basis to a file");
  egb->add_option("--threads", threads, "worker threads");
  egb->add_flag("--sinfty-closed", sinftyClosed,
                "the generated ideal is symmetric: allow index compression");

  auto* nf = app.add_subcommand("nf", "normal form against the orbit of the generators");
  nf->add_option("--gens", gensPath, "generator file")->required();
  nf->add_option("--poly", polyText, "polynomial expression")->required();
  nf->add_option("--order", orderName, "lex|grlex|grevlex")->required();

  auto* validate = app.add_subcommand("validate-order", "check the order axioms on a box");
  validate->add_option("--order", orderName, "lex|grlex|grevlex|toric")->required();
  validate->add_option("--map", mapPath, "monomial map supplying the ring");
  validate->add_option("--gens", gensPath, "generator file supplying the ring");
  validate->add_option("--width", width, "largest index in the test box");
  validate->add_option("--deg", deg, "largest degree in the test box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*kernel)
      return runKernel(mapPath, maxWidth, oracleWidth, stats, outPath, threads, noCoprime);
    if (*egb)
      return runEgb(gensPath, orderName, maxWidth, stats, outPath, threads, sinftyClosed);
    if (*nf) return runNf(gensPath, orderName, polyText);
    if (*validate) return runValidateOrder(orderName, mapPath, gensPath, width, deg);
  } catch (const WidthCapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitWidth;
  } catch (const MaxWidthReached& e) {
    std::cerr << e.what() << "\n";
    return kExitWidth;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitInput;
}
