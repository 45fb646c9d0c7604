#include "symgb/matching.hpp"

#include <algorithm>
#include <functional>

namespace symgb {

int ExponentMatrix::columns() const {
  int w = 0;
  for (const auto& block : blocks)
    for (const auto& row : block) w = std::max(w, static_cast<int>(row.size()));
  return w;
}

long ExponentMatrix::entry(int p, int i, int j) const {
  const auto& row = blocks[p][i];
  if (j < 1 || j > static_cast<int>(row.size())) return 0;
  return row[j - 1];
}

long ExponentMatrix::rowSum(int p, int i) const {
  long s = 0;
  for (long v : blocks[p][i]) s += v;
  return s;
}

long ExponentMatrix::columnSum(int p, int j) const {
  long s = 0;
  for (size_t i = 0; i < blocks[p].size(); ++i) s += entry(p, static_cast<int>(i), j);
  return s;
}

long ExponentMatrix::normDistance(const ExponentMatrix& a, const ExponentMatrix& b) {
  long dist = 0;
  size_t orbits = std::max(a.blocks.size(), b.blocks.size());
  for (size_t p = 0; p < orbits; ++p) {
    size_t rowsA = p < a.blocks.size() ? a.blocks[p].size() : 0;
    size_t rowsB = p < b.blocks.size() ? b.blocks[p].size() : 0;
    size_t rows = std::max(rowsA, rowsB);
    for (size_t i = 0; i < rows; ++i) {
      int w = 0;
      if (i < rowsA) w = std::max(w, static_cast<int>(a.blocks[p][i].size()));
      if (i < rowsB) w = std::max(w, static_cast<int>(b.blocks[p][i].size()));
      for (int j = 1; j <= w; ++j) {
        long va = i < rowsA ? a.entry(static_cast<int>(p), static_cast<int>(i), j) : 0;
        long vb = i < rowsB ? b.entry(static_cast<int>(p), static_cast<int>(i), j) : 0;
        dist += std::abs(va - vb);
      }
    }
  }
  return dist;
}

bool ExponentMatrix::operator==(const ExponentMatrix& other) const {
  return normDistance(*this, other) == 0 && blocks.size() == other.blocks.size();
}

ExponentMatrix exponentMatrixOf(const RingSignature& ring, const Monomial& u,
                                int minColumns) {
  int w = std::max(minColumns, u.width());
  ExponentMatrix M;
  M.blocks.resize(ring.orbitCount());
  for (int p = 0; p < ring.orbitCount(); ++p)
    M.blocks[p].assign(ring.orbits[p].arity, std::vector<long>(w, 0));
  for (const auto& [v, e] : u.factors())
    for (size_t i = 0; i < v.indices.size(); ++i)
      M.blocks[v.orbit][i][v.indices[i] - 1] += e;
  return M;
}

std::optional<std::vector<long>> mmDegrees(const ExponentMatrix& A) {
  std::vector<long> degrees(A.blocks.size(), 0);
  for (size_t p = 0; p < A.blocks.size(); ++p) {
    const auto& block = A.blocks[p];
    if (block.empty()) continue;
    long d = 0;
    for (size_t i = 0; i < block.size(); ++i) {
      long r = A.rowSum(static_cast<int>(p), static_cast<int>(i));
      if (i == 0)
        d = r;
      else if (r != d)
        return std::nullopt;
    }
    int w = A.columns();
    for (int j = 1; j <= w; ++j)
      if (A.columnSum(static_cast<int>(p), j) > d) return std::nullopt;
    degrees[p] = d;
  }
  return degrees;
}

bool mmMember(const ExponentMatrix& A) { return mmDegrees(A).has_value(); }

bool mmDivides(const ExponentMatrix& A, const ExponentMatrix& B) {
  auto da = mmDegrees(A);
  auto db = mmDegrees(B);
  if (!da) throw NotMember("left operand is not in the matching monoid");
  if (!db) throw NotMember("right operand is not in the matching monoid");
  if (da->size() != db->size()) return false;
  int w = std::max(A.columns(), B.columns());
  for (size_t p = 0; p < A.blocks.size(); ++p) {
    for (size_t i = 0; i < A.blocks[p].size(); ++i)
      for (int j = 1; j <= w; ++j)
        if (A.entry(static_cast<int>(p), static_cast<int>(i), j) >
            B.entry(static_cast<int>(p), static_cast<int>(i), j))
          return false;
    long slack = (*db)[p] - (*da)[p];
    if (slack < 0) return false;
    for (int j = 1; j <= w; ++j)
      if (B.columnSum(static_cast<int>(p), j) - A.columnSum(static_cast<int>(p), j) > slack)
        return false;
  }
  return true;
}

namespace {

/// One extraction step on an orbit block: the lexicographically least tuple
/// (a_1, ..., a_k) with distinct entries, positive entries M[i][a_i], and all
/// saturated columns (column sum == d) covered. Such a tuple exists whenever
/// the block is a matching-monoid member of degree d >= 1.
std::vector<int> extractLeastTuple(std::vector<std::vector<long>>& M, long d) {
  const int k = static_cast<int>(M.size());
  const int w = k == 0 ? 0 : static_cast<int>(M[0].size());
  std::vector<bool> saturated(w + 1, false);
  for (int j = 1; j <= w; ++j) {
    long s = 0;
    for (int i = 0; i < k; ++i) s += M[i][j - 1];
    saturated[j] = (s == d);
  }

  std::vector<int> chosen(k, 0);
  std::vector<bool> usedCol(w + 1, false);

  // Feasibility of completing rows [from, k): a matching on the unused
  // positive entries that saturates every remaining row and covers every
  // uncovered saturated column. Kuhn's augmenting paths; matched vertices
  // stay matched, so saturating the required columns first is safe.
  auto feasible = [&](int from) {
    std::vector<int> colOfRow(k, 0);
    std::vector<int> rowOfCol(w + 1, -1);
    std::vector<bool> seen(w + 1, false);
    std::function<bool(int)> augment = [&](int row) -> bool {
      for (int j = 1; j <= w; ++j) {
        if (usedCol[j] || seen[j] || M[row][j - 1] <= 0) continue;
        seen[j] = true;
        if (rowOfCol[j] == -1 || augment(rowOfCol[j])) {
          rowOfCol[j] = row;
          colOfRow[row] = j;
          return true;
        }
      }
      return false;
    };
    // Saturated columns not yet covered must each take a distinct row.
    for (int j = 1; j <= w; ++j) {
      if (!saturated[j] || usedCol[j] || rowOfCol[j] != -1) continue;
      bool matched = false;
      for (int row = from; row < k && !matched; ++row) {
        if (M[row][j - 1] <= 0 || colOfRow[row] != 0) continue;
        rowOfCol[j] = row;
        colOfRow[row] = j;
        matched = true;
      }
      if (!matched) {
        // try augmenting through already-matched rows
        std::function<bool(int)> take = [&](int col) -> bool {
          for (int row = from; row < k; ++row) {
            if (M[row][col - 1] <= 0 || seen[row]) continue;
            seen[row] = true;
            if (colOfRow[row] == 0 || take(colOfRow[row])) {
              colOfRow[row] = col;
              rowOfCol[col] = row;
              return true;
            }
          }
          return false;
        };
        seen.assign(k, false);
        if (!take(j)) return false;
      }
    }
    // Extend to saturate every remaining row.
    for (int row = from; row < k; ++row) {
      if (colOfRow[row] != 0) continue;
      seen.assign(w + 1, false);
      if (!augment(row)) return false;
    }
    return true;
  };

  std::function<bool(int)> place = [&](int row) -> bool {
    if (row == k) return true;
    for (int j = 1; j <= w; ++j) {
      if (usedCol[j] || M[row][j - 1] <= 0) continue;
      chosen[row] = j;
      usedCol[j] = true;
      bool wasSat = saturated[j];
      saturated[j] = false;  // covered now
      if (feasible(row + 1) && place(row + 1)) return true;
      saturated[j] = wasSat;
      usedCol[j] = false;
      chosen[row] = 0;
    }
    return false;
  };
  if (!place(0)) throw NotMember("matching extraction failed on a member block");
  for (int i = 0; i < k; ++i) --M[i][chosen[i] - 1];
  return chosen;
}

}  // namespace

Monomial mmPreimage(const RingSignature& ring, const ExponentMatrix& B) {
  auto degrees = mmDegrees(B);
  if (!degrees) throw NotMember("matrix is not in the matching monoid");
  std::vector<Monomial::Factor> factors;
  for (size_t p = 0; p < B.blocks.size(); ++p) {
    if (ring.orbits[p].arity == 0) continue;
    std::vector<std::vector<long>> M = B.blocks[p];
    for (long d = (*degrees)[p]; d >= 1; --d) {
      std::vector<int> tuple = extractLeastTuple(M, d);
      factors.push_back({makeVariable(ring, static_cast<int>(p), tuple), 1});
    }
  }
  return Monomial::fromFactors(std::move(factors));
}

Monomial liftToFiber(const RingSignature& ring, const Monomial& u, const ExponentMatrix& B,
                     Monomial* keptOut) {
  auto degrees = mmDegrees(B);
  if (!degrees) throw NotMember("target matrix is not in the matching monoid");
  const int W = std::max(B.columns(), u.width());

  std::vector<Monomial::Factor> kept;
  ExponentMatrix keptMatrix = exponentMatrixOf(ring, Monomial::one(), W);

  for (int p = 0; p < ring.orbitCount(); ++p) {
    const int k = ring.orbits[p].arity;
    if (k == 0) continue;
    // The factors of u in this orbit, expanded to a sorted variable sequence.
    std::vector<const Variable*> seq;
    for (const auto& [v, e] : u.factors())
      if (v.orbit == p)
        for (int c = 0; c < e; ++c) seq.push_back(&v);

    const long m = (*degrees)[p];
    std::vector<std::vector<long>> prefix(k, std::vector<long>(W, 0));
    std::vector<long> prefixColSum(W + 1, 0);

    for (size_t j1 = 1; j1 <= seq.size(); ++j1) {
      const Variable& var = *seq[j1 - 1];
      for (int i = 0; i < k; ++i) {
        prefix[i][var.indices[i] - 1] += 1;
        prefixColSum[var.indices[i]] += 1;
      }
      const long j = static_cast<long>(j1);
      bool discard = j > m;
      if (!discard)
        for (int i = 0; i < k && !discard; ++i)
          if (prefix[i][var.indices[i] - 1] > B.entry(p, i, var.indices[i])) discard = true;
      if (!discard) {
        for (int col = 1; col <= W && !discard; ++col) {
          bool inTuple = false;
          for (int idx : var.indices)
            if (idx == col) {
              inTuple = true;
              break;
            }
          if (!inTuple && j - prefixColSum[col] > m - B.columnSum(p, col)) discard = true;
        }
      }
      if (!discard) {
        kept.push_back({var, 1});
        for (int i = 0; i < k; ++i) keptMatrix.blocks[p][i][var.indices[i] - 1] += 1;
      }
    }
  }

  ExponentMatrix diff = B;
  for (size_t p = 0; p < diff.blocks.size(); ++p)
    for (size_t i = 0; i < diff.blocks[p].size(); ++i)
      for (int j = 1; j <= W; ++j) {
        long value = diff.entry(static_cast<int>(p), static_cast<int>(i), j) -
                     keptMatrix.entry(static_cast<int>(p), static_cast<int>(i), j);
        if (static_cast<int>(diff.blocks[p][i].size()) < W) diff.blocks[p][i].resize(W, 0);
        diff.blocks[p][i][j - 1] = value;
      }
  Monomial fill = mmPreimage(ring, diff);
  Monomial keptMonomial = Monomial::fromFactors(std::move(kept));
  if (keptOut) *keptOut = keptMonomial;
  return keptMonomial.times(fill);
}

}  // namespace symgb
