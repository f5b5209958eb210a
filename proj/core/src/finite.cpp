#include "bsa/finite.hpp"

#include <algorithm>

#include "bsa/errors.hpp"

namespace bsa {

bool strictly_monotone(const FiniteTconorm& S) {
  for (int x = 0; x < S.n; ++x)
    for (int y = 0; y + 1 < S.n; ++y)
      if (S.at(x, y) >= S.at(x, y + 1)) return false;
  return true;
}

namespace {

struct Enumerator {
  int n;
  std::vector<int> t;  // row-major, symmetric, filled as we go
  std::vector<FiniteTconorm>* out;

  int& cell(int i, int j) { return t[static_cast<std::size_t>(i * n + j)]; }

  bool associative_everywhere() {
    for (int x = 1; x < n; ++x)
      for (int y = x; y < n; ++y)
        for (int z = y; z < n; ++z)
          if (cell(cell(x, y), z) != cell(x, cell(y, z))) return false;
    return true;
  }

  // Fills the free cells (1 <= i <= j <= n-1) in row-major order of (i, j).
  void fill(int i, int j) {
    if (i == n) {
      if (associative_everywhere()) out->push_back({n, t});
      return;
    }
    const int ni = j + 1 > n - 1 ? i + 1 : i;
    const int nj = j + 1 > n - 1 ? ni : j + 1;
    // monotone row/column lower bounds; the value can never drop below
    // either argument because 0 is neutral
    int lo = j;
    if (j - 1 >= i) lo = std::max(lo, cell(i, j - 1));
    if (i - 1 >= 1) lo = std::max(lo, cell(i - 1, j));
    for (int v = lo; v <= n - 1; ++v) {
      cell(i, j) = v;
      cell(j, i) = v;
      fill(ni, nj);
    }
    cell(i, j) = 0;
    cell(j, i) = 0;
  }
};

}  // namespace

std::vector<FiniteTconorm> enumerate_finite_tconorms(int n) {
  if (n < 2 || n > 6)
    throw SizeLimit("enumerate_finite_tconorms: chain size must lie in [2, 6]");
  std::vector<FiniteTconorm> out;
  Enumerator e;
  e.n = n;
  e.t.assign(static_cast<std::size_t>(n * n), 0);
  e.out = &out;
  for (int k = 0; k < n; ++k) {
    e.cell(0, k) = k;  // neutral element
    e.cell(k, 0) = k;
  }
  e.fill(1, 1);
  return out;
}

FiniteCensus finite_census(int n) {
  FiniteCensus c;
  c.n = n;
  for (const auto& S : enumerate_finite_tconorms(n)) {
    ++c.total;
    if (strictly_monotone(S)) ++c.strictly_monotone_count;
  }
  return c;
}

}  // namespace bsa
