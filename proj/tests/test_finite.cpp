#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "bsa/errors.hpp"
#include "bsa/finite.hpp"

using namespace bsa;

namespace {

// Independent oracle: enumerate *all* n*n symmetric tables cell by cell
// with no pruning beyond symmetry, then test every axiom directly.
// Exponential, so only run for n <= 4.
std::size_t brute_force_count(int n) {
  std::vector<std::pair<int, int>> where;  // free cells (i,j), 1 <= i <= j <= n-1
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) where.emplace_back(i, j);
  std::vector<int> t(static_cast<std::size_t>(n * n), 0);
  auto cell = [&](int i, int j) -> int& { return t[static_cast<std::size_t>(i * n + j)]; };
  for (int k = 0; k < n; ++k) {
    cell(0, k) = k;
    cell(k, 0) = k;
  }
  auto valid = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y + 1 < n; ++y)
        if (cell(x, y) > cell(x, y + 1)) return false;  // monotone
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (cell(cell(x, y), z) != cell(x, cell(y, z))) return false;
    return true;
  };
  std::size_t count = 0;
  const std::size_t m = where.size();
  std::vector<int> choice(m, 0);
  while (true) {
    for (std::size_t k = 0; k < m; ++k) {
      cell(where[k].first, where[k].second) = choice[k];
      cell(where[k].second, where[k].first) = choice[k];
    }
    if (valid()) ++count;
    std::size_t k = 0;
    while (k < m && ++choice[k] == n) choice[k++] = 0;
    if (k == m) break;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration counts match the unpruned oracle") {
  for (int n = 2; n <= 4; ++n)
    CHECK(enumerate_finite_tconorms(n).size() == brute_force_count(n));
}

TEST_CASE("known counts on small chains") {
  CHECK(enumerate_finite_tconorms(2).size() == 1);
  CHECK(enumerate_finite_tconorms(3).size() == 2);
  CHECK(enumerate_finite_tconorms(4).size() == 6);
  CHECK(finite_census(5).total == 22);
}

TEST_CASE("every enumerated table is a t-conorm") {
  for (const FiniteTconorm& S : enumerate_finite_tconorms(4)) {
    for (int x = 0; x < 4; ++x) {
      CHECK(S.at(x, 0) == x);  // neutral
      CHECK(S.at(x, 3) == 3);  // absorbing top
      for (int y = 0; y < 4; ++y) {
        CHECK(S.at(x, y) == S.at(y, x));
        CHECK(S.at(x, y) >= std::max(x, y));
      }
    }
  }
}

TEST_CASE("no finite chain admits a strictly monotone table") {
  for (int n = 2; n <= 5; ++n) CHECK(finite_census(n).strictly_monotone_count == 0);
}

TEST_CASE("chain size limits") {
  CHECK_THROWS_AS(enumerate_finite_tconorms(1), SizeLimit);
  CHECK_THROWS_AS(enumerate_finite_tconorms(7), SizeLimit);
}
