#ifndef BSA_FINITE_HPP
#define BSA_FINITE_HPP

#include <cstddef>
#include <vector>

namespace bsa {

/// A commutative, associative, monotone operation table on the chain
/// {0, 1, ..., n-1} with neutral element 0 (and hence absorbing top n-1).
struct FiniteTconorm {
  int n = 0;
  std::vector<int> table;  // row-major n*n, symmetric

  int at(int i, int j) const { return table[static_cast<std::size_t>(i * n + j)]; }
};

/// Strict monotonicity in the usual sense transplanted to the chain:
/// y < z implies S(x,y) < S(x,z) for every x. Impossible once the top
/// element absorbs, so the census always reports zero of these.
bool strictly_monotone(const FiniteTconorm& S);

struct FiniteCensus {
  int n = 0;
  std::size_t total = 0;
  std::size_t strictly_monotone_count = 0;
};

/// Backtracking enumeration of every t-conorm table on a chain of size n.
/// Throws SizeLimit outside 2 <= n <= 6.
std::vector<FiniteTconorm> enumerate_finite_tconorms(int n);

FiniteCensus finite_census(int n);

}  // namespace bsa

#endif
