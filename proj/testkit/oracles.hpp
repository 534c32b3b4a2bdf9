#pragma once

// Slow, independent reference computations used to check the library.

#include "flipcalc/hodge.hpp"

#include <vector>

namespace flipcalc::testkit {

/// Sym^2 of a bigraded space by explicit linear algebra: builds the swap
/// x (x) y -> (-1)^{|x||y|} y (x) x on the tensor square of a basis, and in
/// each bidegree counts the +1-eigenvectors as N - rank(swap - 1).
hodge::HodgeDiamond brute_force_sym2(const hodge::HodgeDiamond& a);

/// Same construction for the -1-eigenvectors.
hodge::HodgeDiamond brute_force_alt2(const hodge::HodgeDiamond& a);

/// Rank over Q of an integer matrix by fraction-free elimination.
long exact_rank(std::vector<std::vector<Integer>> m);

/// Every nonincreasing sequence of n-1 integers in [lo, 1] with sum n-3,
/// returned sorted ascending, found by exhaustive search.
std::vector<std::vector<long>> brute_force_line_splittings(long n, long lo = -10);

}  // namespace flipcalc::testkit
