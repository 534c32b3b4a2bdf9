#include "oracles.hpp"

#include <functional>
#include <map>

namespace flipcalc::testkit {

namespace {

hodge::HodgeDiamond eigenspace(const hodge::HodgeDiamond& a, int eigenvalue) {
  struct Basis {
    int p, q;
  };
  std::vector<Basis> basis;
  for (int p = 0; p <= a.dim(); ++p) {
    for (int q = 0; q <= a.dim(); ++q) {
      for (long i = 0; i < a.at(p, q).get_si(); ++i) basis.push_back({p, q});
    }
  }
  // Group ordered pairs of basis vectors by total bidegree.
  std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, std::size_t>>> blocks;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      blocks[{basis[i].p + basis[j].p, basis[i].q + basis[j].q}].emplace_back(i, j);
    }
  }
  hodge::HodgeDiamond out(2 * a.dim());
  for (const auto& [bideg, pairs] : blocks) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = k;
    const std::size_t n = pairs.size();
    // Column k holds (swap - eigenvalue) applied to basis vector k.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
      const auto [i, j] = pairs[k];
      const int di = basis[i].p + basis[i].q;
      const int dj = basis[j].p + basis[j].q;
      const int sign = (di * dj) % 2 == 0 ? 1 : -1;
      m[index.at({j, i})][k] += sign;
      m[k][k] -= eigenvalue;
    }
    const long kernel = static_cast<long>(n) - exact_rank(m);
    out.set(bideg.first, bideg.second, kernel);
  }
  return out;
}

}  // namespace

long exact_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  long rank = 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

hodge::HodgeDiamond brute_force_sym2(const hodge::HodgeDiamond& a) { return eigenspace(a, 1); }

hodge::HodgeDiamond brute_force_alt2(const hodge::HodgeDiamond& a) { return eigenspace(a, -1); }

std::vector<std::vector<long>> brute_force_line_splittings(long n, long lo) {
  std::vector<std::vector<long>> out;
  const long len = n - 1;
  const long target = n - 3;
  std::vector<long> cur;
  // Nonincreasing sequences; prune when the remaining slots cannot reach the target.
  std::function<void(long, long)> rec = [&](long max_value, long sum) {
    const long left = len - static_cast<long>(cur.size());
    if (left == 0) {
      if (sum == target) out.emplace_back(cur.rbegin(), cur.rend());
      return;
    }
    for (long v = max_value; v >= lo; --v) {
      if (sum + v * left < target) break;
      if (sum + v + (left - 1) * lo > target) continue;
      cur.push_back(v);
      rec(v, sum + v);
      cur.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace flipcalc::testkit
