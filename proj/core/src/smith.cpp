#include "pmqkit/smith.hpp"

#include <algorithm>

namespace pmqkit {

namespace {

// round-to-nearest quotient keeps entries small during reduction
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

}  // namespace

std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<mpz_class> diagonal;
  int t = 0;
  while (t < rows && t < cols) {
    // pick the nonzero entry of smallest absolute value as pivot
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = nearest_quotient(m[i][t], m[t][t]);
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder becomes the new, smaller pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = nearest_quotient(m[t][j], m[t][t]);
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              clean = false;
            }
      }
    }
    if (m[t][t] < 0)
      for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
    diagonal.push_back(m[t][t]);
    ++t;
  }
  return diagonal;
}

AbelianInvariants cokernel_invariants(const std::vector<std::vector<mpz_class>>& rows,
                                      int cols) {
  AbelianInvariants out;
  if (rows.empty()) {
    out.free_rank = cols;
    return out;
  }
  std::vector<mpz_class> factors = smith_invariant_factors(rows);
  out.free_rank = cols - static_cast<int>(factors.size());
  for (const mpz_class& d : factors)
    if (d > 1) out.torsion.push_back(d.get_si());
  return out;
}

}  // namespace pmqkit
