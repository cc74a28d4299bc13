#include "logres/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "logres/errors.hpp"

namespace logres {

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec ivec_scale(const IVec& a, long long k) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IVec& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

QVec to_q(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (long long x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec qvec_scale(const QVec& a, const Rational& k) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IVec to_i(const QVec& v) {
  IVec r;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InvalidArgument("vector is not integral");
    r.push_back(x.get_num().get_si());
  }
  return r;
}

IVec clear_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IVec r;
  for (const auto& x : v) {
    Rational y = x * Rational(l);
    y.canonicalize();
    r.push_back(y.get_num().get_si());
  }
  long long g = 0;
  for (long long x : r) g = std::gcd(g, std::llabs(x));
  if (g > 1)
    for (auto& x : r) x /= g;
  return r;
}

namespace {

// Gaussian elimination to row echelon form; returns rank.
int echelon(std::vector<QVec>& m, std::vector<int>* pivots = nullptr) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int rank_q(const std::vector<QVec>& rows) {
  std::vector<QVec> m = rows;
  return echelon(m);
}

bool solve_in_span(const std::vector<QVec>& basis, const QVec& v, QVec& coeffs) {
  // Columns are basis vectors; augmented with v.
  std::size_t n = v.size(), k = basis.size();
  std::vector<QVec> m(n, QVec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  std::vector<int> piv;
  echelon(m, &piv);
  coeffs.assign(k, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(k)) return false;
    coeffs[piv[r]] = m[r][k] / m[r][piv[r]];
  }
  for (std::size_t r = piv.size(); r < n; ++r)
    if (m[r][k] != 0) return false;
  return true;
}

std::vector<IVec> lattice_basis(const std::vector<IVec>& gens) {
  std::vector<IVec> m;
  for (const auto& g : gens)
    if (!is_zero(g)) m.push_back(g);
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  std::vector<IVec> out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    // Euclid on column c among rows >= row
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || std::llabs(m[i][c]) < std::llabs(m[best][c])))
          best = i;
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        long long q = m[i][c] / m[row][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0) m[row] = ivec_scale(m[row], -1);
    // reduce entries above
    for (std::size_t i = 0; i < row; ++i) {
      long long q = m[i][c] / m[row][c];
      if (m[i][c] - q * m[row][c] < 0) --q;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
    }
    ++row;
  }
  for (std::size_t i = 0; i < row; ++i) out.push_back(m[i]);
  return out;
}

SmithData smith_characters(const std::vector<IVec>& S) {
  std::vector<IVec> A = S;
  std::size_t rows = A.size();
  std::size_t k = rows ? A[0].size() : 0;
  // Q accumulates column operations (k x k), starting at identity.
  std::vector<IVec> Q(k, IVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) Q[i][i] = 1;
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : A) std::swap(r[a], r[b]);
    for (auto& r : Q) std::swap(r[a], r[b]);
  };
  auto col_addmul = [&](std::size_t dst, std::size_t src, long long f) {
    for (auto& r : A) r[dst] += f * r[src];
    for (auto& r : Q) r[dst] += f * r[src];
  };
  std::size_t t = 0;
  std::vector<long long> diag;
  while (t < rows && t < k) {
    // pivot: smallest nonzero |entry| in the remaining block
    std::size_t pr = rows, pc = k;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (A[i][j] != 0 && (pr == rows || std::llabs(A[i][j]) < std::llabs(A[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(A[t], A[pr]);
    col_swap(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = A[i][t] / A[t][t];
        if (q) for (std::size_t j = 0; j < k; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        long long q = A[t][j] / A[t][t];
        if (q) col_addmul(j, t, -q);
        if (A[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility condition
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < k && clean; ++j)
            if (A[i][j] % A[t][t] != 0) {
              for (std::size_t jj = 0; jj < k; ++jj) A[t][jj] += A[i][jj];
              clean = false;
            }
      }
    }
    diag.push_back(std::llabs(A[t][t]));
    ++t;
  }
  while (diag.size() < k) diag.push_back(0);
  SmithData out;
  out.diag = diag;
  out.U.assign(k, IVec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.U[i][j] = Q[j][i];
  return out;
}

bool hyperplane_normal(const std::vector<IVec>& vecs, int dim, IVec& normal) {
  std::vector<QVec> m;
  for (const auto& v : vecs) m.push_back(to_q(v));
  std::vector<int> piv;
  int r = echelon(m, &piv);
  if (r != dim - 1) return false;
  int free_col = -1;
  for (int c = 0, p = 0; c < dim; ++c) {
    if (p < static_cast<int>(piv.size()) && piv[p] == c) {
      ++p;
    } else {
      free_col = c;
      break;
    }
  }
  QVec n(dim, Rational(0));
  n[free_col] = 1;
  for (int i = 0; i < r; ++i) n[piv[i]] = -m[i][free_col] / m[i][piv[i]];
  normal = clear_denominators(n);
  return true;
}

}  // namespace logres
