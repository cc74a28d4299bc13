#pragma once

#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

using IVec = std::vector<long long>;
using QVec = std::vector<Rational>;

IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_scale(const IVec& a, long long k);
long long dot(const IVec& a, const IVec& b);
bool is_zero(const IVec& a);

QVec to_q(const IVec& v);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const QVec& a, const Rational& k);
// Integral if every entry has denominator 1.
bool is_integral(const QVec& v);
IVec to_i(const QVec& v);
// Smallest positive multiple that is integral.
IVec clear_denominators(const QVec& v);

int rank_q(const std::vector<QVec>& rows);
// Solve sum_i c_i * basis[i] = v; returns false if v is not in the span.
bool solve_in_span(const std::vector<QVec>& basis, const QVec& v, QVec& coeffs);

// Row-style Hermite basis of the lattice generated by gens (zero rows dropped).
std::vector<IVec> lattice_basis(const std::vector<IVec>& gens);

// Smith form of an integer matrix S (rows generate a full-rank sublattice of Z^k):
// returns diagonal d and unimodular U with the property that the functionals
// lambda -> (U * lambda)_i mod d_i, for d_i > 1, separate Z^k / rowspan(S).
struct SmithData {
  std::vector<long long> diag;
  std::vector<IVec> U;
};
SmithData smith_characters(const std::vector<IVec>& S);

// Primitive integer normal of the hyperplane spanned by dim-1 vectors (if rank is dim-1).
bool hyperplane_normal(const std::vector<IVec>& vecs, int dim, IVec& normal);

}  // namespace logres
