#pragma once

#include <string>
#include <vector>

#include "logres/groebner.hpp"
#include "logres/lattice.hpp"

namespace logres {

// Rational polyhedral cone in Z^r given by generators; facets are inward
// primitive normals. Only full-dimensional cones are supported.
struct Cone {
  int dim = 0;
  std::vector<IVec> rays;
  std::vector<IVec> facets;

  static Cone from_generators(int dim, const std::vector<IVec>& gens);
  bool contains(const IVec& v) const;
  bool contains(const QVec& v) const;
  bool is_pointed() const;
};

// Saturated affine monoid cone ∩ Z^rank with named generators (its Hilbert basis).
struct AffineMonoid {
  int rank = 0;
  std::vector<std::string> names;
  std::vector<IVec> gens;

  bool contains(const IVec& v) const;
  Cone cone() const;
  // Nonnegative decomposition into generators; false if none exists.
  bool decompose(const IVec& v, std::vector<int>& exps) const;
};

struct MonoidIdeal {
  std::vector<IVec> gens;
  bool operator==(const MonoidIdeal& o) const { return gens == o.gens; }
};

// Hilbert basis of cone(gens) ∩ Z^dim, sorted graded-lex. Throws NotSharp.
std::vector<IVec> hilbert_basis(int dim, const std::vector<IVec>& gens);

bool monoid_ideal_contains(const AffineMonoid& M, const MonoidIdeal& J, const IVec& v);
// Minimal generators under divisibility in M, sorted graded-lex.
MonoidIdeal minimalize(const AffineMonoid& M, std::vector<IVec> elems);
MonoidIdeal monoid_saturate_ideal(const AffineMonoid& M, const MonoidIdeal& J);
MonoidIdeal monoid_ideal_power(const AffineMonoid& M, const MonoidIdeal& J, int n);

// Deck character: values mod `modulus` of a functional on the refined lattice.
struct LatticeCharacter {
  long long modulus = 1;
  IVec functional;
  long long value(const IVec& v) const;
};

struct KummerRefinement {
  AffineMonoid monoid;
  // old lattice coordinates -> new lattice coordinates (integral, rank x rank, rows = images of e_i)
  std::vector<IVec> embedding;
  std::vector<LatticeCharacter> characters;
  // Basis of the refined lattice, rows in old coordinates scaled by `scale`.
  std::vector<IVec> lattice;
  int scale = 1;
  IVec map(const IVec& old) const;
};

// Refine the lattice by elements/d and saturate; one cyclic factor per
// nontrivial invariant factor of the quotient.
KummerRefinement kummer_refine(const AffineMonoid& M, const std::vector<IVec>& elements, int d);

// Toric ideal of the generator configuration in a ring with `offset` leading
// variables (ordinary ones) followed by one variable per generator.
std::vector<Polynomial> present_monoid_algebra(const AffineMonoid& M, int offset = 0);

// graded-lex comparison of lattice vectors (coordinate sum, then lexicographic descending)
bool gradlex_less(const IVec& a, const IVec& b);

}  // namespace logres
