#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "logres/groebner.hpp"
#include "logres/monoid.hpp"

namespace logres {

// Character of the chart stabilizer: weights mod `modulus` on every chart
// variable (ordinary first, then monomial).
struct OrbifoldCharacter {
  long long modulus = 1;
  std::vector<long long> weights;
  bool operator==(const OrbifoldCharacter&) const = default;
};

// Functional on the root coordinate lattice Z^N, read mod `modulus`.
struct RootCharacter {
  long long modulus = 1;
  IVec functional;
};

// Affine toroidal orbifold chart: k[ordinary, monoid] / toric relations.
//
// Each variable also records its exponent vector as a Laurent monomial in
// the coordinates of the root chart ("root space", dimension root_dim). The
// monoid lattice basis lives in the same space. Blowups, Kummer covers and
// stabilizer characters are computed from these vectors.
struct Chart {
  std::string id = "0";
  std::vector<std::string> ordinary;
  AffineMonoid monoid;
  std::vector<Polynomial> relations;
  std::vector<OrbifoldCharacter> orbifold;
  // Smooth boundary hypersurfaces adjoined by divisorial steps.
  std::vector<Polynomial> divisors;
  std::string parent;
  std::string step;

  int root_dim = 0;
  std::vector<QVec> ordinary_q;
  std::vector<QVec> lattice;
  std::vector<RootCharacter> root_characters;

  int num_ordinary() const { return static_cast<int>(ordinary.size()); }
  int num_monomial() const { return static_cast<int>(monoid.gens.size()); }
  int nvars() const { return num_ordinary() + num_monomial(); }
  std::vector<std::string> names() const;
  int index_of(const std::string& name) const;
  bool is_ordinary(int var) const { return var < num_ordinary(); }

  QVec monomial_q(const IVec& lattice_elem) const;
  QVec var_q(int var) const;
  // Lattice coordinates of a root-space vector; false if it is not a lattice point.
  bool lattice_coords(const QVec& q, IVec& out) const;
  // Monomial with the given lattice element; throws if outside the monoid.
  Polynomial monomial(const IVec& lattice_elem) const;
  // Lattice element of a pure monomial in the monomial variables.
  IVec degree_of(const Exponents& e) const;
  Polynomial variable(int var) const { return Polynomial::variable(nvars(), var); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }
};

// Root chart from user data. The monoid generators must be the Hilbert basis
// of the cone they span. Characters give weights on all variables.
Chart make_chart(const std::vector<std::string>& ordinary, int rank,
                 const std::vector<std::string>& monomial_names, const std::vector<IVec>& gens,
                 const std::vector<OrbifoldCharacter>& characters = {});

// Input for assembling a chart from root-space data.
struct ChartLayout {
  std::string id;
  int root_dim = 0;
  std::vector<std::string> ordinary;
  std::vector<QVec> ordinary_q;
  std::vector<QVec> lattice_gens;
  std::vector<QVec> cone_gens;
  // Names kept when a Hilbert basis element has this root vector, in preferred order.
  std::vector<std::pair<QVec, std::string>> known;
  std::set<std::string> avoid;
  std::vector<RootCharacter> root_characters;
};

// Lattice basis, Hilbert basis, names, toric relations and stabilizer characters.
// Throws NotSharp if the cone contains a line.
Chart assemble_chart(const ChartLayout& layout);

// Fresh names: monomials cycle v, w, s, t, v2, ...; ordinary cycle y, z, y2, ...
std::string fresh_name(bool monomial, std::set<std::string>& used);

std::vector<OrbifoldCharacter> compute_orbifold(const Chart& C);
bool is_semi_invariant(const Chart& C, const Polynomial& f);

// Ideals on a chart are generator lists; the relations are always adjoined.
Ideal chart_ideal(const Chart& C, const std::vector<Polynomial>& gens);
// Reduced basis of I + relations with the relation ideal's own elements dropped.
std::vector<Polynomial> canonical(const Chart& C, const std::vector<Polynomial>& gens);
bool in_relations(const Chart& C, const Polynomial& f);
bool chart_contains(const Chart& C, const std::vector<Polynomial>& I, const Polynomial& f);
bool chart_contains(const Chart& C, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J);
bool ideals_equal(const Chart& C, const std::vector<Polynomial>& A, const std::vector<Polynomial>& B);
bool is_unit_ideal(const Chart& C, const std::vector<Polynomial>& I);
bool is_zero_ideal(const Chart& C, const std::vector<Polynomial>& I);
std::string ideal_to_string(const Chart& C, const std::vector<Polynomial>& I);
std::vector<Polynomial> parse_ideal(const Chart& C, const std::vector<std::string>& gens);

struct LogDerivation {
  enum class Kind { Ordinary, Monomial };
  Kind kind = Kind::Ordinary;
  int index = 0;  // ordinary variable
  IVec dual;      // functional on the monoid lattice
};

std::vector<LogDerivation> derivation_basis(const Chart& C);
Polynomial apply_derivation(const Chart& C, const LogDerivation& D, const Polynomial& f);
// D^{<=order}(I), canonical.
std::vector<Polynomial> derive_ideal(const Chart& C, const std::vector<Polynomial>& I, int order);

// Chart with the ordinary variable removed and the ideal with it set to zero.
std::pair<Chart, std::vector<Polynomial>> restrict_to_hypersurface(const Chart& C, int var,
                                                                   const std::vector<Polynomial>& I);
// Images of the automorphism x -> x - h (h free of x).
std::vector<Polynomial> substitution_images(const Chart& C, int var, const Polynomial& h);
std::vector<Polynomial> substitute_coordinate(const Chart& C, int var, const Polynomial& h,
                                              const std::vector<Polynomial>& I);
// Appends an ordinary variable (default name from the ordinary cycle) and adds it to I.
std::pair<Chart, std::vector<Polynomial>> add_free_variable(const Chart& C, const std::vector<Polynomial>& I,
                                                            const std::string& name = "");

struct CoverPullback {
  Chart chart;
  std::vector<Polynomial> ideal;
  std::vector<Polynomial> images;  // old variable -> polynomial on the cover
};

// Kummer cover adjoining m^{1/d} for lattice elements m of the monoid.
CoverPullback kummer_cover_pullback(const Chart& C, const std::vector<IVec>& elements, int d,
                                    const std::vector<Polynomial>& I);

std::vector<Polynomial> map_ideal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& images,
                                  int target_nvars);

}  // namespace logres
