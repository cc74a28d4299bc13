#pragma once

#include <memory>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

// Reduced Groebner basis (monic, sorted increasing by leading term).
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord = MonomialOrder::degrevlex());

// Remainder of f modulo a Groebner basis (full reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord = MonomialOrder::degrevlex());

// Ideal in a polynomial ring with nvars variables. The reduced basis is
// computed on first use and cached.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(int nvars) : nvars_(nvars) {}
  Ideal(int nvars, std::vector<Polynomial> gens);

  static Ideal unit(int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& basis() const;

  bool is_zero() const { return basis().empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool same_as(const Ideal& other) const { return contains(other) && other.contains(*this); }

 private:
  int nvars_ = 0;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);
// {f : f*m in I}; I should already contain any ring relations.
Ideal ideal_colon(const Ideal& I, const Polynomial& m);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal saturate_by_element(const Ideal& I, const Polynomial& m);
Polynomial partial_derivative(const Polynomial& f, int var);

// Drop generators that are zero or redundant by divisibility of monomials;
// keeps order stable. Cheap pre-pass before Groebner computations.
std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens);

}  // namespace logres
