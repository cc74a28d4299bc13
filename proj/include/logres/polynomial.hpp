#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace logres {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponents = std::vector<int>;

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// Monomial orders on exponent vectors. Degrevlex is the chart order;
// Elimination(k) compares the first k variables by degrevlex first and
// is used internally for intersections.
struct MonomialOrder {
  enum class Kind { Degrevlex, Elimination };
  Kind kind = Kind::Degrevlex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder elimination(int k) { return {Kind::Elimination, k}; }

  // <0 if a<b, 0 if equal, >0 if a>b
  int compare(const Exponents& a, const Exponents& b) const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

int degrevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi);

bool divides(const Exponents& a, const Exponents& b);
Exponents exp_lcm(const Exponents& a, const Exponents& b);
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);
int exp_degree(const Exponents& a);

struct Term {
  Rational coeff;
  Exponents exps;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);
  static Polynomial variable(int nvars, int i);
  // Terms in arbitrary order; combined and sorted under ord.
  static Polynomial from_terms(int nvars, std::vector<Term> terms,
                               const MonomialOrder& ord = MonomialOrder::degrevlex());

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int var) const;

  // Re-sort under another order (terms are kept sorted under the order they were built with).
  Polynomial reordered(const MonomialOrder& ord) const;
  const MonomialOrder& order() const { return order_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Exponents& e, const Rational& c) const;
  Polynomial pow(int n) const;
  Polynomial make_monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // Total order on polynomials used to canonicalize lists.
  static int compare(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(int var) const;
  // Substitute each variable by a polynomial in a (possibly different) ring.
  Polynomial substitute(const std::vector<Polynomial>& images, int target_nvars) const;
  // Re-index into a ring with target_nvars variables; map[i] = new index or -1 (must have zero exponent).
  Polynomial remap(const std::vector<int>& map, int target_nvars) const;
  // Set variable var to zero.
  Polynomial set_zero(int var) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  int nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

// Exact division f / g in the polynomial ring; throws if not exact.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);
bool try_exact_divide(const Polynomial& f, const Polynomial& g, Polynomial& q);

}  // namespace logres
