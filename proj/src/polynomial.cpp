#include "logres/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "logres/errors.hpp"

namespace logres {

std::string rational_to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

int degrevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind == Kind::Degrevlex) return degrevlex_compare(a, b, 0, a.size());
  std::size_t k = static_cast<std::size_t>(block);
  int c = degrevlex_compare(a, b, 0, k);
  if (c != 0) return c;
  return degrevlex_compare(a, b, k, a.size());
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

int exp_degree(const Exponents& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({c, Exponents(nvars, 0)});
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.push_back({c, e});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms, const MonomialOrder& ord) {
  Polynomial p(nvars);
  p.order_ = ord;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  const MonomialOrder ord = order_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.exps, b.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_[0].exps) == 0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, exp_degree(t.exps));
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

Polynomial Polynomial::reordered(const MonomialOrder& ord) const {
  if (ord == order_) return *this;
  return from_terms(nvars_, terms_, ord);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const MonomialOrder& ord = order_;
  const Polynomial& b = (o.order_ == ord) ? o : o.reordered(ord);
  Polynomial r(nvars_);
  r.order_ = ord;
  r.terms_.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size()) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      int c = ord.compare(terms_[i].exps, b.terms_[j].exps);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        Rational s = terms_[i].coeff + b.terms_[j].coeff;
        if (s != 0) r.terms_.push_back({s, terms_[i].exps});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  r.order_ = order_;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const Rational& c) const {
  Polynomial r(nvars_);
  r.order_ = order_;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, exp_add(t.exps, e)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.coeff * b.coeff, exp_add(a.exps, b.exps)});
  return from_terms(nvars_, std::move(acc), order_);
}

Polynomial Polynomial::pow(int n) const {
  Polynomial result = constant(nvars_, 1).reordered(order_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::make_monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_.front().coeff);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_) return false;
  const Polynomial& b = (o.order_ == order_) ? o : o.reordered(order_);
  if (terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != b.terms_[i].exps || terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.order_.compare(a.terms_[i].exps, b.terms_[i].exps);
    if (c != 0) return c;
    int cc = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (cc != 0) return cc < 0 ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[var];
    d.exps[var] -= 1;
    acc.push_back(std::move(d));
  }
  return from_terms(nvars_, std::move(acc), order_);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, int target_nvars) const {
  // cache powers per variable
  std::vector<std::map<int, Polynomial>> powers(images.size());
  auto power_of = [&](int v, int k) -> const Polynomial& {
    auto it = powers[v].find(k);
    if (it != powers[v].end()) return it->second;
    return powers[v].emplace(k, images[v].pow(k)).first->second;
  };
  Polynomial r(target_nvars);
  for (const auto& t : terms_) {
    Polynomial m = constant(target_nvars, t.coeff);
    for (int v = 0; v < nvars_; ++v)
      if (t.exps[v] > 0) m = m * power_of(v, t.exps[v]);
    r = r + m;
  }
  return r;
}

Polynomial Polynomial::remap(const std::vector<int>& map, int target_nvars) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target_nvars, 0);
    for (int v = 0; v < nvars_; ++v) {
      if (t.exps[v] == 0) continue;
      if (map[v] < 0) throw InvalidArgument("remap drops a variable that occurs");
      e[map[v]] += t.exps[v];
    }
    acc.push_back({t.coeff, std::move(e)});
  }
  return from_terms(target_nvars, std::move(acc));
}

Polynomial Polynomial::set_zero(int var) const {
  std::vector<Term> acc;
  for (const auto& t : terms_)
    if (t.exps[var] == 0) acc.push_back(t);
  Polynomial r(nvars_);
  r.order_ = order_;
  r.terms_ = std::move(acc);
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_vars = exp_degree(t.exps) > 0;
    bool wrote = false;
    if (!has_vars || c != 1) {
      os << rational_to_string(c);
      wrote = true;
    }
    for (int v = 0; v < nvars_; ++v) {
      if (t.exps[v] == 0) continue;
      if (wrote) os << "*";
      os << names[v];
      if (t.exps[v] > 1) os << "^" << t.exps[v];
      wrote = true;
    }
  }
  return os.str();
}

bool try_exact_divide(const Polynomial& f, const Polynomial& g, Polynomial& q) {
  if (g.is_zero()) return false;
  const MonomialOrder ord = MonomialOrder::degrevlex();
  Polynomial rem = f.reordered(ord);
  Polynomial gg = g.reordered(ord);
  Polynomial quot(f.nvars());
  const Term& lg = gg.leading();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!divides(lg.exps, lt.exps)) return false;
    Exponents e = exp_sub(lt.exps, lg.exps);
    Rational c = lt.coeff / lg.coeff;
    quot = quot + Polynomial::monomial(e, c);
    rem = rem - gg.times_monomial(e, c);
  }
  q = quot;
  return true;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  Polynomial q;
  if (!try_exact_divide(f, g, q)) throw NotDivisible("polynomial division is not exact");
  return q;
}

}  // namespace logres
