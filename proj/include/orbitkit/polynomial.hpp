#pragma once

#include "orbitkit/rational.hpp"

#include <map>
#include <vector>
#include <cstddef>
#include <cmath>
#include <stdexcept>

namespace orbitkit {

// Multivariate polynomial with exact rational coefficients over a fixed
// number of variables. Monomials are exponent vectors; zero coefficients are
// never stored.
class Poly {
public:
  using Monomial = std::vector<int>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  std::vector<std::size_t> variables_present() const {
    std::vector<bool> seen(nvars_, false);
    for (const auto& [m, c] : terms_)
      for (std::size_t v = 0; v < nvars_; ++v)
        if (m[v] > 0) seen[v] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (seen[v]) out.push_back(v);
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term_(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term_(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t v = 0; v < a.nvars_; ++v) m[v] = ma[v] + mb[v];
        r.add_term_(m, ca * cb);
      }
    return r;
  }
  Poly operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, q] : terms_) r.terms_[m] = q * c;
    return r;
  }
  Poly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Replace one variable by a rational value.
  Poly substitute(std::size_t var, const Rational& value) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      for (int k = 0; k < m[var]; ++k) coeff *= value;
      Monomial m2 = m;
      m2[var] = 0;
      r.add_term_(m2, coeff);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::evaluate: arity mismatch");
    Rational sum;
    for (const auto& [m, c] : terms_) {
      Rational prod = c;
      for (std::size_t v = 0; v < nvars_; ++v)
        for (int k = 0; k < m[v]; ++k) prod *= point[v];
      sum += prod;
    }
    return sum;
  }

  double evaluate(const std::vector<double>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::evaluate: arity mismatch");
    double sum = 0;
    for (const auto& [m, c] : terms_) {
      double prod = c.to_double();
      for (std::size_t v = 0; v < nvars_; ++v)
        for (int k = 0; k < m[v]; ++k) prod *= point[v];
      sum += prod;
    }
    return sum;
  }

  Poly derivative(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial m2 = m;
      m2[var] -= 1;
      r.add_term_(m2, c * Rational(m[var]));
    }
    return r;
  }

  // Writes this = A*var + B with A, B free of var; fails when degree > 1.
  bool split_affine_in(std::size_t var, Poly& a_out, Poly& b_out) const {
    if (degree_in(var) > 1) return false;
    a_out = Poly(nvars_);
    b_out = Poly(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial m2 = m;
      if (m[var] == 1) {
        m2[var] = 0;
        a_out.add_term_(m2, c);
      } else {
        b_out.add_term_(m2, c);
      }
    }
    return true;
  }

private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;

  void check_(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  }
  void add_term_(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
};

} // namespace orbitkit
