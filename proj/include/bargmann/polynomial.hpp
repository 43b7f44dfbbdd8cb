#pragma once

#include <array>
#include <map>
#include <vector>

#include "bargmann/types.hpp"

namespace bargmann {

/// Multi-index of a monomial x_1^{e_1} ... x_d^{e_d}; unused slots are 0.
using Exponents = std::array<int, kMaxDimension>;

/// Sparse multivariate polynomial with complex coefficients in d <= 3 variables.
class Polynomial {
 public:
  explicit Polynomial(int dim = 1);

  static Polynomial constant(int dim, cplx c);
  static Polynomial coordinate(int dim, int k);
  static Polynomial monomial(int dim, const Exponents& e, cplx c = 1.0);
  /// He_{n_1}(x_1) ... He_{n_d}(x_d), probabilists' normalization.
  static Polynomial hermite_product(std::span<const int> n);

  int dim() const { return dim_; }
  int degree() const;
  int degree_in(int k) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, cplx>& terms() const { return terms_; }

  cplx operator()(RealPoint x) const;
  cplx operator()(ComplexPoint z) const;

  Polynomial derivative(int k) const;
  Polynomial times_coordinate(int k) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(cplx c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, cplx c) { return a *= c; }
  friend Polynomial operator*(cplx c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Exponents& e, cplx c);

  int dim_;
  std::map<Exponents, cplx> terms_;
};

/// Monomial coefficients of He_n, lowest degree first.
std::vector<double> hermite_coefficients(int n);

}  // namespace bargmann
