#include "bargmann/polynomial.hpp"

#include <algorithm>

#include "bargmann/errors.hpp"

namespace bargmann {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDimension) {
    throw ArgumentError("polynomial dimension must be in 1..3");
  }
}

template <typename T>
cplx evaluate_terms(const std::map<Exponents, cplx>& terms, int dim,
                    std::span<const T> x) {
  if (static_cast<int>(x.size()) != dim) {
    throw ArgumentError("polynomial evaluated at a point of the wrong dimension");
  }
  cplx sum = 0.0;
  for (const auto& [e, c] : terms) {
    cplx term = c;
    for (int k = 0; k < dim; ++k) {
      for (int j = 0; j < e[k]; ++j) term *= x[k];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Polynomial::Polynomial(int dim) : dim_(dim) { check_dim(dim); }

Polynomial Polynomial::constant(int dim, cplx c) {
  Polynomial p(dim);
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::coordinate(int dim, int k) {
  Exponents e{};
  e.at(k) = 1;
  return monomial(dim, e);
}

Polynomial Polynomial::monomial(int dim, const Exponents& e, cplx c) {
  Polynomial p(dim);
  for (int k = dim; k < kMaxDimension; ++k) {
    if (e[k] != 0) throw ArgumentError("monomial exponent beyond dimension");
  }
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::hermite_product(std::span<const int> n) {
  const int dim = static_cast<int>(n.size());
  Polynomial result = constant(dim, 1.0);
  for (int k = 0; k < dim; ++k) {
    if (n[k] < 0) throw ArgumentError("Hermite degree must be non-negative");
    const auto coeffs = hermite_coefficients(n[k]);
    Polynomial factor(dim);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      Exponents e{};
      e[k] = static_cast<int>(j);
      factor.add_term(e, coeffs[j]);
    }
    result = result * factor;
  }
  return result;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2]);
  return deg;
}

int Polynomial::degree_in(int k) const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.at(k));
  return deg;
}

cplx Polynomial::operator()(RealPoint x) const { return evaluate_terms(terms_, dim_, x); }

cplx Polynomial::operator()(ComplexPoint z) const { return evaluate_terms(terms_, dim_, z); }

Polynomial Polynomial::derivative(int k) const {
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e.at(k) == 0) continue;
    Exponents f = e;
    f[k] -= 1;
    out.add_term(f, c * static_cast<double>(e[k]));
  }
  return out;
}

Polynomial Polynomial::times_coordinate(int k) const {
  if (k < 0 || k >= dim_) throw ArgumentError("coordinate index out of range");
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[k] += 1;
    out.add_term(f, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_) throw ArgumentError("polynomial dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_) throw ArgumentError("polynomial dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(cplx c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw ArgumentError("polynomial dimension mismatch");
  Polynomial out(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (int k = 0; k < kMaxDimension; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, cplx c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

std::vector<double> hermite_coefficients(int n) {
  if (n < 0) throw ArgumentError("Hermite degree must be non-negative");
  // He_{k+1} = x He_k - k He_{k-1}
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace bargmann
