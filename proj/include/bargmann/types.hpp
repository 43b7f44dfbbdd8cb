#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace bargmann {

using cplx = std::complex<double>;

/// A point of R^d.
using RealPoint = std::span<const double>;
/// A point of C^d.
using ComplexPoint = std::span<const cplx>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMaxDimension = 3;

/// z_1^2 + ... + z_d^2. This is the complex square used by the transform
/// kernels, NOT the modulus |z|^2.
inline cplx complex_square(ComplexPoint z) {
  cplx s = 0.0;
  for (const cplx& zk : z) s += zk * zk;
  return s;
}

inline double modulus_square(ComplexPoint z) {
  double s = 0.0;
  for (const cplx& zk : z) s += std::norm(zk);
  return s;
}

inline double norm_square(RealPoint x) {
  double s = 0.0;
  for (double xk : x) s += xk * xk;
  return s;
}

/// Splits x + iy into coordinates (x_1..x_d, y_1..y_d).
inline std::vector<double> to_real_coordinates(ComplexPoint z) {
  std::vector<double> out(2 * z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    out[k] = z[k].real();
    out[k + z.size()] = z[k].imag();
  }
  return out;
}

/// Inverse of to_real_coordinates; coords.size() must be even.
inline std::vector<cplx> from_real_coordinates(std::span<const double> coords) {
  const std::size_t d = coords.size() / 2;
  std::vector<cplx> z(d);
  for (std::size_t k = 0; k < d; ++k) z[k] = cplx(coords[k], coords[k + d]);
  return z;
}

/// Conjugate exponent p' with 1/p + 1/p' = 1.
inline double conjugate_exponent(double p) { return p / (p - 1.0); }

}  // namespace bargmann
