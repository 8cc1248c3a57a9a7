#pragma once

#include <functional>

#include "complexmath.hpp"

namespace pitosc {

// Natural units: hbar = m = omega = 1, hence alpha = m*omega/hbar = 1 and the
// shifted coordinates are x~ = x + L/2, y~ = y + iL/2 with no alpha factors.
namespace units {
inline constexpr double hbar = 1.0;
inline constexpr double mass = 1.0;
inline constexpr double omega = 1.0;
inline constexpr double alpha = mass * omega / hbar;
}  // namespace units

inline constexpr int kMaxQuantumNumber = 24;

// One eigenstate psi_nm of the deformed oscillator; lambda is the strength of
// the complex linear term of the potential (0 recovers the Hermitian case).
struct EigenState {
  int n = 0;
  int m = 0;
  double lambda = 0.0;
};

void validate(const EigenState& state);

struct EnergyPair {
  double ex = 0.0;
  double ey = 0.0;
  double total = 0.0;
};

// V(x, y) = (L(x + iy) + x^2 + y^2)/2 in natural units.
Complex potential_cartesian(double x, double y, double lambda);

// |L r e^{i phi} + r^2| = r sqrt(r^2 + 2 L r cos(phi) + L^2), the magnitude of
// the deformed potential in units of m omega^2 / 2.
double potential_polar_magnitude(double r, double phi, double lambda);

using ComplexField = std::function<Complex(double, double)>;

// PiT transform in Cartesian form: (PiT f)(x, y) = conj(f(x, -y)).
// Pi reflects the polar angle (y -> -y) and T conjugates.
ComplexField pit_transform(ComplexField f);

// psi_nm(x, y) = H_n(x~) H_m(y~) e^{-(x~^2 + y~^2)/2} / sqrt(2^n 2^m n! m! pi).
// The second coordinate may be complex so the same routine serves the real
// plane and the contour Im(y) = -L/2, where y~ becomes real and psi real.
Complex eval_eigenstate(const EigenState& state, double x, Complex y);

// The Hermite part of psi_nm in shifted coordinates with the Gaussian weight
// stripped: psi_nm = eigenstate_hermite_factor(s, x~, y~) * e^{-(x~^2+y~^2)/2}.
// Arguments are the already-shifted (real) coordinates, which is the form
// Gauss-Hermite integration consumes on the contour.
double eigenstate_hermite_factor(const EigenState& state, double xs, double ys);

// E_x = n + 1/2, E_y = m + 1/2, E = n + m + 1; independent of lambda.
EnergyPair energy(const EigenState& state);

}  // namespace pitosc
