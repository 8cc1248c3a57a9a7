#include "oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "errors.hpp"

namespace pitosc {

void validate(const EigenState& state) {
  if (state.n < 0 || state.n > kMaxQuantumNumber || state.m < 0 ||
      state.m > kMaxQuantumNumber) {
    throw std::invalid_argument("quantum numbers (" + std::to_string(state.n) +
                                ", " + std::to_string(state.m) +
                                ") outside supported range [0, " +
                                std::to_string(kMaxQuantumNumber) + "]");
  }
  if (!std::isfinite(state.lambda) || state.lambda < 0.0) {
    throw std::invalid_argument("lambda must be finite and >= 0");
  }
}

Complex potential_cartesian(double x, double y, double lambda) {
  return 0.5 * Complex(lambda * x + x * x + y * y, lambda * y);
}

double potential_polar_magnitude(double r, double phi, double lambda) {
  if (!(r > 0.0)) {
    throw std::domain_error("potential_polar_magnitude requires r > 0");
  }
  return r * std::sqrt(r * r + 2.0 * lambda * r * std::cos(phi) + lambda * lambda);
}

ComplexField pit_transform(ComplexField f) {
  return [f = std::move(f)](double x, double y) { return std::conj(f(x, -y)); };
}

namespace {

// 1/sqrt(2^n 2^m n! m! pi), assembled in log space and exponentiated once.
double inverse_norm(int n, int m) {
  const double log_norm = 0.5 * ((n + m) * std::numbers::ln2 +
                                 log_factorial(n) + log_factorial(m) +
                                 std::log(std::numbers::pi));
  return std::exp(-log_norm);
}

}  // namespace

Complex eval_eigenstate(const EigenState& state, double x, Complex y) {
  validate(state);
  const double xs = x + 0.5 * state.lambda;
  const Complex ys = y + Complex(0.0, 0.5 * state.lambda);
  const Complex hx = Complex(hermite_value(xs, state.n), 0.0);
  const Complex hy = hermite_value(ys, state.m);
  const Complex gauss = std::exp(-0.5 * (Complex(xs * xs, 0.0) + ys * ys));
  return hx * hy * gauss * inverse_norm(state.n, state.m);
}

double eigenstate_hermite_factor(const EigenState& state, double xs, double ys) {
  validate(state);
  return hermite_value(xs, state.n) * hermite_value(ys, state.m) *
         inverse_norm(state.n, state.m);
}

EnergyPair energy(const EigenState& state) {
  validate(state);
  EnergyPair e;
  e.ex = state.n + 0.5;
  e.ey = state.m + 0.5;
  e.total = e.ex + e.ey;
  return e;
}

}  // namespace pitosc
