#include "complexmath.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace pitosc {

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxHermiteDegree) {
    throw DegreeLimitError("hermite degree " + std::to_string(degree) +
                           " outside supported range [0, " +
                           std::to_string(kMaxHermiteDegree) + "]");
  }
}

template <class T>
T hermite_recurrence(T z, int degree) {
  T prev{1.0};
  if (degree == 0) return prev;
  T cur = 2.0 * z;
  for (int k = 1; k < degree; ++k) {
    T next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

HermiteSequence hermite_eval(Complex z, int max_degree) {
  check_degree(max_degree);
  HermiteSequence values(static_cast<std::size_t>(max_degree) + 1);
  values[0] = Complex(1.0, 0.0);
  if (max_degree == 0) return values;
  values[1] = 2.0 * z;
  for (int k = 1; k < max_degree; ++k) {
    values[k + 1] = 2.0 * z * values[k] - 2.0 * static_cast<double>(k) * values[k - 1];
  }
  return values;
}

Complex hermite_value(Complex z, int degree) {
  check_degree(degree);
  return hermite_recurrence(z, degree);
}

double hermite_value(double x, int degree) {
  check_degree(degree);
  return hermite_recurrence(x, degree);
}

std::pair<Complex, Complex> hermite_parity_pair(Complex z, int degree) {
  const Complex left = hermite_value(-z, degree);
  const Complex right = (degree % 2 == 0 ? 1.0 : -1.0) * hermite_value(z, degree);
  return {left, right};
}

double log_factorial(int n) {
  if (n < 0 || n > kMaxFactorialArg) {
    throw std::invalid_argument("log_factorial argument " + std::to_string(n) +
                                " outside supported range [0, " +
                                std::to_string(kMaxFactorialArg) + "]");
  }
  double sum = 0.0;
  for (int k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
  return sum;
}

double sqrt_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("sqrt_binomial requires 0 <= k <= n");
  }
  return std::exp(0.5 * (log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

}  // namespace pitosc
