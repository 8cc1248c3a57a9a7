#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace pitosc {

using Complex = std::complex<double>;

// values[k] = H_k(z) for one fixed argument z; values[0] is always 1.
using HermiteSequence = std::vector<Complex>;

// Coefficients of H_64 already reach ~1e56; beyond that the recurrence
// overflows double for moderate |z|.
inline constexpr int kMaxHermiteDegree = 64;

// 170! is the largest factorial representable in double.
inline constexpr int kMaxFactorialArg = 170;

// Physicists' Hermite polynomials by upward recurrence,
//   H_0 = 1,  H_1 = 2z,  H_{k+1}(z) = 2z H_k(z) - 2k H_{k-1}(z),
// orthogonal under the weight e^{-z^2} with int H_n^2 e^{-z^2} = 2^n n! sqrt(pi).
HermiteSequence hermite_eval(Complex z, int max_degree);

// Single H_k(z) without materializing the whole sequence.
Complex hermite_value(Complex z, int degree);
double hermite_value(double x, int degree);

// Both sides of the parity identity H_k(-z) = (-1)^k H_k(z); the caller
// asserts equality.
std::pair<Complex, Complex> hermite_parity_pair(Complex z, int degree);

// ln(n!) = sum_{k<=n} ln k. Kept in log space so normalization constants
// like 1/sqrt(2^n 2^m n! m! pi) can be assembled without overflow.
double log_factorial(int n);

// sqrt(binom(n, k)) via log-space factorials.
double sqrt_binomial(int n, int k);

}  // namespace pitosc
