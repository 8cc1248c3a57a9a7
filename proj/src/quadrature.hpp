#pragma once

#include <cmath>
#include <vector>

#include "oscillator.hpp"

namespace pitosc {

inline constexpr int kMaxQuadOrder = 128;
inline constexpr int kDefaultQuadOrder = 48;

// Gauss-Hermite rule for integrands f(x) e^{-x^2}: exact for polynomial f up
// to degree 2*order - 1.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, sum = sqrt(pi)
};

// Nodes are the roots of H_order located by Newton iteration on the
// orthonormal recurrence (asymptotic initial guesses, largest root first);
// weights come from the derivative value at each node.
QuadratureRule gauss_hermite(int order);

enum class NormMethod { contour_shift, real_plane_direct };

struct NormReport {
  double real_part = 0.0;
  double imag_part = 0.0;
  NormMethod method = NormMethod::contour_shift;
  int order_used = 0;          // quadrature order or Simpson sample count
  double estimated_error = 0.0;
};

// Indefinite PiT inner product <psi_a | psi_b> = int (PiT psi_a) psi_b dx dy,
// evaluated as (-1)^{m_a} int psi_a psi_b with the y integral taken on the
// shifted contour; equals delta_{n n'} delta_{m m'} (-1)^{m_a}.
// Requires a.lambda == b.lambda and rule.order >= max(n_a+n_b, m_a+m_b) + 4.
Complex pit_inner_product(const EigenState& a, const EigenState& b,
                          const QuadratureRule& rule);

// CPiT norm int dx int_C dy (CPiT psi) psi via the substitution y = u - iL/2,
// after which the integrand (psi(x, u - iL/2))^2 is polynomial times
// e^{-(x+L/2)^2 - u^2} and the rule integrates it exactly. The imaginary part
// is zero by construction. Requires rule.order >= n + m + 4.
NormReport cpt_norm(const EigenState& state, const QuadratureRule& rule);

// Independent oracle route: integrate (psi_nm)^2 over the real plane
// truncated to [-W, W]^2 with composite Simpson per axis (the oscillatory
// e^{-i L y} factor is present here, so Gauss-Hermite does not apply).
// Requires half_width >= 8 + lambda and odd samples >= 2001; the error
// estimate compares against a half-resolution pass.
NormReport real_plane_density_integrals(const EigenState& state,
                                        double half_width, int samples);

// sum_{ij} w_i w_j f(t_i, u_j) for integrands with the e^{-t^2-u^2} weight
// already removed. abs_accum, when given, receives sum |w_i w_j f|.
template <class F>
double tensor_weighted_sum(const QuadratureRule& rule, F&& f,
                           double* abs_accum = nullptr) {
  double sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double row = 0.0;
    double abs_row = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double term = rule.weights[j] * f(rule.nodes[i], rule.nodes[j]);
      row += term;
      abs_row += std::abs(term);
    }
    sum += rule.weights[i] * row;
    abs_sum += rule.weights[i] * abs_row;
  }
  if (abs_accum) *abs_accum = abs_sum;
  return sum;
}

}  // namespace pitosc
