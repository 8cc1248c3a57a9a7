#include "quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace pitosc {

namespace {

constexpr int kNewtonMaxIter = 100;
constexpr double kNewtonTol = 1.0e-14;

// Orthonormal Hermite functions h_k = H_k / sqrt(2^k k! sqrt(pi)) keep the
// recurrence in O(1) magnitude for any order:
//   h_{k+1} = z sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}.
// Returns h_order(z); h_prev receives h_{order-1}(z).
double orthonormal_hermite(double z, int order, double* h_prev) {
  double p1 = 1.0 / std::pow(std::numbers::pi, 0.25);
  double p2 = 0.0;
  for (int j = 0; j < order; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
  }
  *h_prev = p2;
  return p1;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > kMaxQuadOrder) {
    throw std::invalid_argument("gauss_hermite order " + std::to_string(order) +
                                " outside supported range [1, " +
                                std::to_string(kMaxQuadOrder) + "]");
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);

  const int half = (order + 1) / 2;
  std::vector<double> positive(half, 0.0);
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Asymptotic guess for the largest root, then steps down the ladder.
    if (i == 0) {
      z = std::sqrt(2.0 * order + 1.0) -
          1.85575 * std::pow(2.0 * order + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * positive[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * positive[1];
    } else {
      z = 2.0 * z - positive[i - 2];
    }
    // H_order(0) = 0 for odd order; the middle root is exact.
    const bool middle = (order % 2 == 1) && (i == half - 1);
    if (middle) z = 0.0;

    double h_prev = 0.0;
    double h = orthonormal_hermite(z, order, &h_prev);
    if (!middle) {
      int it = 0;
      for (; it < kNewtonMaxIter; ++it) {
        const double deriv = std::sqrt(2.0 * order) * h_prev;
        const double z_next = z - h / deriv;
        const bool done = std::abs(z_next - z) <= kNewtonTol * std::max(1.0, std::abs(z));
        z = z_next;
        h = orthonormal_hermite(z, order, &h_prev);
        if (done) break;
      }
      if (it == kNewtonMaxIter) {
        throw ConvergenceError("gauss_hermite: Newton iteration for node " +
                               std::to_string(i) + " of order " +
                               std::to_string(order) + " did not converge");
      }
    }
    positive[i] = z;
    // w = 2 / (H'_norm)^2 with H'_norm = sqrt(2*order) h_{order-1}, which is
    // the stable form of 2^{order-1} order! sqrt(pi) / (order H_{order-1})^2.
    const double deriv = std::sqrt(2.0 * order) * h_prev;
    const double w = 2.0 / (deriv * deriv);
    rule.nodes[order - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

Complex pit_inner_product(const EigenState& a, const EigenState& b,
                          const QuadratureRule& rule) {
  validate(a);
  validate(b);
  if (a.lambda != b.lambda) {
    throw IncompatibleStatesError(
        "pit_inner_product requires equal lambda on both states");
  }
  const int needed = std::max(a.n + b.n, a.m + b.m) + 4;
  if (rule.order < needed) {
    throw RuleOrderError("pit_inner_product needs rule order >= " +
                         std::to_string(needed) + ", got " +
                         std::to_string(rule.order));
  }
  const double value = tensor_weighted_sum(rule, [&](double t, double u) {
    return eigenstate_hermite_factor(a, t, u) * eigenstate_hermite_factor(b, t, u);
  });
  const double sign = (a.m % 2 == 0) ? 1.0 : -1.0;
  return Complex(sign * value, 0.0);
}

NormReport cpt_norm(const EigenState& state, const QuadratureRule& rule) {
  validate(state);
  const int needed = state.n + state.m + 4;
  if (rule.order < needed) {
    throw RuleOrderError("cpt_norm needs rule order >= " + std::to_string(needed) +
                         ", got " + std::to_string(rule.order));
  }
  double abs_sum = 0.0;
  const double value = tensor_weighted_sum(
      rule,
      [&](double t, double u) {
        const double factor = eigenstate_hermite_factor(state, t, u);
        return factor * factor;
      },
      &abs_sum);
  NormReport report;
  report.real_part = value;
  report.imag_part = 0.0;
  report.method = NormMethod::contour_shift;
  report.order_used = rule.order;
  report.estimated_error = std::numeric_limits<double>::epsilon() * abs_sum;
  return report;
}

namespace {

// Composite Simpson over [-W, W] with an odd number of samples.
template <class F>
auto simpson(F&& f, double half_width, int samples) {
  const double h = 2.0 * half_width / (samples - 1);
  using value_type = decltype(f(0.0));
  value_type sum = f(-half_width) + f(half_width);
  for (int k = 1; k < samples - 1; ++k) {
    const double x = -half_width + k * h;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * f(x);
  }
  return sum * (h / 3.0);
}

// The squared separated factors of psi_nm on the real plane. The x factor is
// real; the y factor keeps the oscillatory complex phase.
Complex real_plane_integral(const EigenState& state, double half_width, int samples) {
  const int n = state.n;
  const int m = state.m;
  const double lam = state.lambda;
  const double x_norm =
      std::exp(-(n * std::numbers::ln2 + log_factorial(n) + 0.5 * std::log(std::numbers::pi)));
  const double y_norm =
      std::exp(-(m * std::numbers::ln2 + log_factorial(m) + 0.5 * std::log(std::numbers::pi)));
  const double ix = simpson(
      [&](double x) {
        const double xs = x + 0.5 * lam;
        const double hx = hermite_value(xs, n);
        return hx * hx * std::exp(-xs * xs) * x_norm;
      },
      half_width, samples);
  const Complex iy = simpson(
      [&](double y) {
        const Complex ys(y, 0.5 * lam);
        const Complex hy = hermite_value(ys, m);
        return hy * hy * std::exp(-ys * ys) * y_norm;
      },
      half_width, samples);
  return ix * iy;
}

}  // namespace

NormReport real_plane_density_integrals(const EigenState& state,
                                        double half_width, int samples) {
  validate(state);
  if (!(half_width >= 8.0 + state.lambda)) {
    throw std::invalid_argument("half_width must be >= 8 + lambda");
  }
  if (samples < 2001 || samples % 2 == 0) {
    throw ResolutionError("real_plane_density_integrals requires odd samples >= 2001");
  }
  const Complex full = real_plane_integral(state, half_width, samples);
  int coarse_samples = (samples + 1) / 2;
  if (coarse_samples % 2 == 0) ++coarse_samples;
  const Complex coarse = real_plane_integral(state, half_width, coarse_samples);

  NormReport report;
  report.real_part = full.real();
  report.imag_part = full.imag();
  report.method = NormMethod::real_plane_direct;
  report.order_used = samples;
  report.estimated_error = std::abs(full - coarse);
  return report;
}

}  // namespace pitosc
