#ifndef GMLIFE_TESTS_REFERENCE_HPP_
#define GMLIFE_TESTS_REFERENCE_HPP_

// Test-only reference computations. These evaluate the defining integrals
// directly and never call into the special-function code they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "gmlife/oracle.hpp"

namespace gmlife::testing {

// Nodes and weights of n-point Gauss-Legendre on [-1, 1] by Newton iteration
// on the Legendre polynomial.
template <int N>
struct GaussLegendre {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};

  GaussLegendre() {
    for (int i = 0; i < (N + 1) / 2; ++i) {
      long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (N + 0.5L));
      long double dp = 0.0L;
      for (int iter = 0; iter < 100; ++iter) {
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= N; ++k) {
          const long double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = N * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
      }
      nodes[i] = static_cast<double>(-x);
      nodes[N - 1 - i] = static_cast<double>(x);
      const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
      weights[i] = w;
      weights[N - 1 - i] = w;
    }
  }
};

// Composite Gauss-Legendre (20 points per panel), accumulated in long double.
inline double composite_gauss(const std::function<double(double)>& f, double a, double b,
                              int panels) {
  static const GaussLegendre<20> rule;
  const double h = (b - a) / panels;
  long double total = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < 20; ++i) {
      total += static_cast<long double>(rule.weights[i]) * f(mid + 0.5 * h * rule.nodes[i]);
    }
  }
  return static_cast<double>(total * 0.5L * h);
}

// Gamma(eta) as the integral of y^(eta-1) e^-y, split at y = 1 and cut at 700.
// On [0, 1] the substitution y = u^(1/eta) removes the endpoint singularity and
// dyadic panels towards u = 0 absorb what is left of it.
inline double gamma_by_quadrature(double eta) {
  const auto head_integrand = [eta](double u) { return std::exp(-std::pow(u, 1.0 / eta)); };
  long double head = 0.0L;
  double right = 1.0;
  for (int j = 0; j < 60; ++j) {
    head += composite_gauss(head_integrand, 0.5 * right, right, 4);
    right *= 0.5;
  }
  head += right;  // integrand is 1 to double precision on [0, 2^-60]
  const double tail = composite_gauss(
      [eta](double y) { return std::exp((eta - 1.0) * std::log(y) - y); }, 1.0, 700.0, 2800);
  return static_cast<double>(head / eta) + tail;
}

// int_z^inf y^(eta-1) e^-y dy with y = z e^s, integrated by adaptive Simpson
// until the integrand falls below 1e-18 of its peak.
inline double upper_gamma_by_quadrature(double eta, double z) {
  const auto integrand = [eta, z](double s) {
    const double y = z * std::exp(s);
    return std::exp(eta * std::log(y) - y);
  };
  const double upper = oracle::truncation_point(integrand, 1e-18);
  const double scale = composite_gauss(integrand, 0.0, upper, 64);
  return oracle::adaptive_simpson(integrand, 0.0, upper, 1e-13 * scale).value;
}

// (1 / Gamma-free) lower integral int_0^z y^(eta-1) e^-y dy for eta > 0,
// by adaptive Simpson after y = z u^(1/eta).
inline double lower_gamma_by_quadrature(double eta, double z) {
  const auto integrand = [eta, z](double u) {
    return std::exp(-z * std::pow(u, 1.0 / eta));
  };
  const double scale = std::pow(z, eta) / eta;
  return scale * oracle::adaptive_simpson(integrand, 0.0, 1.0, 1e-14).value;
}

// Kolmogorov-Smirnov statistic of `samples` against `cdf`. Sorts in place.
inline double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max({worst, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return worst;
}

// Asymptotic 1% critical value of the one-sample KS statistic.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

inline double relative_error(double value, double reference) {
  if (value == reference) return 0.0;
  return std::fabs(value - reference) / std::fabs(reference);
}

// Absolute quadrature tolerance scaled to the size of the annuity integral at
// age x, roughly 1 / (alpha + delta + beta e^(gamma x)) capped at 1.
inline double annuity_quadrature_tol(const GmParams& p, Rate r, double x, double rel) {
  double hazard = p.alpha() + r.delta();
  if (p.has_ageing()) hazard += p.beta() * std::exp(p.gamma() * x);
  return rel * std::min(1.0, 1.0 / hazard);
}

}  // namespace gmlife::testing

#endif  // GMLIFE_TESTS_REFERENCE_HPP_
