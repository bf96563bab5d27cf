#ifndef GMLIFE_SPECIAL_FN_HPP_
#define GMLIFE_SPECIAL_FN_HPP_

/*
 * Gamma and incomplete gamma functions for real shape.
 *
 *   gamma_fn(eta)                    Gamma(eta), eta > 0 (Lanczos, g = 7, n = 9)
 *   ln_gamma_fn(eta)                 log Gamma(eta), eta > 0
 *   gamma_cdf(z, eta)                regularized lower incomplete gamma P(eta, z)
 *   upper_inc_gamma_general(eta, z)  Gamma(eta, z) = int_z^inf y^(eta-1) e^-y dy
 *   exp_scaled_upper_inc_gamma(...)  e^z Gamma(eta, z) without forming e^z
 *
 * Evaluation strategy for Gamma(eta, z):
 *   - z >= max(1, eta + 1): modified Lentz continued fraction, any real shape.
 *   - eta > 0.5 otherwise: Gamma(eta) minus the lower series.
 *   - eta <= 0.5 otherwise: a base shape s in (-0.5, 0.5] is evaluated with a
 *     series that is regular at s = 0 (it equals E1(z) there), and the result
 *     is walked down to eta with
 *
 *       Gamma(s - 1, z) = (Gamma(s, z) - z^(s-1) e^-z) / (s - 1).
 *
 * Shapes below -10 are rejected unless the continued fraction applies.
 *
 * All functions are pure and thread-safe. Errors are reported by throwing
 * DomainError, OverflowError or ConvergenceError (see errors.hpp).
 */

namespace gmlife {

inline constexpr int kMaxSeriesIterations = 500;
inline constexpr double kSeriesTolerance = 1e-15;
inline constexpr double kMinSupportedShape = -10.0;

double gamma_fn(double eta);

double ln_gamma_fn(double eta);

double gamma_cdf(double z, double eta);

// Regularized upper function Q(eta, z) = 1 - gamma_cdf(z, eta), computed
// without the subtraction when z >= eta + 1.
double gamma_ccdf(double z, double eta);

double upper_inc_gamma_general(double eta, double z);

double exp_scaled_upper_inc_gamma(double eta, double z);

// Exponential integral E1(z) = Gamma(0, z), z > 0.
double expint_e1(double z);

}  // namespace gmlife

#endif  // GMLIFE_SPECIAL_FN_HPP_
