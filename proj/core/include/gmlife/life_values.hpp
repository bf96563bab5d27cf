#ifndef GMLIFE_LIFE_VALUES_HPP_
#define GMLIFE_LIFE_VALUES_HPP_

#include "gmlife/mortality.hpp"

namespace gmlife {

/// Continuously compounded force of interest, per year. Finite and >= 0.
class Rate {
 public:
  explicit Rate(double delta);

  double delta() const noexcept { return delta_; }
  Rate doubled() const { return Rate(2.0 * delta_); }

  friend bool operator==(const Rate&, const Rate&) = default;

 private:
  double delta_;
};

/// One line of a commutation table at a single force of interest.
struct CommutationRow {
  double x;
  double d_val;
  double n_val;
  double m_val;
};

/// Complete expectation of life at birth, the integral of l(t) over [0, inf).
///
/// Evaluated in closed form as
///
///   e0 = (beta/gamma)^(alpha/gamma) e^(beta/gamma) Gamma(-alpha/gamma, beta/gamma) / gamma
///
/// with the product e^z Gamma(eta, z) taken from exp_scaled_upper_inc_gamma.
/// For beta = 0 this is 1/alpha; for alpha = 0 the shape is 0 and the
/// incomplete gamma is the exponential integral E1. Throws DomainError if
/// alpha = beta = 0.
double e0(const GmParams& p);

/// Expected remaining lifetime at age x: e0 of the basis shifted to age x.
double remaining_life(const GmParams& p, double x);

/// Present value at age x of a continuous life annuity paying 1 per year,
/// e0(alpha + delta, beta e^(gamma x), gamma). Throws DomainError if
/// alpha = beta = delta = 0.
double annuity(const GmParams& p, Rate r, double x);

/// The "effect of ageing" term f with annuity = (1 - f) / (alpha + delta).
/// Zero without senescent mortality; tends to 1 at high ages. Requires
/// alpha + delta > 0.
double ageing_factor(const GmParams& p, Rate r, double x);

/// D(x) = l(x) e^(-delta x), evaluated as l(x; alpha + delta, beta, gamma).
double commutation_d(const GmParams& p, Rate r, double x);

/// N(x) = D(x) * annuity(x).
double commutation_n(const GmParams& p, Rate r, double x);

/// M(x) = D(x) - delta N(x).
double commutation_m(const GmParams& p, Rate r, double x);

/// D, N, M at delta, or at 2 delta when `double_rate` is set.
CommutationRow commutation_row(const GmParams& p, Rate r, double x, bool double_rate);

/// Shape 1 - (alpha + delta)/gamma of the gamma distribution in the
/// annuity formula. Requires gamma > 0.
double positive_shape_check(const GmParams& p, Rate r);

}  // namespace gmlife

#endif  // GMLIFE_LIFE_VALUES_HPP_
