#ifndef GMLIFE_MORTALITY_HPP_
#define GMLIFE_MORTALITY_HPP_

namespace gmlife {

/// Gompertz-Makeham mortality basis: force of mortality mu(x) = alpha + beta e^(gamma x).
///
/// alpha and beta must be finite and nonnegative. gamma must be positive
/// whenever beta > 0; with beta = 0 the ageing rate plays no role and any
/// finite value (including 0) is accepted. Construction throws DomainError
/// on an invalid basis.
class GmParams {
 public:
  GmParams(double alpha, double beta, double gamma);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  bool has_ageing() const noexcept { return beta_ > 0.0; }

  // Same law seen from age x: (alpha, beta e^(gamma x), gamma).
  GmParams shifted_to(double x) const;

  // Makeham term increased by `extra`, as used for discounting: (alpha + extra, beta, gamma).
  GmParams with_added_hazard(double extra) const;

  friend bool operator==(const GmParams&, const GmParams&) = default;

 private:
  double alpha_;
  double beta_;
  double gamma_;
};

/// Probability of surviving from birth to age x.
double survival(const GmParams& p, double x);

/// Force of mortality alpha + beta e^(gamma x). Throws OverflowError when
/// the senescent term is not representable.
double mortality_rate(const GmParams& p, double x);

/// Lifetime distribution function F(x) = 1 - l(x).
double cdf(const GmParams& p, double x);

// Throws DomainError unless x is finite and nonnegative.
void check_age(double x);

}  // namespace gmlife

#endif  // GMLIFE_MORTALITY_HPP_
