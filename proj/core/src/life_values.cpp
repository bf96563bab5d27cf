#include "gmlife/life_values.hpp"

#include <cmath>
#include <string>

#include "gmlife/errors.hpp"
#include "gmlife/special_fn.hpp"

namespace gmlife {

namespace {

void check_positive_hazard(const GmParams& p, Rate r) {
  if (p.alpha() + p.beta() + r.delta() == 0.0) {
    throw DomainError("alpha = beta = delta = 0: the annuity value is infinite");
  }
}

// z^eta computed as exp(eta ln z).
double log_space_power(double z, double eta) {
  const double value = std::exp(eta * std::log(z));
  if (!std::isfinite(value)) {
    throw OverflowError("power term is not representable (z=" + std::to_string(z) +
                        ", eta=" + std::to_string(eta) + ")");
  }
  return value;
}

}  // namespace

Rate::Rate(double delta) : delta_(delta) {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw DomainError("Rate: delta must be finite and >= 0, got " + std::to_string(delta));
  }
}

double e0(const GmParams& p) {
  if (p.alpha() + p.beta() == 0.0) {
    throw DomainError("e0: alpha = beta = 0 gives an infinite lifetime");
  }
  if (!p.has_ageing()) return 1.0 / p.alpha();
  const double a = p.alpha() / p.gamma();
  const double z = p.beta() / p.gamma();
  return log_space_power(z, a) * exp_scaled_upper_inc_gamma(-a, z) / p.gamma();
}

double annuity(const GmParams& p, Rate r, double x) {
  check_age(x);
  check_positive_hazard(p, r);
  return e0(p.shifted_to(x).with_added_hazard(r.delta()));
}

double remaining_life(const GmParams& p, double x) { return annuity(p, Rate(0.0), x); }

double ageing_factor(const GmParams& p, Rate r, double x) {
  check_age(x);
  const double hazard = p.alpha() + r.delta();
  if (hazard == 0.0) {
    throw DomainError("ageing_factor: requires alpha + delta > 0");
  }
  if (!p.has_ageing()) return 0.0;
  const GmParams shifted = p.shifted_to(x);
  const double a = hazard / p.gamma();
  const double z = shifted.beta() / p.gamma();
  return log_space_power(z, a) * exp_scaled_upper_inc_gamma(1.0 - a, z);
}

double commutation_d(const GmParams& p, Rate r, double x) {
  return survival(p.with_added_hazard(r.delta()), x);
}

double commutation_n(const GmParams& p, Rate r, double x) {
  return commutation_d(p, r, x) * annuity(p, r, x);
}

double commutation_m(const GmParams& p, Rate r, double x) {
  check_positive_hazard(p, r);
  const double d = commutation_d(p, r, x);
  if (r.delta() == 0.0) return d;
  // Zero mortality: nobody dies, M vanishes identically.
  if (p.alpha() == 0.0 && !p.has_ageing()) return 0.0;
  return d - r.delta() * commutation_n(p, r, x);
}

CommutationRow commutation_row(const GmParams& p, Rate r, double x, bool double_rate) {
  const Rate effective = double_rate ? r.doubled() : r;
  return CommutationRow{x, commutation_d(p, effective, x), commutation_n(p, effective, x),
                        commutation_m(p, effective, x)};
}

double positive_shape_check(const GmParams& p, Rate r) {
  if (!(p.gamma() > 0.0)) {
    throw DomainError("positive_shape_check: gamma must be > 0");
  }
  return 1.0 - (p.alpha() + r.delta()) / p.gamma();
}

}  // namespace gmlife
