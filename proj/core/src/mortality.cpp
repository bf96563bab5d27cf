#include "gmlife/mortality.hpp"

#include <cmath>
#include <string>

#include "gmlife/errors.hpp"

namespace gmlife {

namespace {

// -log l(x). Infinite once the senescent term overflows.
double cumulative_hazard(const GmParams& p, double x) {
  const double makeham = p.alpha() * x;
  if (!p.has_ageing()) return makeham;
  return makeham + (p.beta() / p.gamma()) * std::expm1(p.gamma() * x);
}

}  // namespace

GmParams::GmParams(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("GmParams: alpha must be finite and >= 0, got " + std::to_string(alpha));
  }
  if (!std::isfinite(beta) || beta < 0.0) {
    throw DomainError("GmParams: beta must be finite and >= 0, got " + std::to_string(beta));
  }
  if (!std::isfinite(gamma)) {
    throw DomainError("GmParams: gamma must be finite");
  }
  if (beta > 0.0 && !(gamma > 0.0)) {
    throw DomainError("GmParams: gamma must be > 0 when beta > 0, got " + std::to_string(gamma));
  }
}

GmParams GmParams::shifted_to(double x) const {
  check_age(x);
  if (!has_ageing()) return *this;
  double shifted = beta_ * std::exp(gamma_ * x);
  if (!std::isfinite(shifted)) {
    // e^(gamma x) overflowed on its own; a small beta may still bring it back.
    shifted = std::exp(std::log(beta_) + gamma_ * x);
  }
  if (!std::isfinite(shifted)) {
    throw OverflowError("beta e^(gamma x) is not representable at age " + std::to_string(x));
  }
  return GmParams(alpha_, shifted, gamma_);
}

GmParams GmParams::with_added_hazard(double extra) const {
  return GmParams(alpha_ + extra, beta_, gamma_);
}

void check_age(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("age must be finite and >= 0, got " + std::to_string(x));
  }
}

double survival(const GmParams& p, double x) {
  check_age(x);
  return std::exp(-cumulative_hazard(p, x));
}

double mortality_rate(const GmParams& p, double x) {
  check_age(x);
  if (!p.has_ageing()) return p.alpha();
  const double rate = p.alpha() + p.beta() * std::exp(p.gamma() * x);
  if (!std::isfinite(rate)) {
    throw OverflowError("mortality rate is not representable at age " + std::to_string(x));
  }
  return rate;
}

double cdf(const GmParams& p, double x) {
  check_age(x);
  return -std::expm1(-cumulative_hazard(p, x));
}

}  // namespace gmlife
