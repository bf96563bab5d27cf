#include "gmlife/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmlife/errors.hpp"

namespace gmlife::oracle {

namespace {

constexpr int kMaxDepth = 50;
constexpr int kInitialPanels = 64;
constexpr double kMaxTruncation = 0x1p60;

class SimpsonIntegrator {
 public:
  SimpsonIntegrator(const std::function<double(double)>& f, std::int64_t budget)
      : f_(f), budget_(budget) {}

  double eval(double t) {
    if (++evaluations_ > budget_) {
      throw ConvergenceError("adaptive Simpson: evaluation budget of " +
                             std::to_string(budget_) + " exhausted");
    }
    return f_(t);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
      error_ += std::fabs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }

  std::int64_t evaluations() const { return evaluations_; }
  double error() const { return error_; }

 private:
  const std::function<double(double)>& f_;
  std::int64_t budget_;
  std::int64_t evaluations_ = 0;
  double error_ = 0.0;
};

// Survival-type integrand exp(-(hazard) s - c expm1(gamma s)), c = (beta/gamma) e^(gamma x),
// i.e. e^(-delta s) l(x + s) / l(x).
struct ShiftedSurvival {
  double hazard;
  double scale;
  double gamma;

  double log_value(double s) const {
    double h = hazard * s;
    if (scale > 0.0) h += scale * std::expm1(gamma * s);
    return -h;
  }
  double operator()(double s) const { return std::exp(log_value(s)); }
};

ShiftedSurvival make_shifted(const GmParams& p, Rate r, double x) {
  double scale = 0.0;
  if (p.has_ageing()) {
    scale = std::exp(std::log(p.beta() / p.gamma()) + p.gamma() * x);
  }
  return ShiftedSurvival{p.alpha() + r.delta(), scale, p.gamma()};
}

void check_inputs(const GmParams& p, Rate r, double x, double tol) {
  check_age(x);
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (p.alpha() + p.beta() + r.delta() == 0.0) {
    throw DomainError("quadrature: alpha = beta = delta = 0 gives a divergent integral");
  }
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double tol) {
  const double upper = truncation_point(f);
  return adaptive_simpson(f, 0.0, upper, tol);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, std::int64_t max_evaluations) {
  if (!(tol > 0.0)) throw DomainError("adaptive_simpson: tolerance must be positive");
  if (!(hi >= lo)) throw DomainError("adaptive_simpson: need lo <= hi");
  SimpsonIntegrator integrator(f, max_evaluations);
  if (hi == lo) {
    integrator.eval(lo);
    return QuadratureResult{0.0, 0.0, integrator.evaluations()};
  }
  const double width = (hi - lo) / kInitialPanels;
  double total = 0.0;
  double fa = integrator.eval(lo);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == kInitialPanels) ? hi : lo + (i + 1) * width;
    const double m = 0.5 * (a + b);
    const double fm = integrator.eval(m);
    const double fb = integrator.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += integrator.refine(a, b, fa, fm, fb, whole, tol / kInitialPanels, kMaxDepth);
    fa = fb;
  }
  return QuadratureResult{total, integrator.error(), integrator.evaluations()};
}

double truncation_point(const std::function<double(double)>& f, double threshold) {
  double peak = f(0.0);
  double t = 1.0;
  while (t <= kMaxTruncation) {
    const double value = f(t);
    if (value < threshold * peak) return t;
    peak = std::max(peak, value);
    t *= 2.0;
  }
  throw ConvergenceError("truncation search: integrand does not decay");
}

QuadratureResult integrate_survival(const GmParams& p, Rate r, double x, double tol) {
  check_inputs(p, r, x, tol);
  const ShiftedSurvival g = make_shifted(p, r, x);
  return integrate_to_infinity([&g](double t) { return g(t); }, tol);
}

QuadratureResult integrate_n(const GmParams& p, Rate r, double x, double tol) {
  check_inputs(p, r, x, tol);
  // D(x + t) written out from the survival formula at age x + t.
  const double hazard = p.alpha() + r.delta();
  const bool ageing = p.has_ageing();
  const double b = p.beta();
  const double g = p.gamma();
  auto integrand = [=](double t) {
    const double y = x + t;
    double h = hazard * y;
    if (ageing) h += (b / g) * std::expm1(g * y);
    return std::exp(-h);
  };
  return integrate_to_infinity(integrand, tol);
}

QuadratureResult integrate_m(const GmParams& p, Rate r, double x, double tol) {
  check_inputs(p, r, x, tol);
  const double a = p.alpha();
  const double hazard = a + r.delta();
  const bool ageing = p.has_ageing();
  const double b = p.beta();
  const double g = p.gamma();
  // mu(y) D(y) with the senescent part folded into the exponent so that
  // e^(gamma y) overflowing against a vanishing D(y) gives 0, not NaN.
  auto integrand = [=](double t) {
    const double y = x + t;
    double h = hazard * y;
    if (!ageing) return a * std::exp(-h);
    h += (b / g) * std::expm1(g * y);
    return a * std::exp(-h) + std::exp(std::log(b) + g * y - h);
  };
  return integrate_to_infinity(integrand, tol);
}

double SeedStream::uniform_open() {
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

SeedStream SeedStream::split() { return SeedStream(engine_()); }

double sample_lifetime(const GmParams& p, SeedStream& stream) {
  if (p.alpha() + p.beta() == 0.0) {
    throw DomainError("sample_lifetime: alpha = beta = 0 gives an infinite lifetime");
  }
  constexpr double kInfinity = std::numeric_limits<double>::infinity();
  const double u_makeham = stream.uniform_open();
  const double u_gompertz = stream.uniform_open();
  const double makeham = p.alpha() > 0.0 ? -std::log(u_makeham) / p.alpha() : kInfinity;
  double gompertz = kInfinity;
  if (p.has_ageing()) {
    // Inversion of exp(-(beta/gamma)(e^(gamma x) - 1)) = u.
    gompertz = std::log1p(-(p.gamma() / p.beta()) * std::log(u_gompertz)) / p.gamma();
  }
  return std::min(makeham, gompertz);
}

McEstimate mc_remaining_life(const GmParams& p, double x, std::int64_t n, SeedStream& stream) {
  if (n < 1000) {
    throw DomainError("mc_remaining_life: need at least 1000 samples");
  }
  const GmParams shifted = p.shifted_to(x);
  // Welford's running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const double sample = sample_lifetime(shifted, stream);
    const double delta = sample - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (sample - mean);
  }
  const double variance = m2 / static_cast<double>(n - 1);
  return McEstimate{mean, std::sqrt(variance / static_cast<double>(n)), n};
}

}  // namespace gmlife::oracle
