#include "gmlife/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gmlife/errors.hpp"

namespace gmlife {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Taylor coefficients c_2 .. c_26 of 1/Gamma(z) = sum_k c_k z^k about z = 0
// (c_1 = 1).
constexpr std::array<double, 25> kReciprocalGammaTaylor = {
    0.57721566490153286061,   -0.65587807152025388108,  -0.042002635034095235529,
    0.1665386113822914895,    -0.042197734555544336748, -0.0096219715278769735621,
    0.0072189432466630995424, -0.0011651675918590651121, -0.00021524167411495097282,
    0.00012805028238811618615, -0.000020134854780788238656, -1.2504934821426706573e-6,
    1.1330272319816958824e-6, -2.0563384169776071035e-7, 6.1160951044814158179e-9,
    5.0020076444692229301e-9, -1.1812745704870201446e-9, 1.0434267116911005105e-10,
    7.782263439905071254e-12, -3.6968056186422057082e-12, 5.100370287454475979e-13,
    -2.0583260535665067832e-14, -5.3481225394230179824e-15, 1.2267786282382607902e-15,
    -1.1812593016974587695e-16};

// Largest argument for which Gamma is finite in double precision.
constexpr double kMaxGammaArg = 171.6243769563027;

// Factorials are exact in double up to 22!.
constexpr int kMaxExactFactorial = 22;

constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

std::string fmt_args(double eta, double z) {
  return "(eta=" + std::to_string(eta) + ", z=" + std::to_string(z) + ")";
}

bool is_small_positive_integer(double eta) {
  return eta >= 1.0 && eta <= kMaxExactFactorial + 1 && std::floor(eta) == eta;
}

double exact_factorial(int n) {
  double result = 1.0;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

double lanczos_sum(double x) {
  double sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    sum += kLanczosCoefficients[i] / (x + static_cast<double>(i));
  }
  return sum;
}

// Gamma(x + 1) for x >= -0.5.
double lanczos_gamma_shifted(double x) {
  const double t = x + kLanczosG + 0.5;
  // t^(x+0.5) e^-t split in two halves so that Gamma(171) does not overflow
  // in the intermediate.
  const double half_power = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (std::exp(-t) * half_power) *
         lanczos_sum(x);
}

double lanczos_ln_gamma_shifted(double x) {
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(x));
}

// For eta >= 2: Gamma(eta) = Gamma(f) * f (f+1) ... (eta-1) with f in [1, 2).
// The product is carried in long double so that the only double-precision
// error left is the Lanczos value at f.
long double reduced_gamma_product(double eta, double& reduced) {
  reduced = eta - std::floor(eta) + 1.0;
  long double product = 1.0L;
  for (double factor = reduced; factor < eta - 0.5; factor += 1.0) {
    product *= factor;
  }
  return product;
}

// sum_{n >= 0} z^n / (a (a+1) ... (a+n)), so that the lower incomplete gamma
// is z^a e^-z times this sum.
double lower_series(double a, double z) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 1; n <= kMaxSeriesIterations; ++n) {
    ap += 1.0;
    term *= z / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kSeriesTolerance) return sum;
  }
  throw ConvergenceError("incomplete gamma series did not converge " + fmt_args(a, z));
}

// Modified Lentz evaluation of the continued fraction
//   Gamma(a, z) = z^a e^-z / (z + 1 - a - 1 (1 - a) / (z + 3 - a - ...)).
// Returns the fraction without the z^a e^-z prefactor. Valid for any real a
// when z > 0; converges quickly once z >= max(1, a + 1).
double upper_continued_fraction(double a, double z) {
  double b = z + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = std::fabs(b) < kTiny ? 1.0 / kTiny : 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxSeriesIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kSeriesTolerance) return h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge " +
                         fmt_args(a, z));
}

constexpr double kSmallShape = 0.5;

bool use_continued_fraction(double eta, double z) { return z >= 1.0 && z >= eta + 1.0; }

// z^s e^-z evaluated in log space.
double power_exp_term(double s, double z) {
  const double value = std::exp(s * std::log(z) - z);
  if (!std::isfinite(value)) {
    throw OverflowError("z^s e^-z is not representable " + fmt_args(s, z));
  }
  return value;
}

// Gamma(eta, z) for eta > 0 and z < eta + 1 (or z < 1).
double upper_from_lower_series(double eta, double z) {
  if (eta <= kMaxGammaArg) {
    return gamma_fn(eta) - power_exp_term(eta, z) * lower_series(eta, z);
  }
  const double value = std::exp(ln_gamma_fn(eta) + std::log(gamma_ccdf(z, eta)));
  if (!std::isfinite(value)) {
    throw OverflowError("incomplete gamma is not representable " + fmt_args(eta, z));
  }
  return value;
}

// (Gamma(1 + s) - 1) / s for |s| <= 0.5, free of cancellation:
// with 1/Gamma(1 + s) = 1 + s t(s), the quotient is -t(s) / (1 + s t(s)).
double gamma1p_minus_one_over(double s) {
  double t = 0.0;
  for (auto it = kReciprocalGammaTaylor.rbegin(); it != kReciprocalGammaTaylor.rend(); ++it) {
    t = t * s + *it;
  }
  return -t / (1.0 + s * t);
}

// Gamma(s, z) for |s| <= 0.5 and z < 1.5 from
//   Gamma(s, z) = (Gamma(1+s) - 1)/s - (z^s - 1)/s - z^s sum_{n>=1} (-z)^n / (n! (n + s)),
// which tends to E1(z) as s -> 0 and has no cancellation near s = 0.
double small_shape_upper(double s, double z) {
  double term = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= kMaxSeriesIterations; ++n) {
    term *= -z / n;
    const double contribution = term / (n + s);
    sum += contribution;
    if (std::fabs(contribution) <= std::fabs(sum) * kSeriesTolerance) {
      const double log_z = std::log(z);
      const double power_minus_one_over =
          s == 0.0 ? log_z : std::expm1(s * log_z) / s;
      return gamma1p_minus_one_over(s) - power_minus_one_over - std::exp(s * log_z) * sum;
    }
  }
  throw ConvergenceError("small-shape incomplete gamma series did not converge " +
                         fmt_args(s, z));
}

// Walks Gamma(s, z) down from shape `top` to shape `top - steps` with
// Gamma(s - 1, z) = (Gamma(s, z) - z^(s-1) e^-z) / (s - 1).
double descend(double value, double top, int steps, double z) {
  double s = top;
  for (int i = 0; i < steps; ++i) {
    const double lower_shape = s - 1.0;
    value = (value - power_exp_term(lower_shape, z)) / lower_shape;
    s = lower_shape;
  }
  if (!std::isfinite(value)) {
    throw OverflowError("incomplete gamma is not representable " + fmt_args(s, z));
  }
  return value;
}

void check_upper_domain(double eta, double z) {
  if (std::isnan(eta) || std::isnan(z)) {
    throw DomainError("incomplete gamma: NaN argument");
  }
  if (z < 0.0) {
    throw DomainError("incomplete gamma: z must be nonnegative " + fmt_args(eta, z));
  }
  if (eta <= 0.0 && z <= 0.0) {
    throw DomainError("incomplete gamma: z must be positive for eta <= 0 " + fmt_args(eta, z));
  }
  // The continued fraction handles any shape; only recurrence lifting is limited.
  if (eta < kMinSupportedShape && !use_continued_fraction(eta, z)) {
    throw DomainError("incomplete gamma: shape below supported range " + fmt_args(eta, z));
  }
}

}  // namespace

double gamma_fn(double eta) {
  if (!(eta > 0.0)) {
    throw DomainError("gamma_fn: shape must be positive, got " + std::to_string(eta));
  }
  if (eta > kMaxGammaArg) {
    throw OverflowError("gamma_fn: Gamma(" + std::to_string(eta) + ") overflows");
  }
  if (is_small_positive_integer(eta)) {
    return exact_factorial(static_cast<int>(eta) - 1);
  }
  double value;
  if (eta < 0.5) {
    // Reflection keeps the Lanczos sum on its accurate half-plane.
    value = std::numbers::pi /
            (std::sin(std::numbers::pi * eta) * lanczos_gamma_shifted(-eta));
  } else if (eta < 2.0) {
    value = lanczos_gamma_shifted(eta - 1.0);
  } else {
    double reduced = 0.0;
    const long double product = reduced_gamma_product(eta, reduced);
    value = static_cast<double>(product * lanczos_gamma_shifted(reduced - 1.0));
  }
  if (!std::isfinite(value)) {
    throw OverflowError("gamma_fn: Gamma(" + std::to_string(eta) + ") overflows");
  }
  return value;
}

double ln_gamma_fn(double eta) {
  if (!(eta > 0.0)) {
    throw DomainError("ln_gamma_fn: shape must be positive, got " + std::to_string(eta));
  }
  if (std::isinf(eta)) return eta;
  if (is_small_positive_integer(eta)) {
    return std::log(exact_factorial(static_cast<int>(eta) - 1));
  }
  if (eta < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * eta)) -
           lanczos_ln_gamma_shifted(-eta);
  }
  if (eta >= 2.0 && eta <= kMaxGammaArg) {
    double reduced = 0.0;
    const long double product = reduced_gamma_product(eta, reduced);
    return static_cast<double>(std::log(product) +
                               static_cast<long double>(lanczos_ln_gamma_shifted(reduced - 1.0)));
  }
  return lanczos_ln_gamma_shifted(eta - 1.0);
}

double gamma_cdf(double z, double eta) {
  if (std::isnan(z) || std::isnan(eta) || z < 0.0 || !(eta > 0.0)) {
    throw DomainError("gamma_cdf: need z >= 0 and eta > 0 " + fmt_args(eta, z));
  }
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return 1.0;
  const double log_prefactor = eta * std::log(z) - z - ln_gamma_fn(eta);
  if (z < eta + 1.0) {
    const double p = std::exp(log_prefactor) * lower_series(eta, z);
    return std::fmin(p, 1.0);
  }
  const double q = std::exp(log_prefactor) * upper_continued_fraction(eta, z);
  return std::fmax(1.0 - q, 0.0);
}

double gamma_ccdf(double z, double eta) {
  if (std::isnan(z) || std::isnan(eta) || z < 0.0 || !(eta > 0.0)) {
    throw DomainError("gamma_ccdf: need z >= 0 and eta > 0 " + fmt_args(eta, z));
  }
  if (z == 0.0) return 1.0;
  if (std::isinf(z)) return 0.0;
  const double log_prefactor = eta * std::log(z) - z - ln_gamma_fn(eta);
  if (z < eta + 1.0) {
    return std::fmax(1.0 - std::exp(log_prefactor) * lower_series(eta, z), 0.0);
  }
  return std::fmin(std::exp(log_prefactor) * upper_continued_fraction(eta, z), 1.0);
}

double expint_e1(double z) {
  if (!(z > 0.0)) {
    throw DomainError("expint_e1: z must be positive, got " + std::to_string(z));
  }
  if (std::isinf(z)) return 0.0;
  if (z >= 1.0) {
    return std::exp(-z) * upper_continued_fraction(0.0, z);
  }
  // E1(z) = -gamma_E - ln z - sum_{k >= 1} (-z)^k / (k k!)
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kMaxSeriesIterations; ++k) {
    term *= -z / k;
    const double contribution = term / k;
    sum += contribution;
    if (std::fabs(contribution) < std::fabs(sum) * kSeriesTolerance) {
      return -std::numbers::egamma - std::log(z) - sum;
    }
  }
  throw ConvergenceError("expint_e1: series did not converge at z=" + std::to_string(z));
}

double upper_inc_gamma_general(double eta, double z) {
  check_upper_domain(eta, z);
  if (std::isinf(z)) return 0.0;
  if (eta > 0.0 && z == 0.0) return gamma_fn(eta);
  if (use_continued_fraction(eta, z)) {
    return power_exp_term(eta, z) * upper_continued_fraction(eta, z);
  }
  if (eta > kSmallShape) return upper_from_lower_series(eta, z);
  // Shift to a base shape in (-0.5, 0.5] and walk down with the recurrence.
  const int steps = std::max(0, static_cast<int>(std::ceil(-eta - kSmallShape)));
  const double base = steps == 0 ? eta : eta + steps;
  return descend(small_shape_upper(base, z), base, steps, z);
}

double exp_scaled_upper_inc_gamma(double eta, double z) {
  if (std::isnan(z) || !(z > 0.0)) {
    throw DomainError("exp_scaled_upper_inc_gamma: z must be positive " + fmt_args(eta, z));
  }
  check_upper_domain(eta, z);
  if (use_continued_fraction(eta, z)) {
    const double power = std::exp(eta * std::log(z));
    const double value = power * upper_continued_fraction(eta, z);
    if (!std::isfinite(value)) {
      throw OverflowError("exp_scaled_upper_inc_gamma overflows " + fmt_args(eta, z));
    }
    return value;
  }
  // Here z < max(1, eta + 1).
  double value;
  if (eta > kSmallShape && eta <= kMaxGammaArg) {
    // e^z (Gamma(eta) - z^eta e^-z S) = e^z Gamma(eta) - z^eta S
    value = std::exp(z) * gamma_fn(eta) - std::exp(eta * std::log(z)) * lower_series(eta, z);
  } else if (eta > kSmallShape) {
    value = std::exp(z + ln_gamma_fn(eta) + std::log(gamma_ccdf(z, eta)));
  } else {
    value = std::exp(z) * upper_inc_gamma_general(eta, z);
  }
  if (!std::isfinite(value)) {
    throw OverflowError("exp_scaled_upper_inc_gamma overflows " + fmt_args(eta, z));
  }
  return value;
}

}  // namespace gmlife
