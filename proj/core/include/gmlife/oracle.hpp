#ifndef GMLIFE_ORACLE_HPP_
#define GMLIFE_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <random>

#include "gmlife/life_values.hpp"
#include "gmlife/mortality.hpp"

/*
 * Independent checks for the closed-form life values.
 *
 * The quadrature routines integrate the defining integrals directly with
 * adaptive Simpson, and the Monte-Carlo routines draw lifetimes as the minimum
 * of an exponential(alpha) and a Gompertz(beta, gamma) lifetime. Nothing here
 * touches the special functions.
 */

namespace gmlife::oracle {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
};

inline constexpr std::int64_t kMaxEvaluations = 10'000'000;
inline constexpr double kTruncationThreshold = 1e-16;

/// Adaptive Simpson on [lo, hi] to absolute tolerance `tol`.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  double tol, std::int64_t max_evaluations = kMaxEvaluations);

/// Smallest power-of-two T >= 1 with f(T) < threshold * f(0), for a decaying f.
double truncation_point(const std::function<double(double)>& f,
                        double threshold = kTruncationThreshold);

/// int_0^inf e^(-delta t) l(x + t) / l(x) dt, i.e. the annuity value (or
/// e_x when delta = 0), with absolute error at most `tol`.
QuadratureResult integrate_survival(const GmParams& p, Rate r, double x, double tol);

/// N(x) = int_x^inf l(y) e^(-delta y) dy.
QuadratureResult integrate_n(const GmParams& p, Rate r, double x, double tol);

/// M(x) = int_x^inf mu(y) l(y) e^(-delta y) dy.
QuadratureResult integrate_m(const GmParams& p, Rate r, double x, double tol);

/// Seeded uniform stream on top of the 64-bit Mersenne Twister (mt19937_64).
///
/// Uniforms are built from the top 53 bits of each output as
/// (k + 0.5) / 2^53, so they lie strictly inside (0, 1) and the whole stream
/// is reproducible on any conforming standard library.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}

  double uniform_open();

  // Independent substream for parallel use: seeded from this stream.
  SeedStream split();

 private:
  std::mt19937_64 engine_;
};

/// One Gompertz-Makeham lifetime. Throws DomainError if alpha = beta = 0.
double sample_lifetime(const GmParams& p, SeedStream& stream);

/// Monte-Carlo estimate of e_x from n >= 1000 lifetimes drawn on the basis
/// shifted to age x.
McEstimate mc_remaining_life(const GmParams& p, double x, std::int64_t n, SeedStream& stream);

}  // namespace gmlife::oracle

#endif  // GMLIFE_ORACLE_HPP_
