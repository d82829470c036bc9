#pragma once

#include <functional>

namespace sagin {

/// Result of a truncated series evaluation. `truncation_bound` is the
/// magnitude of the first omitted term (0 if the series terminated exactly).
struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double truncation_bound = 0.0;
};

/// Natural log of the Gamma function for x > 0. Throws std::domain_error
/// for x <= 0.
double ln_gamma(double x);

/// Confluent hypergeometric function 1F1(a; b; z), summed as a Taylor
/// series until the next term drops below 1e-14 of the partial sum.
/// Entire in z, so the series converges for all arguments; a hard cap of
/// 10000 terms guards pathological (a, b) and throws std::runtime_error.
/// b must not be zero or a negative integer.
SeriesResult kummer_1f1(double a, double b, double z);

/// M(sigma0) = exp(-sigma0^2/2) * 1F1(-1/2; 1/2; sigma0^2/2).
/// Equals (1/sigma0^2) * int_0^inf t cos(t) exp(-t^2/(2 sigma0^2)) dt,
/// the mean cosine of a Rayleigh(sigma0) deviation angle.
double cos_weighted_rayleigh_mass(double sigma0);

/// Generalized binomial coefficient C(r, n) for real r, computed as the
/// running product r(r-1)...(r-n+1)/n!. Gamma-ratio forms hit poles for
/// n > r; the product is finite for every real r.
double gen_binom_coeff(double r, int n);

/// Alternating generalized-binomial sum  sum_n (-1)^n C(r, n) * term(n).
/// Truncates when |t_n| < rel_tol * |partial sum| or after max_terms,
/// whichever comes first; the first omitted bound is reported.
SeriesResult alternating_binomial_sum(double r,
                                      const std::function<double(int)>& term,
                                      int max_terms = 200,
                                      double rel_tol = 1e-12);

}  // namespace sagin
