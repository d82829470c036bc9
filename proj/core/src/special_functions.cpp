#include "sagin/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace sagin {

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive");
    }
    return std::lgamma(x);
}

SeriesResult kummer_1f1(double a, double b, double z) {
    if (b == std::floor(b) && b <= 0.0) {
        throw std::domain_error("kummer_1f1: b must not be zero or a negative integer");
    }
    constexpr int kCap = 10000;
    constexpr double kRelTol = 1e-14;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < kCap; ++n) {
        term *= (a + n) / (b + n) * z / (n + 1);
        sum += term;
        if (std::abs(term) < kRelTol * std::abs(sum)) {
            return {sum, n + 2, std::abs(term)};
        }
        if (term == 0.0) {  // a is a non-positive integer: the series terminates
            return {sum, n + 2, 0.0};
        }
    }
    throw std::runtime_error("kummer_1f1: series did not converge within 10000 terms");
}

double cos_weighted_rayleigh_mass(double sigma0) {
    if (!(sigma0 > 0.0)) {
        throw std::domain_error("cos_weighted_rayleigh_mass: sigma0 must be positive");
    }
    const double half_var = 0.5 * sigma0 * sigma0;
    return std::exp(-half_var) * kummer_1f1(-0.5, 0.5, half_var).value;
}

double gen_binom_coeff(double r, int n) {
    if (n < 0) {
        throw std::domain_error("gen_binom_coeff: n must be non-negative");
    }
    double c = 1.0;
    for (int i = 0; i < n; ++i) {
        c *= (r - i) / (i + 1);
    }
    return c;
}

SeriesResult alternating_binomial_sum(double r,
                                      const std::function<double(int)>& term,
                                      int max_terms, double rel_tol) {
    double sum = 0.0;
    double coeff = 1.0;  // C(r, 0)
    int n = 0;
    for (; n <= max_terms; ++n) {
        if (n > 0) coeff *= (r - (n - 1)) / n;
        const double t = (n % 2 == 0 ? 1.0 : -1.0) * coeff * term(n);
        sum += t;
        if (n > 1 && std::abs(t) < rel_tol * std::abs(sum)) {
            return {sum, n + 1, std::abs(t)};
        }
    }
    // Capped: report the magnitude of the next coefficient-weighted term.
    const double next = std::abs(coeff * (r - n + 1) / n * term(n));
    return {sum, n, next};
}

}  // namespace sagin
