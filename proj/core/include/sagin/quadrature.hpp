#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace sagin::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Kronrod (G7/K15). `tol` is the target relative error;
/// non-finite integrand values abort the evaluation.
template <class F>
Result integrate(F&& f, double a, double b, double tol = 1e-10, int max_depth = 15) {
    double error = 0.0;
    auto checked = [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw std::runtime_error("quadrature: non-finite integrand value");
        }
        return v;
    };
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        checked, a, b, max_depth, tol, &error);
    return {value, error};
}

/// Integrates piecewise over consecutive breakpoints. Used where the
/// integrand lives on a scale far below the interval length (panel
/// boundaries aligned with that scale keep the adaptive rule honest).
template <class F>
Result integrate_panels(F&& f, std::span<const double> points, double tol = 1e-10,
                        int max_depth = 15) {
    Result total;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i + 1] <= points[i]) continue;
        const Result r = integrate(f, points[i], points[i + 1], tol, max_depth);
        total.value += r.value;
        total.error += r.error;
    }
    return total;
}

}  // namespace sagin::quad
