#pragma once

#include <functional>
#include <vector>

#include "edes/types.hpp"

namespace edes {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 20;
    int base_order = 16;        // Gauss-Legendre nodes per panel
    double grading_exponent = 3.0;  // mesh grading toward a singular left endpoint

    // Angular product rules used by the sphere / disk means.
    int sphere_order = 32;    // Gauss-Legendre nodes in cos(theta)
    int azimuth_nodes = 64;   // trapezoid nodes in the periodic angle
    int angular_refinements = 4;  // allowed doublings of the angular rule

    void validate() const;

    /// Same tolerances scaled by `factor`; used for nested inner integrals.
    QuadratureConfig tightened(double factor) const {
        QuadratureConfig c = *this;
        c.abs_tol *= factor;
        c.rel_tol *= factor;
        return c;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels_used = 0;
};

/// Adaptive Gauss-Legendre integration of f over [a, b]. Error per panel is
/// estimated by comparing the base_order rule against the doubled-order rule.
/// Throws QuadratureFailure when the tolerance cannot be met within max_depth
/// bisections and NonFiniteIntegrand when f returns NaN/Inf.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg);

/// integrate() after the substitution x = a + (b-a) u^grading_exponent, which
/// concentrates nodes at the left endpoint. Handles integrands with an
/// integrable algebraic singularity at x = a.
QuadratureResult integrate_graded_left(const std::function<double(double)>& f, double a,
                                       double b, const QuadratureConfig& cfg);

/// Gauss-Legendre rule on [-1, 1]; nodes/weights are cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

}  // namespace edes
