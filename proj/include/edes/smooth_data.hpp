#pragma once

#include <optional>
#include <random>
#include <vector>

#include "edes/types.hpp"

namespace edes {

/// Spatial data bundle with analytic derivatives. Houses Cauchy data and
/// time-slices of source functions. Immutable once built; safe to share
/// across threads.
struct SmoothData {
    SpatialDim dim{1};
    ScalarField value;
    VectorField gradient;
    ScalarField laplacian;
    double support_radius = kInf;

    /// Set when value(x) depends only on |x - radial_center|. Enables
    /// memoised evaluation on grids.
    std::optional<Vec3> radial_center;

    /// Optional closed-form solution of v_rr = Lap v, v(.,0) = value,
    /// v_r(.,0) = 0. When present, eval_free_wave uses it instead of the
    /// quadrature evaluators; it must agree with them (property-tested).
    std::function<FreeWaveSample(const Vec3&, double)> exact_wave;

    /// Build derivatives by fourth-order central differences from a
    /// value-only function. Invariant checks on such data are advisory.
    static SmoothData from_value_only(SpatialDim dim, ScalarField value,
                                      double fd_step = 1e-3,
                                      double support_radius = kInf);
};

/// Drop the analytic fast path so evaluation goes through quadrature.
SmoothData without_exact_wave(SmoothData d);

struct DataCheckReport {
    double max_gradient_dev = 0.0;   // gradient vs central differences of value
    double max_laplacian_dev = 0.0;  // laplacian vs divergence of gradient
    double max_support_leak = 0.0;   // |value| beyond support_radius
    bool ok(double tol) const {
        return max_gradient_dev <= tol && max_laplacian_dev <= tol && max_support_leak <= tol;
    }
};

/// Sample the consistency invariants of a data bundle at random points in
/// [-box, box]^dim. `fd_step` is the differencing step of the check itself.
DataCheckReport check_smooth_data(const SmoothData& data, double box, int samples,
                                  std::mt19937_64& rng, double fd_step = 1e-4);

}  // namespace edes
