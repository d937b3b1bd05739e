#pragma once

#include "edes/smooth_data.hpp"
#include "edes/source.hpp"

namespace edes::catalog {

SmoothData constant(SpatialDim dim, double c);

/// coeffs . x + offset (components beyond dim ignored).
SmoothData linear(SpatialDim dim, const Vec3& coeffs, double offset);

/// amplitude * exp(-|x - center|^2 / width^2). Carries analytic derivatives,
/// a finite support radius at the |value| = support_cut level, the radial
/// flag, and for n = 1, 3 a closed-form free-wave solution.
SmoothData gaussian(SpatialDim dim, double amplitude, double width,
                    const Vec3& center = {0, 0, 0}, double support_cut = 1e-12);

/// The Laplacian of the gaussian above as a data bundle of its own (value,
/// gradient, laplacian, closure). Needed as f0_laplacian for singular
/// sources.
SmoothData gaussian_laplacian(SpatialDim dim, double amplitude, double width,
                              const Vec3& center = {0, 0, 0},
                              double support_cut = 1e-12);

/// f(x,t) = c * t^{exponent}; Regular(eps = exponent + 2) when exponent > -2,
/// else classified per the exponent (-2 -> LogSingular with f0 = c,
/// exponent in (-8/3, -2) -> PowerSingular).
SourceFunction source_constant_power(SpatialDim dim, double c, double exponent);

/// f(x,t) = spatial(x) * t^{eps-2}.
SourceFunction source_regular(SmoothData spatial, double eps);

/// f(x,t) = spatial(x) * t^{-2}; f0 = spatial.
SourceFunction source_log_singular(SmoothData spatial, SmoothData spatial_laplacian);

/// f(x,t) = spatial(x) * t^{-a}; f0 = spatial, a in (2, 8/3).
SourceFunction source_power_singular(SmoothData spatial, SmoothData spatial_laplacian,
                                     double a);

/// Closed-form free-wave closure for radial data in n = 3 from the odd
/// 1-D extension u(z) = z * profile(z):
///   v(x, r)   = (u(rho - r) + u(rho + r)) / (2 rho),   rho = |x - center|,
///   dv_dr     = (u'(rho + r) - u'(rho - r)) / (2 rho),
/// with the rho -> 0 limits u'(r) and u''(r).
std::function<FreeWaveSample(const Vec3&, double)> radial3d_exact_wave(
    std::function<double(double)> u, std::function<double(double)> du,
    std::function<double(double)> ddu, const Vec3& center, double rho_floor);

}  // namespace edes::catalog
