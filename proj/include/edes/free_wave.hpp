#pragma once

#include "edes/quadrature.hpp"
#include "edes/smooth_data.hpp"
#include "edes/types.hpp"

namespace edes {

// Evaluators for the flat-space problem v_rr = Lap v, v(.,0) = data,
// v_r(.,0) = 0. Derivatives in r are obtained by differentiating under the
// integral sign with the supplied gradient/laplacian; the quadrature output
// is never finite-differenced. At r = 0 the closed limit (data.value(x), 0)
// is returned.

/// n = 1, d'Alembert: v = (f(x+r) + f(x-r)) / 2.
FreeWaveSample eval_dalembert(const SmoothData& data, const Vec3& x, double r);

/// n = 3: mean of data.value over the sphere of radius r centred at x,
/// via Gauss-Legendre in cos(theta) times trapezoid in azimuth, refined by
/// doubling both until the tolerances of `quad` are met.
double spherical_mean(const SmoothData& data, const Vec3& x, double r,
                      const QuadratureConfig& quad);

/// n = 3, Kirchhoff: v = M + r M' with M' the spherical mean of grad.y;
/// dv_dr = r * (spherical mean of the laplacian), by the Darboux relation
/// v_r(x,r) = int_0^r Lap v = r * mean(Lap data).
FreeWaveSample eval_kirchhoff(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad);

/// n = 2, Poisson: v = d_r [ r/(2pi) int_{B1} data(x+ry)/sqrt(1-|y|^2) dy ],
/// expanded as v = D + r D'. The endpoint weight singularity is removed by
/// |y| = sin(theta) before quadrature.
FreeWaveSample eval_poisson2d(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad);

/// Dimension dispatch. Uses data.exact_wave when present (fast path for
/// catalog data), otherwise the three quadrature evaluators above.
FreeWaveSample eval_free_wave(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad);

}  // namespace edes
