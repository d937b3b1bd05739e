#pragma once

#include <optional>

#include "edes/smooth_data.hpp"
#include "edes/types.hpp"

namespace edes {

/// Growth class of a source near t = 0:
///   Regular(eps):      |f| <= C t^{eps-2}, eps > 0
///   LogSingular:       t^2 f -> f0, correction tau(t) = t ln t - t
///   PowerSingular(a):  t^a f -> f0, a in (2, 8/3),
///                      correction tau(t) = t^{3-a} / ((3-a)(2-a))
struct SingularityClass {
    enum class Kind { Regular, LogSingular, PowerSingular };

    Kind kind = Kind::Regular;
    double epsilon = 1.0;  // Regular only
    double a = 0.0;        // PowerSingular only
    std::optional<SmoothData> f0;            // limit profile (singular kinds)
    std::optional<SmoothData> f0_laplacian;  // Lap f0 as its own data bundle

    static SingularityClass regular(double eps);
    static SingularityClass log_singular(SmoothData f0,
                                         std::optional<SmoothData> f0_lap = {});
    static SingularityClass power_singular(double a, SmoothData f0,
                                           std::optional<SmoothData> f0_lap = {});
};

/// Time-parametrised data bundle f(x, t) for t > 0.
struct SourceFunction {
    SpatialDim dim{1};
    std::function<double(const Vec3&, double)> value;
    std::function<Vec3(const Vec3&, double)> gradient;
    std::function<double(const Vec3&, double)> laplacian;
    SingularityClass sclass;
    double support_radius = kInf;
    std::optional<Vec3> radial_center;

    /// Separable fast path: f(x, t) = spatial(x) * time_factor(t). Slices
    /// are then rescalings of one bundle and keep its exact_wave closure.
    struct Separable {
        SmoothData spatial;
        std::function<double(double)> time_factor;
    };
    std::optional<Separable> separable;

    /// The fixed-time data slice f(., b).
    SmoothData slice(double b) const;
};

/// data with all fields multiplied by `factor` (the closure scales linearly).
SmoothData scaled(const SmoothData& d, double factor);

/// max over a sample grid of |f(x,t)| t^w where w is 2-eps, 2, or a per the
/// class; finite values support the declared growth bound.
double sampled_growth_bound(const SourceFunction& f, double box, int samples,
                            std::mt19937_64& rng);

}  // namespace edes
