#include "edes/source.hpp"

#include <cmath>
#include <string>

namespace edes {

SingularityClass SingularityClass::regular(double eps) {
    if (!(eps > 0)) throw DomainError("source: Regular class requires eps > 0");
    SingularityClass c;
    c.kind = Kind::Regular;
    c.epsilon = eps;
    return c;
}

SingularityClass SingularityClass::log_singular(SmoothData f0,
                                                std::optional<SmoothData> f0_lap) {
    SingularityClass c;
    c.kind = Kind::LogSingular;
    c.f0 = std::move(f0);
    c.f0_laplacian = std::move(f0_lap);
    return c;
}

SingularityClass SingularityClass::power_singular(double a, SmoothData f0,
                                                  std::optional<SmoothData> f0_lap) {
    if (!(a > 2.0 && a < 8.0 / 3.0))
        throw DomainError("source: PowerSingular requires a in (2, 8/3), got " +
                          std::to_string(a));
    SingularityClass c;
    c.kind = Kind::PowerSingular;
    c.a = a;
    c.f0 = std::move(f0);
    c.f0_laplacian = std::move(f0_lap);
    return c;
}

SmoothData scaled(const SmoothData& d, double factor) {
    SmoothData out = d;
    auto value = d.value;
    auto gradient = d.gradient;
    auto laplacian = d.laplacian;
    out.value = [value, factor](const Vec3& x) { return factor * value(x); };
    out.gradient = [gradient, factor](const Vec3& x) { return factor * gradient(x); };
    out.laplacian = [laplacian, factor](const Vec3& x) { return factor * laplacian(x); };
    if (d.exact_wave) {
        auto wave = d.exact_wave;
        out.exact_wave = [wave, factor](const Vec3& x, double r) {
            FreeWaveSample s = wave(x, r);
            return FreeWaveSample{factor * s.v, factor * s.dv_dr};
        };
    }
    return out;
}

SmoothData SourceFunction::slice(double b) const {
    if (!(b > 0)) throw DomainError("source: slice requires t > 0");
    if (separable) return scaled(separable->spatial, separable->time_factor(b));
    SmoothData d;
    d.dim = dim;
    d.support_radius = support_radius;
    d.radial_center = radial_center;
    auto v = value;
    auto g = gradient;
    auto l = laplacian;
    d.value = [v, b](const Vec3& x) { return v(x, b); };
    d.gradient = [g, b](const Vec3& x) { return g(x, b); };
    d.laplacian = [l, b](const Vec3& x) { return l(x, b); };
    return d;
}

double sampled_growth_bound(const SourceFunction& f, double box, int samples,
                            std::mt19937_64& rng) {
    double w = 2.0;
    switch (f.sclass.kind) {
        case SingularityClass::Kind::Regular:
            w = 2.0 - f.sclass.epsilon;
            break;
        case SingularityClass::Kind::LogSingular:
            w = 2.0;
            break;
        case SingularityClass::Kind::PowerSingular:
            w = f.sclass.a;
            break;
    }
    std::uniform_real_distribution<double> uni(-box, box);
    double bound = 0.0;
    for (int s = 0; s < samples; ++s) {
        Vec3 x{0, 0, 0};
        for (int axis = 0; axis < f.dim.n(); ++axis) x[axis] = uni(rng);
        for (int k = 1; k <= 12; ++k) {
            double t = std::pow(2.0, -k);
            bound = std::max(bound, std::abs(f.value(x, t)) * std::pow(t, w));
        }
    }
    return bound;
}

}  // namespace edes
