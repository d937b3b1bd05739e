#include "edes/catalog.hpp"

#include <cmath>
#include <string>

namespace edes::catalog {

SmoothData constant(SpatialDim dim, double c) {
    SmoothData d;
    d.dim = dim;
    d.value = [c](const Vec3&) { return c; };
    d.gradient = [](const Vec3&) { return Vec3{0, 0, 0}; };
    d.laplacian = [](const Vec3&) { return 0.0; };
    d.radial_center = Vec3{0, 0, 0};
    d.exact_wave = [c](const Vec3&, double) { return FreeWaveSample{c, 0.0}; };
    return d;
}

SmoothData linear(SpatialDim dim, const Vec3& coeffs, double offset) {
    Vec3 k{0, 0, 0};
    for (int i = 0; i < dim.n(); ++i) k[i] = coeffs[i];
    SmoothData d;
    d.dim = dim;
    d.value = [k, offset](const Vec3& x) { return dot(k, x) + offset; };
    d.gradient = [k](const Vec3&) { return k; };
    d.laplacian = [](const Vec3&) { return 0.0; };
    // harmonic and static: the wave evolution leaves it unchanged
    d.exact_wave = [k, offset](const Vec3& x, double) {
        return FreeWaveSample{dot(k, x) + offset, 0.0};
    };
    return d;
}

std::function<FreeWaveSample(const Vec3&, double)> radial3d_exact_wave(
    std::function<double(double)> u, std::function<double(double)> du,
    std::function<double(double)> ddu, const Vec3& center, double rho_floor) {
    return [u, du, ddu, center, rho_floor](const Vec3& x, double r) {
        const double rho = norm(x - center);
        if (rho < rho_floor) return FreeWaveSample{du(r), ddu(r)};
        FreeWaveSample s;
        s.v = (u(rho - r) + u(rho + r)) / (2.0 * rho);
        s.dv_dr = (du(rho + r) - du(rho - r)) / (2.0 * rho);
        return s;
    };
}

namespace {

double gaussian_support(double amplitude, double width, double cut) {
    double ratio = std::abs(amplitude) / cut;
    if (!(ratio > 1.0)) return width;  // degenerate amplitudes: keep it tight
    return width * std::sqrt(std::log(ratio));
}

}  // namespace

SmoothData gaussian(SpatialDim dim, double amplitude, double width, const Vec3& center,
                    double support_cut) {
    if (!(width > 0)) throw DomainError("catalog: gaussian width must be positive");
    const double w2 = width * width;
    const int n = dim.n();
    Vec3 c{0, 0, 0};
    for (int i = 0; i < n; ++i) c[i] = center[i];

    SmoothData d;
    d.dim = dim;
    d.support_radius = gaussian_support(amplitude, width, support_cut);
    d.radial_center = c;
    d.value = [amplitude, w2, c](const Vec3& x) {
        Vec3 z = x - c;
        return amplitude * std::exp(-dot(z, z) / w2);
    };
    d.gradient = [amplitude, w2, c](const Vec3& x) {
        Vec3 z = x - c;
        double g = amplitude * std::exp(-dot(z, z) / w2);
        return (-2.0 / w2 * g) * z;
    };
    d.laplacian = [amplitude, w2, c, n](const Vec3& x) {
        Vec3 z = x - c;
        double q = dot(z, z);
        return amplitude * std::exp(-q / w2) * (4.0 * q / (w2 * w2) - 2.0 * n / w2);
    };

    if (n == 1) {
        const double cx = c[0];
        d.exact_wave = [amplitude, w2, cx](const Vec3& x, double r) {
            auto g = [&](double z) { return amplitude * std::exp(-(z - cx) * (z - cx) / w2); };
            auto dg = [&](double z) { return -2.0 * (z - cx) / w2 * g(z); };
            FreeWaveSample s;
            s.v = 0.5 * (g(x[0] + r) + g(x[0] - r));
            s.dv_dr = 0.5 * (dg(x[0] + r) - dg(x[0] - r));
            return s;
        };
    } else if (n == 3) {
        auto u = [amplitude, w2](double z) { return amplitude * z * std::exp(-z * z / w2); };
        auto du = [amplitude, w2](double z) {
            return amplitude * (1.0 - 2.0 * z * z / w2) * std::exp(-z * z / w2);
        };
        auto ddu = [amplitude, w2](double z) {
            return amplitude * (4.0 * z * z * z / (w2 * w2) - 6.0 * z / w2) *
                   std::exp(-z * z / w2);
        };
        d.exact_wave = radial3d_exact_wave(u, du, ddu, c, 1e-6 * width);
    }
    return d;
}

SmoothData gaussian_laplacian(SpatialDim dim, double amplitude, double width,
                              const Vec3& center, double support_cut) {
    if (!(width > 0)) throw DomainError("catalog: gaussian width must be positive");
    const double w2 = width * width;
    const double w4 = w2 * w2;
    const int n = dim.n();
    Vec3 c{0, 0, 0};
    for (int i = 0; i < n; ++i) c[i] = center[i];

    SmoothData d;
    d.dim = dim;
    d.support_radius =
        gaussian_support(amplitude * (4.0 / w2 + 2.0 * n / w2), width, support_cut);
    d.radial_center = c;
    d.value = [amplitude, w2, w4, c, n](const Vec3& x) {
        Vec3 z = x - c;
        double q = dot(z, z);
        return amplitude * std::exp(-q / w2) * (4.0 * q / w4 - 2.0 * n / w2);
    };
    d.gradient = [amplitude, w2, w4, c, n](const Vec3& x) {
        Vec3 z = x - c;
        double q = dot(z, z);
        double e = amplitude * std::exp(-q / w2);
        // grad[(4q/w4 - 2n/w2) e] = e z (8/w4 - (2/w2)(4q/w4 - 2n/w2))
        double coef = 8.0 / w4 - (2.0 / w2) * (4.0 * q / w4 - 2.0 * n / w2);
        return (e * coef) * z;
    };
    d.laplacian = [amplitude, w2, w4, c, n](const Vec3& x) {
        Vec3 z = x - c;
        double q = dot(z, z);
        double e = amplitude * std::exp(-q / w2);
        double quad = 4.0 * q / w4 - 2.0 * n / w2;
        return e * (quad * quad - 32.0 * q / (w4 * w2) + 8.0 * n / w4);
    };

    if (n == 3) {
        auto u = [amplitude, w2, w4](double z) {
            return amplitude * z * (4.0 * z * z / w4 - 6.0 / w2) * std::exp(-z * z / w2);
        };
        auto du = [amplitude, w2, w4](double z) {
            double z2 = z * z;
            return amplitude * std::exp(-z2 / w2) *
                   (24.0 * z2 / w4 - 6.0 / w2 - 8.0 * z2 * z2 / (w4 * w2));
        };
        auto ddu = [amplitude, w2, w4](double z) {
            double z2 = z * z;
            // d/dz of du above
            return amplitude * std::exp(-z2 / w2) *
                   (48.0 * z / w4 - 32.0 * z2 * z / (w4 * w2) -
                    (2.0 * z / w2) * (24.0 * z2 / w4 - 6.0 / w2 - 8.0 * z2 * z2 / (w4 * w2)));
        };
        d.exact_wave = radial3d_exact_wave(u, du, ddu, c, 1e-6 * width);
    }
    return d;
}

SourceFunction source_constant_power(SpatialDim dim, double c, double exponent) {
    SmoothData spatial = constant(dim, c);
    SourceFunction f;
    f.dim = dim;
    f.radial_center = Vec3{0, 0, 0};
    f.value = [c, exponent](const Vec3&, double t) { return c * std::pow(t, exponent); };
    f.gradient = [](const Vec3&, double) { return Vec3{0, 0, 0}; };
    f.laplacian = [](const Vec3&, double) { return 0.0; };
    f.separable = SourceFunction::Separable{
        spatial, [exponent](double t) { return std::pow(t, exponent); }};
    if (exponent > -2.0) {
        f.sclass = SingularityClass::regular(exponent + 2.0);
    } else if (exponent == -2.0) {
        f.sclass = SingularityClass::log_singular(constant(dim, c), constant(dim, 0.0));
    } else {
        f.sclass =
            SingularityClass::power_singular(-exponent, constant(dim, c), constant(dim, 0.0));
    }
    return f;
}

namespace {

SourceFunction separable_source(SmoothData spatial, double exponent) {
    SourceFunction f;
    f.dim = spatial.dim;
    f.support_radius = spatial.support_radius;
    f.radial_center = spatial.radial_center;
    auto value = spatial.value;
    auto gradient = spatial.gradient;
    auto laplacian = spatial.laplacian;
    f.value = [value, exponent](const Vec3& x, double t) {
        return value(x) * std::pow(t, exponent);
    };
    f.gradient = [gradient, exponent](const Vec3& x, double t) {
        return std::pow(t, exponent) * gradient(x);
    };
    f.laplacian = [laplacian, exponent](const Vec3& x, double t) {
        return laplacian(x) * std::pow(t, exponent);
    };
    f.separable = SourceFunction::Separable{
        std::move(spatial), [exponent](double t) { return std::pow(t, exponent); }};
    return f;
}

}  // namespace

SourceFunction source_regular(SmoothData spatial, double eps) {
    SourceFunction f = separable_source(std::move(spatial), eps - 2.0);
    f.sclass = SingularityClass::regular(eps);
    return f;
}

SourceFunction source_log_singular(SmoothData spatial, SmoothData spatial_laplacian) {
    SourceFunction f = separable_source(spatial, -2.0);
    f.sclass = SingularityClass::log_singular(std::move(spatial), std::move(spatial_laplacian));
    return f;
}

SourceFunction source_power_singular(SmoothData spatial, SmoothData spatial_laplacian,
                                     double a) {
    SourceFunction f = separable_source(spatial, -a);
    f.sclass =
        SingularityClass::power_singular(a, std::move(spatial), std::move(spatial_laplacian));
    return f;
}

}  // namespace edes::catalog
