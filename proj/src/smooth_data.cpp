#include "edes/smooth_data.hpp"

#include <cmath>

namespace edes {

namespace {

// Fourth-order central first and second derivative stencils.
double d1_fd4(const ScalarField& f, Vec3 x, int axis, double h) {
    Vec3 p1 = x, p2 = x, m1 = x, m2 = x;
    p1[axis] += h;
    p2[axis] += 2 * h;
    m1[axis] -= h;
    m2[axis] -= 2 * h;
    return (-f(p2) + 8.0 * f(p1) - 8.0 * f(m1) + f(m2)) / (12.0 * h);
}

double d2_fd4(const ScalarField& f, Vec3 x, int axis, double h) {
    Vec3 p1 = x, p2 = x, m1 = x, m2 = x;
    p1[axis] += h;
    p2[axis] += 2 * h;
    m1[axis] -= h;
    m2[axis] -= 2 * h;
    return (-f(p2) + 16.0 * f(p1) - 30.0 * f(x) + 16.0 * f(m1) - f(m2)) / (12.0 * h * h);
}

}  // namespace

SmoothData SmoothData::from_value_only(SpatialDim dim, ScalarField value, double fd_step,
                                       double support_radius) {
    if (!(fd_step > 0)) throw DomainError("smooth_data: fd_step must be positive");
    SmoothData d;
    d.dim = dim;
    d.value = value;
    d.support_radius = support_radius;
    const int n = dim.n();
    d.gradient = [value, n, fd_step](const Vec3& x) {
        Vec3 g{0, 0, 0};
        for (int axis = 0; axis < n; ++axis) g[axis] = d1_fd4(value, x, axis, fd_step);
        return g;
    };
    d.laplacian = [value, n, fd_step](const Vec3& x) {
        double s = 0.0;
        for (int axis = 0; axis < n; ++axis) s += d2_fd4(value, x, axis, fd_step);
        return s;
    };
    return d;
}

SmoothData without_exact_wave(SmoothData d) {
    d.exact_wave = nullptr;
    return d;
}

DataCheckReport check_smooth_data(const SmoothData& data, double box, int samples,
                                  std::mt19937_64& rng, double fd_step) {
    DataCheckReport rep;
    std::uniform_real_distribution<double> uni(-box, box);
    const int n = data.dim.n();
    for (int s = 0; s < samples; ++s) {
        Vec3 x{0, 0, 0};
        for (int axis = 0; axis < n; ++axis) x[axis] = uni(rng);

        Vec3 g = data.gradient(x);
        for (int axis = 0; axis < n; ++axis) {
            double fd = d1_fd4(data.value, x, axis, fd_step);
            rep.max_gradient_dev = std::max(rep.max_gradient_dev, std::abs(g[axis] - fd));
        }

        // divergence of the supplied gradient vs the supplied laplacian
        double div = 0.0;
        for (int axis = 0; axis < n; ++axis) {
            auto comp = [&](const Vec3& p) { return data.gradient(p)[axis]; };
            div += d1_fd4(comp, x, axis, fd_step);
        }
        rep.max_laplacian_dev =
            std::max(rep.max_laplacian_dev, std::abs(div - data.laplacian(x)));

        if (std::isfinite(data.support_radius)) {
            Vec3 far{0, 0, 0};
            double rad = data.support_radius * (1.05 + 0.5 * std::abs(uni(rng)) / box);
            far[0] = rad * ((s % 2 == 0) ? 1.0 : -1.0);
            if (n > 1) {
                far[0] = rad * std::cos(uni(rng));
                far[1] = rad * std::sin(uni(rng));
            }
            rep.max_support_leak = std::max(rep.max_support_leak, std::abs(data.value(far)));
        }
    }
    return rep;
}

}  // namespace edes
