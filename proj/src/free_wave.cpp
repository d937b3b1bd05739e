#include "edes/free_wave.hpp"

#include <array>
#include <cmath>

namespace edes {

namespace {

struct Means {
    double value = 0.0;   // mean of data.value
    double radial = 0.0;  // mean of grad(data) . y  (y the unit direction)
    double lap = 0.0;     // mean of data.laplacian
};

// One pass of the product rule for the sphere S^2: Gauss-Legendre in
// mu = cos(theta), uniform trapezoid in phi. The mean of a constant is the
// constant (weights sum to one).
Means sphere_pass(const SmoothData& data, const Vec3& x, double r, int order, int nphi) {
    const GaussRule& gl = gauss_legendre(order);
    Means m;
    for (int i = 0; i < order; ++i) {
        const double mu = gl.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        Means ring;
        for (int j = 0; j < nphi; ++j) {
            const double phi = 2.0 * M_PI * j / nphi;
            const Vec3 y{st * std::cos(phi), st * std::sin(phi), mu};
            const Vec3 p = x + r * y;
            ring.value += data.value(p);
            ring.radial += dot(data.gradient(p), y);
            ring.lap += data.laplacian(p);
        }
        const double w = 0.5 * gl.weights[i] / nphi;
        m.value += w * ring.value;
        m.radial += w * ring.radial;
        m.lap += w * ring.lap;
    }
    return m;
}

// Weighted unit-disk mean with weight 1/sqrt(1-|y|^2), normalised so that a
// constant maps to itself: (1/2pi) int_0^{2pi} int_0^{pi/2}
// f(x + r sin(theta) e_phi) sin(theta) dtheta dphi.
Means disk_pass(const SmoothData& data, const Vec3& x, double r, int order, int nphi) {
    const GaussRule& gl = gauss_legendre(order);
    Means m;
    for (int i = 0; i < order; ++i) {
        const double theta = 0.25 * M_PI * (gl.nodes[i] + 1.0);
        const double st = std::sin(theta);
        Means ring;
        for (int j = 0; j < nphi; ++j) {
            const double phi = 2.0 * M_PI * j / nphi;
            const Vec3 y{st * std::cos(phi), st * std::sin(phi), 0.0};
            const Vec3 p = x + r * y;
            ring.value += data.value(p);
            ring.radial += dot(data.gradient(p), y);
            ring.lap += data.laplacian(p);
        }
        // int_0^{pi/2} sin = 1, so the weights sum to one and a constant
        // maps to itself.
        const double w = 0.25 * M_PI * gl.weights[i] * st / nphi;
        m.value += w * ring.value;
        m.radial += w * ring.radial;
        m.lap += w * ring.lap;
    }
    return m;
}

bool means_close(const Means& a, const Means& b, const QuadratureConfig& cfg) {
    auto ok = [&](double u, double v) {
        return std::abs(u - v) <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v));
    };
    return ok(a.value, b.value) && ok(a.radial, b.radial) && ok(a.lap, b.lap);
}

template <typename Pass>
Means refine_means(Pass pass, const QuadratureConfig& cfg, const char* what) {
    int order = cfg.sphere_order;
    int nphi = cfg.azimuth_nodes;
    Means prev = pass(order, nphi);
    for (int k = 0; k < cfg.angular_refinements; ++k) {
        order *= 2;
        nphi *= 2;
        Means next = pass(order, nphi);
        if (means_close(prev, next, cfg)) return next;
        prev = next;
    }
    // One more comparison at the final level before giving up.
    Means last = pass(order * 2, nphi * 2);
    if (means_close(prev, last, cfg)) return last;
    throw QuadratureFailure(std::string("free_wave: ") + what +
                            " mean did not converge at max angular refinement");
}

void require_finite(const FreeWaveSample& s, const char* what) {
    if (!std::isfinite(s.v) || !std::isfinite(s.dv_dr))
        throw NonFiniteIntegrand(std::string("free_wave: non-finite sample from ") + what);
}

}  // namespace

FreeWaveSample eval_dalembert(const SmoothData& data, const Vec3& x, double r) {
    if (data.dim.n() != 1) throw DomainError("free_wave: eval_dalembert requires n = 1");
    if (r < 0) throw DomainError("free_wave: r must be >= 0");
    if (r == 0.0) return {data.value(x), 0.0};
    Vec3 xp = x, xm = x;
    xp[0] += r;
    xm[0] -= r;
    FreeWaveSample s;
    s.v = 0.5 * (data.value(xp) + data.value(xm));
    s.dv_dr = 0.5 * (data.gradient(xp)[0] - data.gradient(xm)[0]);
    require_finite(s, "eval_dalembert");
    return s;
}

double spherical_mean(const SmoothData& data, const Vec3& x, double r,
                      const QuadratureConfig& quad) {
    if (data.dim.n() != 3) throw DomainError("free_wave: spherical_mean requires n = 3");
    if (r < 0) throw DomainError("free_wave: r must be >= 0");
    if (r == 0.0) return data.value(x);
    Means m = refine_means(
        [&](int order, int nphi) { return sphere_pass(data, x, r, order, nphi); }, quad,
        "sphere");
    return m.value;
}

FreeWaveSample eval_kirchhoff(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad) {
    if (data.dim.n() != 3) throw DomainError("free_wave: eval_kirchhoff requires n = 3");
    if (r < 0) throw DomainError("free_wave: r must be >= 0");
    if (r == 0.0) return {data.value(x), 0.0};
    Means m = refine_means(
        [&](int order, int nphi) { return sphere_pass(data, x, r, order, nphi); }, quad,
        "sphere");
    FreeWaveSample s;
    s.v = m.value + r * m.radial;  // M + r M'
    s.dv_dr = r * m.lap;
    require_finite(s, "eval_kirchhoff");
    return s;
}

FreeWaveSample eval_poisson2d(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad) {
    if (data.dim.n() != 2) throw DomainError("free_wave: eval_poisson2d requires n = 2");
    if (r < 0) throw DomainError("free_wave: r must be >= 0");
    if (r == 0.0) return {data.value(x), 0.0};
    Means m = refine_means(
        [&](int order, int nphi) { return disk_pass(data, x, r, order, nphi); }, quad,
        "disk");
    FreeWaveSample s;
    s.v = m.value + r * m.radial;  // d_r(r D(r)) with D' moved under the integral
    s.dv_dr = r * m.lap;
    require_finite(s, "eval_poisson2d");
    return s;
}

FreeWaveSample eval_free_wave(const SmoothData& data, const Vec3& x, double r,
                              const QuadratureConfig& quad) {
    if (r < 0) throw DomainError("free_wave: r must be >= 0");
    if (r == 0.0) return {data.value(x), 0.0};
    if (data.exact_wave) {
        FreeWaveSample s = data.exact_wave(x, r);
        require_finite(s, "exact_wave");
        return s;
    }
    switch (data.dim.n()) {
        case 1:
            return eval_dalembert(data, x, r);
        case 2:
            return eval_poisson2d(data, x, r, quad);
        default:
            return eval_kirchhoff(data, x, r, quad);
    }
}

}  // namespace edes
