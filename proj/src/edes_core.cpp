#include "edes/edes_core.hpp"

#include <cmath>
#include <string>

namespace edes {

void ProblemSpec::validate() const {
    if (!phi0 && !phi1 && !source)
        throw DomainError("edes_core: ProblemSpec needs at least one datum");
    if (phi0 && phi0->dim != dim)
        throw DomainError("edes_core: phi0 dimension mismatch");
    if (phi1 && phi1->dim != dim)
        throw DomainError("edes_core: phi1 dimension mismatch");
    if (source && source->dim != dim)
        throw DomainError("edes_core: source dimension mismatch");
    quad.validate();
}

double phi_of_t(double t) {
    if (!(t > 0)) throw DomainError("edes_core: phi(t) requires t > 0");
    return 3.0 * std::cbrt(t);
}

double tau_log(double t) {
    if (!(t > 0)) throw DomainError("edes_core: tau_log requires t > 0");
    return t * std::log(t) - t;
}

double tau_power(double t, double a) {
    if (!(t > 0)) throw DomainError("edes_core: tau_power requires t > 0");
    if (!(a > 2.0 && a < 8.0 / 3.0))
        throw DomainError("edes_core: tau_power requires a in (2, 8/3)");
    return std::pow(t, 3.0 - a) / ((3.0 - a) * (2.0 - a));
}

double kernel_E(const KernelParams& p) {
    if (p.gamma != -1.0)
        throw UnsupportedGamma("edes_core: kernel_E supports gamma = -1 only");
    const double plus = (p.phi_t + p.phi_b) * (p.phi_t + p.phi_b) - p.r * p.r;
    if (!(plus > 0))
        throw DomainError("edes_core: kernel_E requires (phi_t + phi_b)^2 - r^2 > 0");
    const double minus = (p.phi_t - p.phi_b) * (p.phi_t - p.phi_b) - p.r * p.r;
    const double zeta = minus / plus;
    return plus * (1.0 + zeta);
}

double phi0_part(const SmoothData& phi0, const Vec3& x, double t,
                 const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: phi0_part requires t > 0");
    const double radius = phi_of_t(t);
    FreeWaveSample s = eval_free_wave(phi0, x, radius, quad);
    return s.v / t - 3.0 * std::pow(t, -2.0 / 3.0) * s.dv_dr;
}

double phi1_part(const SmoothData& phi1, const Vec3& x, double t,
                 const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: phi1_part requires t > 0");
    const double radius = phi_of_t(t);
    auto integrand = [&](double s) {
        return eval_free_wave(phi1, x, radius * s, quad).v * (1.0 - s * s);
    };
    return 1.5 * integrate(integrand, 0.0, 1.0, quad).value;
}

double source_part(const SourceFunction& f, const Vec3& x, double t,
                   const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: source_part requires t > 0");
    if (f.sclass.kind != SingularityClass::Kind::Regular)
        throw SingularityMismatch("edes_core: source_part requires a Regular source");
    const double radius = phi_of_t(t);
    const QuadratureConfig inner_cfg = quad.tightened(0.1);
    auto outer = [&](double b) {
        const SmoothData slice = f.slice(t * b);
        const double b13 = std::cbrt(b);
        const double b23 = b13 * b13;
        auto inner = [&](double s) {
            return eval_free_wave(slice, x, radius * s, inner_cfg).v *
                   (1.0 + b23 - s * s);
        };
        return b * integrate(inner, 0.0, 1.0 - b13, inner_cfg).value;
    };
    return 1.5 * t * t * integrate_graded_left(outer, 0.0, 1.0, quad).value;
}

double source_part_lr(const SourceFunction& f, const Vec3& x, double t,
                      const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: source_part_lr requires t > 0");
    if (f.sclass.kind != SingularityClass::Kind::Regular)
        throw SingularityMismatch("edes_core: source_part_lr requires a Regular source");
    const double phi_t = phi_of_t(t);
    const QuadratureConfig inner_cfg = quad.tightened(0.1);
    auto outer = [&](double l) {
        const SmoothData slice = f.slice(l);
        const double phi_l = phi_of_t(l);
        const double coef = phi_t * phi_t + phi_l * phi_l;
        auto inner = [&](double r) {
            return eval_free_wave(slice, x, r, inner_cfg).v * (coef - r * r);
        };
        return l * integrate(inner, 0.0, phi_t - phi_l, inner_cfg).value;
    };
    return integrate_graded_left(outer, 0.0, t, quad).value / (18.0 * t);
}

namespace {

// Shared (l, r) double integral of Theorems on singular sources. weight_l is
// l^{-1} (log case) or l^{1-a} (power case); tau likewise per class.
double singular_core(const SourceFunction& f, const Vec3& x, double t,
                     const QuadratureConfig& quad,
                     const std::function<double(double)>& weight_l,
                     const std::function<double(double)>& tau) {
    const SmoothData& f0 = *f.sclass.f0;
    SmoothData f0_lap = f.sclass.f0_laplacian
                            ? *f.sclass.f0_laplacian
                            : SmoothData::from_value_only(f0.dim, f0.laplacian);
    const double phi_t = phi_of_t(t);
    const QuadratureConfig inner_cfg = quad.tightened(0.1);
    auto outer = [&](double l) {
        const SmoothData slice = f.slice(l);
        const double phi_l = phi_of_t(l);
        const double coef = phi_t * phi_t + phi_l * phi_l;
        const double wl = weight_l(l);
        const double tl = std::pow(l, -4.0 / 3.0) * tau(l);
        auto inner = [&](double r) {
            double bracket = l * eval_free_wave(slice, x, r, inner_cfg).v -
                             wl * eval_free_wave(f0, x, r, inner_cfg).v +
                             tl * eval_free_wave(f0_lap, x, r, inner_cfg).v;
            return (coef - r * r) * bracket;
        };
        return integrate(inner, 0.0, phi_t - phi_l, inner_cfg).value;
    };
    const double integral = integrate_graded_left(outer, 0.0, t, quad).value;
    return f0.value(x) * tau(t) / t + integral / (18.0 * t);
}

}  // namespace

double solve_log_singular(const SourceFunction& f, const Vec3& x, double t,
                          const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: solve_log_singular requires t > 0");
    if (f.sclass.kind != SingularityClass::Kind::LogSingular || !f.sclass.f0)
        throw SingularityMismatch(
            "edes_core: solve_log_singular requires a LogSingular source with f0");
    return singular_core(
        f, x, t, quad, [](double l) { return 1.0 / l; },
        [](double l) { return tau_log(l); });
}

double solve_power_singular(const SourceFunction& f, const Vec3& x, double t,
                            const QuadratureConfig& quad) {
    if (!(t > 0)) throw DomainError("edes_core: solve_power_singular requires t > 0");
    if (f.sclass.kind != SingularityClass::Kind::PowerSingular || !f.sclass.f0)
        throw SingularityMismatch(
            "edes_core: solve_power_singular requires a PowerSingular source with f0");
    const double a = f.sclass.a;
    return singular_core(
        f, x, t, quad, [a](double l) { return std::pow(l, 1.0 - a); },
        [a](double l) { return tau_power(l, a); });
}

double solve(const ProblemSpec& spec, const Vec3& x, double t) {
    spec.validate();
    if (!(t > 0)) throw DomainError("edes_core: solve requires t > 0");
    double psi = 0.0;
    if (spec.phi0) psi += phi0_part(*spec.phi0, x, t, spec.quad);
    if (spec.phi1) psi += phi1_part(*spec.phi1, x, t, spec.quad);
    if (spec.source) {
        switch (spec.source->sclass.kind) {
            case SingularityClass::Kind::Regular:
                psi += source_part(*spec.source, x, t, spec.quad);
                break;
            case SingularityClass::Kind::LogSingular:
                psi += solve_log_singular(*spec.source, x, t, spec.quad);
                break;
            case SingularityClass::Kind::PowerSingular:
                psi += solve_power_singular(*spec.source, x, t, spec.quad);
                break;
        }
    }
    return psi;
}

namespace {

double lap_h(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x, double t,
             double h) {
    double s = 0.0;
    const double center = psi(x, t);
    for (int axis = 0; axis < dim.n(); ++axis) {
        Vec3 xp = x, xm = x;
        xp[axis] += h;
        xm[axis] -= h;
        s += psi(xp, t) - 2.0 * center + psi(xm, t);
    }
    return s / (h * h);
}

}  // namespace

double fd_s_route(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x, double t,
                  double h) {
    if (!(t > h)) throw DomainError("edes_core: fd stencil requires t > h");
    auto u = [&psi](const Vec3& p, double s) { return s * psi(p, s); };
    const double u_tt =
        (u(x, t + h) - 2.0 * u(x, t) + u(x, t - h)) / (h * h);
    const double lap_u = lap_h(u, dim, x, t, h);
    return (u_tt - std::pow(t, -4.0 / 3.0) * lap_u) / t;
}

double fd_l_route(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x, double t,
                  double h) {
    if (!(t > h)) throw DomainError("edes_core: fd stencil requires t > h");
    const double psi_tt =
        (psi(x, t + h) - 2.0 * psi(x, t) + psi(x, t - h)) / (h * h);
    const double psi_t = (psi(x, t + h) - psi(x, t - h)) / (2.0 * h);
    return psi_tt - std::pow(t, -4.0 / 3.0) * lap_h(psi, dim, x, t, h) +
           2.0 / t * psi_t;
}

double check_operator_identity(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x,
                               double t, double h) {
    return std::abs(fd_s_route(psi, dim, x, t, h) - fd_l_route(psi, dim, x, t, h));
}

bool InitialConditionReport::monotone() const {
    for (size_t i = 1; i < dev0.size(); ++i)
        if (dev0[i] > dev0[i - 1]) return false;
    for (size_t i = 1; i < dev1.size(); ++i)
        if (dev1[i] > dev1[i - 1]) return false;
    return true;
}

InitialConditionReport check_initial_conditions(const ProblemSpec& spec, const Vec3& x,
                                                std::span<const double> t_sequence) {
    spec.validate();
    InitialConditionReport rep;
    double prev = kInf;
    for (double t : t_sequence) {
        if (!(t > 0) || !(t < prev))
            throw DomainError("edes_core: t_sequence must be positive and decreasing");
        prev = t;
        const double dt = std::min(t / 4.0, 1e-3 * t);
        const double psi = solve(spec, x, t);
        const double psi_t =
            (solve(spec, x, t + dt) - solve(spec, x, t - dt)) / (2.0 * dt);
        const double p0 = spec.phi0 ? spec.phi0->value(x) : 0.0;
        const double lap0 = spec.phi0 ? spec.phi0->laplacian(x) : 0.0;
        const double p1 = spec.phi1 ? spec.phi1->value(x) : 0.0;
        rep.times.push_back(t);
        rep.dev0.push_back(std::abs(t * psi - p0));
        rep.dev1.push_back(
            std::abs(t * psi_t + psi + 3.0 * std::pow(t, -1.0 / 3.0) * lap0 - p1));
    }
    return rep;
}

}  // namespace edes
