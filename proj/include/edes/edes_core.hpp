#pragma once

#include <span>
#include <vector>

#include "edes/free_wave.hpp"
#include "edes/quadrature.hpp"
#include "edes/source.hpp"

namespace edes {

// Solver for the weighted Cauchy problem of the wave equation in the
// Einstein-de Sitter background,
//     psi_tt - t^{-4/3} Lap psi + (2/t) psi_t = f(x, t),  t > 0,
// with data prescribed through the limits
//     t psi -> phi0,   t psi_t + psi + 3 t^{-1/3} Lap phi0 -> phi1
// as t -> 0. Evaluation at t = 0 itself is a DomainError everywhere; the
// weighted limits are only probed through check_initial_conditions.

/// Full problem description. At least one datum must be present and all
/// dimensions must agree.
struct ProblemSpec {
    SpatialDim dim{1};
    std::optional<SmoothData> phi0;
    std::optional<SmoothData> phi1;
    std::optional<SourceFunction> source;
    QuadratureConfig quad;

    void validate() const;
};

/// Characteristic radius phi(t) = 3 t^{1/3}.
double phi_of_t(double t);

/// tau(t) = int_0^t ln s ds = t ln t - t.
double tau_log(double t);

/// tau(t) = t^{3-a} / ((3-a)(2-a)) for a in (2, 8/3); negative since 2-a < 0.
double tau_power(double t, double a);

/// Arguments of the integral-transform kernel E(r, t; 0, b).
struct KernelParams {
    double gamma = -1.0;
    double phi_t = 0.0;
    double phi_b = 0.0;
    double r = 0.0;
};

/// Kernel at gamma = -1, where the hypergeometric factor degenerates to
/// 1 + zeta: E = ((phi_b + phi_t)^2 - r^2) (1 + zeta) with
/// zeta = ((phi_t - phi_b)^2 - r^2) / ((phi_t + phi_b)^2 - r^2).
/// Algebraically equal to 2 (phi_t^2 + phi_b^2 - r^2). Other gamma values
/// are rejected (UnsupportedGamma).
double kernel_E(const KernelParams& p);

/// t^{-1} v_phi0(x, 3t^{1/3}) - 3 t^{-2/3} (d_r v_phi0)(x, 3t^{1/3}).
double phi0_part(const SmoothData& phi0, const Vec3& x, double t,
                 const QuadratureConfig& quad);

/// (3/2) int_0^1 v_phi1(x, 3t^{1/3} s) (1 - s^2) ds.
double phi1_part(const SmoothData& phi1, const Vec3& x, double t,
                 const QuadratureConfig& quad);

/// (3/2) t^2 int_0^1 db int_0^{1-b^{1/3}} ds  b v_f(x, 3t^{1/3}s; tb)
/// (1 + b^{2/3} - s^2). Requires a Regular source (SingularityMismatch
/// otherwise); the b-integral is graded toward b = 0 where the integrand
/// behaves like b^{eps-1}.
double source_part(const SourceFunction& f, const Vec3& x, double t,
                   const QuadratureConfig& quad);

/// The same solution through the (l, r) parametrisation
/// t^{-1}/18 int_0^t dl int_0^{phi(t)-phi(l)} dr  l v_f(x,r;l)
/// (phi^2(t) + phi^2(l) - r^2). Exists as an independent code path for the
/// equivalence property test; source_part is the production route.
double source_part_lr(const SourceFunction& f, const Vec3& x, double t,
                      const QuadratureConfig& quad);

/// Log-singular source (t^2 f -> f0):
/// psi = t^{-1} f0(x) tau(t) + (1/18t) int_0^t dl int_0^{phi(t)-phi(l)} dr
///   (phi^2(t)+phi^2(l)-r^2)
///   ( l v_f(x,r;l) - l^{-1} v_f0(x,r) + l^{-4/3} tau(l) v_{Lap f0}(x,r) )
/// with tau = tau_log. v_{Lap f0} is the free wave applied to the Laplacian
/// of f0 (commutation with the resolving operator), never a difference of
/// v_f0.
double solve_log_singular(const SourceFunction& f, const Vec3& x, double t,
                          const QuadratureConfig& quad);

/// Power-singular source (t^a f -> f0, a in (2, 8/3)); same structure with
/// l^{1-a} v_f0 subtracted and tau = tau_power.
double solve_power_singular(const SourceFunction& f, const Vec3& x, double t,
                            const QuadratureConfig& quad);

/// Superposition of the parts for the present data. Sources dispatch on
/// their singularity class.
double solve(const ProblemSpec& spec, const Vec3& x, double t);

// --- finite-difference routes for the operator identity t^{-1} S t = L ---

/// t^{-1} [ D2_t (t psi) - t^{-4/3} Lap_h (t psi) ] with central stencils of
/// step h.
double fd_s_route(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x, double t,
                  double h);

/// D2_t psi - t^{-4/3} Lap_h psi + (2/t) D_t psi with central stencils.
double fd_l_route(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x, double t,
                  double h);

/// |fd_s_route - fd_l_route|; requires t > h.
double check_operator_identity(const SpaceTimeField& psi, SpatialDim dim, const Vec3& x,
                               double t, double h);

// --- weighted initial conditions ---

struct InitialConditionReport {
    std::vector<double> times;
    std::vector<double> dev0;  // |t psi - phi0(x)|
    std::vector<double> dev1;  // |t psi_t + psi + 3 t^{-1/3} Lap phi0(x) - phi1(x)|

    double final_dev0() const { return dev0.empty() ? 0.0 : dev0.back(); }
    double final_dev1() const { return dev1.empty() ? 0.0 : dev1.back(); }
    bool monotone() const;
};

/// Evaluate the weighted-limit deviations along a decreasing positive time
/// sequence. psi_t uses a central difference with step min(t/4, 1e-3 t).
InitialConditionReport check_initial_conditions(const ProblemSpec& spec, const Vec3& x,
                                                std::span<const double> t_sequence);

}  // namespace edes
