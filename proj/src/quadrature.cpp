#include "edes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace edes {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("quadrature: tolerances must be positive");
    if (max_depth < 1) throw DomainError("quadrature: max_depth must be >= 1");
    if (base_order < 2) throw DomainError("quadrature: base_order must be >= 2");
    if (!(grading_exponent >= 1.0))
        throw DomainError("quadrature: grading_exponent must be >= 1");
    if (sphere_order < 2 || azimuth_nodes < 4)
        throw DomainError("quadrature: angular rule too small");
}

namespace {

GaussRule compute_gauss_legendre(int order) {
    // Newton iteration on P_n; standard symmetric construction.
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

namespace {

double panel_sum(const std::function<double(double)>& f, double lo, double hi,
                 const GaussRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double y = f(mid + half * rule.nodes[i]);
        if (!std::isfinite(y))
            throw NonFiniteIntegrand("quadrature: integrand non-finite at x = " +
                                     std::to_string(mid + half * rule.nodes[i]));
        s += rule.weights[i] * y;
    }
    return s * half;
}

struct Panel {
    double lo, hi;
    int depth;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
    cfg.validate();
    if (a > b) throw DomainError("quadrature: integration bounds reversed");
    QuadratureResult res;
    if (a == b) return res;

    const GaussRule& coarse = gauss_legendre(cfg.base_order);
    const GaussRule& fine = gauss_legendre(2 * cfg.base_order);

    // Scale for the relative tolerance: coarse whole-interval estimate,
    // updated as panels accumulate.
    double scale = std::abs(panel_sum(f, a, b, fine));

    std::vector<Panel> stack{{a, b, 0}};
    const double len_total = b - a;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        double i_coarse = panel_sum(f, p.lo, p.hi, coarse);
        double i_fine = panel_sum(f, p.lo, p.hi, fine);
        double err = std::abs(i_fine - i_coarse);
        double budget = std::max(cfg.abs_tol, cfg.rel_tol * std::max(scale, std::abs(res.value))) *
                        ((p.hi - p.lo) / len_total);
        if (err <= budget || (p.hi - p.lo) < 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) {
            res.value += i_fine;
            res.error_estimate += err;
            res.panels_used += 1;
        } else if (p.depth >= cfg.max_depth) {
            throw QuadratureFailure(
                "quadrature: tolerance not met at max_depth on panel [" +
                std::to_string(p.lo) + ", " + std::to_string(p.hi) +
                "], panel error " + std::to_string(err));
        } else {
            double mid = 0.5 * (p.lo + p.hi);
            stack.push_back({p.lo, mid, p.depth + 1});
            stack.push_back({mid, p.hi, p.depth + 1});
        }
    }
    return res;
}

QuadratureResult integrate_graded_left(const std::function<double(double)>& f, double a,
                                       double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (a > b) throw DomainError("quadrature: integration bounds reversed");
    if (a == b) return {};
    const double len = b - a;
    const double g = cfg.grading_exponent;
    auto sub = [&](double u) {
        double x = a + len * std::pow(u, g);
        return f(x) * len * g * std::pow(u, g - 1.0);
    };
    return integrate(sub, 0.0, 1.0, cfg);
}

}  // namespace edes
