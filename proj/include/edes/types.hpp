#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace edes {

// Exception hierarchy. Messages carry a module prefix ("quadrature: ...")
// so errors surfaced by the CLI identify their origin.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct QuadratureFailure : Error {
    using Error::Error;
};
struct NonFiniteIntegrand : Error {
    using Error::Error;
};
struct SingularityMismatch : Error {
    using Error::Error;
};
struct UnsupportedGamma : Error {
    using Error::Error;
};
struct CFLViolation : Error {
    using Error::Error;
};
struct BlowupDetected : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

/// Spatial dimension, restricted to 1, 2, or 3.
class SpatialDim {
public:
    explicit SpatialDim(int n) : n_(n) {
        if (n < 1 || n > 3)
            throw DomainError("types: spatial dimension must be 1, 2, or 3, got " +
                              std::to_string(n));
    }
    int n() const { return n_; }
    friend bool operator==(SpatialDim a, SpatialDim b) { return a.n_ == b.n_; }
    friend bool operator!=(SpatialDim a, SpatialDim b) { return a.n_ != b.n_; }

private:
    int n_;
};

// Points are stored as fixed 3-vectors; unused trailing components are zero.
using Vec3 = std::array<double, 3>;

constexpr double kInf = std::numeric_limits<double>::infinity();

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

using ScalarField = std::function<double(const Vec3&)>;
using VectorField = std::function<Vec3(const Vec3&)>;
using SpaceTimeField = std::function<double(const Vec3&, double)>;

/// Value of the flat-space wave solution v(x, r) and its derivative in the
/// second argument.
struct FreeWaveSample {
    double v = 0.0;
    double dv_dr = 0.0;
};

}  // namespace edes
