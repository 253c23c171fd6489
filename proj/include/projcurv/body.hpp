#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "projcurv/frames.hpp"
#include "projcurv/vec.hpp"

#include "json.hpp"

namespace projcurv {

/// Support function H on S^2. The 1-homogeneous extension H(x) = |x| H(x/|x|)
/// is implied, never stored. gradient, when set, returns grad of the extension
/// at the unit vector (so position of the boundary point with that normal).
struct SupportFunction {
    enum class Provenance { analytic, sampled_grid };

    std::function<double(const Direction&)> value;
    std::function<Vec3(const Direction&)> gradient;  // may be empty
    int smoothness_order = 0;
    Provenance provenance = Provenance::analytic;

    double operator()(const Direction& d) const { return value(d); }
};

/// Parametric test bodies with known ground truth.
struct BodySpec {
    enum class Kind { ball, ellipsoid, minkowski_sum, translated };

    Kind kind = Kind::ball;
    double radius = 1.0;                  // ball
    Vec3 center{0, 0, 0};                 // ball
    double a = 1.0, b = 1.0, c = 1.0;     // ellipsoid semi-axes
    std::vector<BodySpec> summands;       // minkowski_sum
    std::unique_ptr<BodySpec> base;       // translated
    Vec3 offset{0, 0, 0};                 // translated

    BodySpec() = default;
    BodySpec(const BodySpec& o);
    BodySpec& operator=(const BodySpec& o);
    BodySpec(BodySpec&&) = default;
    BodySpec& operator=(BodySpec&&) = default;

    static BodySpec ball(double r, const Vec3& center = {0, 0, 0});
    static BodySpec ellipsoid(double a, double b, double c);
    static BodySpec minkowski(std::vector<BodySpec> parts);
    static BodySpec translated(BodySpec body, const Vec3& offset);

    static BodySpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string id() const;
};

/// Build the support function of a gallery body (validates parameters).
SupportFunction support(const BodySpec& spec);

/// Restriction of H to the great circle S_omega as a function of the flag angle.
std::function<double(double)> restrict_to_circle(const SupportFunction& H, const Direction& omega,
                                                 const Frame& frame = Frame::canonical());

struct SurfacePoint {
    Vec3 position;
    Direction normal;
};

/// Boundary point whose outer normal is Omega: P = H(Omega) Omega + grad_S H.
/// Falls back to central differences when no analytic gradient is attached;
/// throws NonSmooth if the two-step estimates disagree.
SurfacePoint surface_point(const SupportFunction& H, const Direction& Omega);

/// max |H| over a fixed direction sample; used for scale-aware tolerances.
double support_scale(const SupportFunction& H);

/// Fixed 26-direction sample (cube vertices/edges/faces, normalized).
const std::vector<Direction>& sample_directions_26();

}  // namespace projcurv
