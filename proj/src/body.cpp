#include "projcurv/body.hpp"

#include <cmath>
#include <sstream>

#include "projcurv/errors.hpp"

namespace projcurv {

BodySpec::BodySpec(const BodySpec& o)
    : kind(o.kind), radius(o.radius), center(o.center), a(o.a), b(o.b), c(o.c),
      summands(o.summands), offset(o.offset) {
    if (o.base) base = std::make_unique<BodySpec>(*o.base);
}

BodySpec& BodySpec::operator=(const BodySpec& o) {
    if (this == &o) return *this;
    BodySpec tmp(o);
    *this = std::move(tmp);
    return *this;
}

BodySpec BodySpec::ball(double r, const Vec3& center) {
    BodySpec s;
    s.kind = Kind::ball;
    s.radius = r;
    s.center = center;
    return s;
}

BodySpec BodySpec::ellipsoid(double a, double b, double c) {
    BodySpec s;
    s.kind = Kind::ellipsoid;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
}

BodySpec BodySpec::minkowski(std::vector<BodySpec> parts) {
    BodySpec s;
    s.kind = Kind::minkowski_sum;
    s.summands = std::move(parts);
    return s;
}

BodySpec BodySpec::translated(BodySpec body, const Vec3& offset) {
    BodySpec s;
    s.kind = Kind::translated;
    s.base = std::make_unique<BodySpec>(std::move(body));
    s.offset = offset;
    return s;
}

namespace {

Vec3 vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw InvalidParameter("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

nlohmann::json vec_to_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

}  // namespace

BodySpec BodySpec::from_json(const nlohmann::json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "ball") {
        BodySpec s = ball(j.value("radius", 1.0));
        if (j.contains("center")) s.center = vec_from_json(j.at("center"));
        return s;
    }
    if (kind == "ellipsoid") {
        const auto& ax = j.at("semi_axes");
        if (!ax.is_array() || ax.size() != 3) throw InvalidParameter("ellipsoid.semi_axes must have 3 entries");
        return ellipsoid(ax[0].get<double>(), ax[1].get<double>(), ax[2].get<double>());
    }
    if (kind == "minkowski_sum") {
        std::vector<BodySpec> parts;
        for (const auto& p : j.at("summands")) parts.push_back(from_json(p));
        if (parts.empty()) throw InvalidParameter("minkowski_sum needs at least one summand");
        return minkowski(std::move(parts));
    }
    if (kind == "translated") {
        return translated(from_json(j.at("body")), vec_from_json(j.at("offset")));
    }
    throw InvalidParameter("unknown body kind '" + kind + "'");
}

nlohmann::json BodySpec::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::ball:
            j["kind"] = "ball";
            j["radius"] = radius;
            j["center"] = vec_to_json(center);
            break;
        case Kind::ellipsoid:
            j["kind"] = "ellipsoid";
            j["semi_axes"] = nlohmann::json::array({a, b, c});
            break;
        case Kind::minkowski_sum: {
            j["kind"] = "minkowski_sum";
            auto arr = nlohmann::json::array();
            for (const auto& s : summands) arr.push_back(s.to_json());
            j["summands"] = arr;
            break;
        }
        case Kind::translated:
            j["kind"] = "translated";
            j["body"] = base->to_json();
            j["offset"] = vec_to_json(offset);
            break;
    }
    return j;
}

std::string BodySpec::id() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::ball:
            os << "ball(r=" << radius << ")";
            break;
        case Kind::ellipsoid:
            os << "ellipsoid(" << a << "," << b << "," << c << ")";
            break;
        case Kind::minkowski_sum:
            os << "minkowski_sum(n=" << summands.size() << ")";
            break;
        case Kind::translated:
            os << "translated(" << base->id() << ")";
            break;
    }
    return os.str();
}

SupportFunction support(const BodySpec& spec) {
    switch (spec.kind) {
        case BodySpec::Kind::ball: {
            if (!(spec.radius > 0)) throw InvalidParameter("ball radius must be positive");
            const double r = spec.radius;
            const Vec3 c = spec.center;
            SupportFunction H;
            H.smoothness_order = 16;
            H.value = [r, c](const Direction& d) { return r + c.dot(d.vec()); };
            H.gradient = [r, c](const Direction& d) { return c + d.vec() * r; };
            return H;
        }
        case BodySpec::Kind::ellipsoid: {
            if (!(spec.a > 0 && spec.b > 0 && spec.c > 0))
                throw InvalidParameter("ellipsoid semi-axes must be positive");
            const Vec3 d2{spec.a * spec.a, spec.b * spec.b, spec.c * spec.c};
            SupportFunction H;
            H.smoothness_order = 16;
            H.value = [d2](const Direction& u) {
                const Vec3& v = u.vec();
                return std::sqrt(d2.x * v.x * v.x + d2.y * v.y * v.y + d2.z * v.z * v.z);
            };
            H.gradient = [d2, H](const Direction& u) {
                const Vec3& v = u.vec();
                const double h = H.value(u);
                return Vec3{d2.x * v.x, d2.y * v.y, d2.z * v.z} / h;
            };
            return H;
        }
        case BodySpec::Kind::minkowski_sum: {
            std::vector<SupportFunction> parts;
            int smooth = 16;
            for (const auto& s : spec.summands) {
                parts.push_back(support(s));
                smooth = std::min(smooth, parts.back().smoothness_order);
            }
            SupportFunction H;
            H.smoothness_order = smooth;
            H.value = [parts](const Direction& d) {
                double acc = 0.0;
                for (const auto& p : parts) acc += p.value(d);
                return acc;
            };
            H.gradient = [parts](const Direction& d) {
                Vec3 acc{0, 0, 0};
                for (const auto& p : parts) acc += p.gradient(d);
                return acc;
            };
            return H;
        }
        case BodySpec::Kind::translated: {
            SupportFunction base = support(*spec.base);
            const Vec3 v = spec.offset;
            SupportFunction H;
            H.smoothness_order = base.smoothness_order;
            H.value = [base, v](const Direction& d) { return base.value(d) + v.dot(d.vec()); };
            H.gradient = [base, v](const Direction& d) { return base.gradient(d) + v; };
            return H;
        }
    }
    throw InvalidParameter("unreachable body kind");
}

std::function<double(double)> restrict_to_circle(const SupportFunction& H, const Direction& omega,
                                                 const Frame& frame) {
    auto [east, north] = frame.circle_frame(omega);
    auto value = H.value;
    return [value, east, north](double phi) {
        return value(Direction(east.vec() * std::cos(phi) + north.vec() * std::sin(phi)));
    };
}

namespace {

/// Tangential gradient of H at Omega by central differences along two
/// orthogonal tangents, with a Richardson cross-check.
Vec3 numeric_surface_gradient(const SupportFunction& H, const Direction& Omega) {
    auto [e1, e2] = Frame::canonical().circle_frame(Omega);
    auto deriv = [&](const Direction& t, double h) {
        // Direction() renormalizes, so this differentiates H along the sphere.
        return (H.value(Direction(Omega.vec() + t.vec() * h)) -
                H.value(Direction(Omega.vec() - t.vec() * h))) /
               (2.0 * h);
    };
    const double h = 1e-4;
    Vec3 g{0, 0, 0};
    for (const Direction& t : {e1, e2}) {
        const double d1 = deriv(t, h);
        const double d2 = deriv(t, h / 2);
        const double extrap = (4.0 * d2 - d1) / 3.0;
        if (std::abs(d1 - d2) > 1e-3 * (1.0 + std::abs(extrap)))
            throw NonSmooth("surface gradient finite differences disagree");
        g += t.vec() * extrap;
    }
    return g;
}

}  // namespace

SurfacePoint surface_point(const SupportFunction& H, const Direction& Omega) {
    if (H.smoothness_order < 1)
        throw InsufficientSmoothness("surface_point needs a 1-smooth support function");
    if (H.gradient) return {H.gradient(Omega), Omega};
    const Vec3 tangential = numeric_surface_gradient(H, Omega);
    return {Omega.vec() * H.value(Omega) + tangential, Omega};
}

const std::vector<Direction>& sample_directions_26() {
    static const std::vector<Direction> dirs = [] {
        std::vector<Direction> d;
        for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
                for (int z = -1; z <= 1; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    d.emplace_back(Vec3(x, y, z));
                }
        return d;
    }();
    return dirs;
}

double support_scale(const SupportFunction& H) {
    double m = 0.0;
    for (const auto& d : sample_directions_26()) m = std::max(m, std::abs(H.value(d)));
    return m > 0 ? m : 1.0;
}

}  // namespace projcurv
