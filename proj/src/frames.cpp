#include "projcurv/frames.hpp"

#include <cmath>

namespace projcurv {

namespace {
constexpr double kDegenerateTol = 1e-9;
}

const Frame& Frame::canonical() {
    static const Frame f = [] {
        Frame g(Direction(0, 0, 1), Direction(1, 0, 0));
        g.fallback_ = Direction(0, 1, 0);
        return g;
    }();
    return f;
}

Frame Frame::about(const Direction& pole) {
    Vec3 e = Vec3(0, 0, 1).cross(pole.vec());
    if (e.norm() < kDegenerateTol) e = Vec3(0, 1, 0).cross(pole.vec());
    Frame f(pole, Direction(e));
    f.fallback_ = f.north_;
    return f;
}

std::pair<Direction, Direction> Frame::circle_frame(const Direction& omega) const {
    Vec3 e = pole_.cross(omega);
    if (e.norm() < kDegenerateTol) {
        if (!fallback_)
            throw DegenerateFrame("circle frame undefined: omega coincides with the frame pole");
        e = fallback_->cross(omega);
    }
    Direction east(e);
    Direction north(omega.cross(east));
    return {east, north};
}

Direction SphericalCoord::to_direction(const Frame& f) const {
    const double cn = std::cos(nu);
    return Direction(f.pole().vec() * std::sin(nu) +
                     (f.east().vec() * std::cos(tau) + f.north().vec() * std::sin(tau)) * cn);
}

SphericalCoord SphericalCoord::from_direction(const Direction& d, const Frame& f) {
    SphericalCoord c;
    double s = d.dot(f.pole());
    s = std::clamp(s, -1.0, 1.0);
    c.nu = std::asin(s);
    c.tau = wrap_angle(std::atan2(d.dot(f.north()), d.dot(f.east())));
    return c;
}

Direction flag_to_point(const Direction& omega, double phi, const Frame& frame) {
    auto [east, north] = frame.circle_frame(omega);
    return Direction(east.vec() * std::cos(phi) + north.vec() * std::sin(phi));
}

double point_to_angle(const Direction& omega, const Direction& p, const Frame& frame) {
    auto [east, north] = frame.circle_frame(omega);
    return wrap_angle(std::atan2(p.dot(north), p.dot(east)));
}

DualFlag dual(const Flag& f, const Frame& frame) {
    const Direction Omega = flag_to_point(f, frame);
    return DualFlag{Omega, point_to_angle(Omega, f.omega, frame)};
}

Flag dual(const DualFlag& d, const Frame& frame) {
    const Direction omega = flag_to_point(d.Omega, d.phi_star, frame);
    return Flag{omega, point_to_angle(omega, d.Omega, frame)};
}

std::tuple<double, double, double> rotation_derivatives(double nu, double phi) {
    const double cn = std::cos(nu);
    if (std::abs(cn) <= 1e-12)
        throw NearPoleSingularity("rotation derivatives undefined at |nu| = pi/2");
    const double sp = std::sin(phi);
    return {sp / cn, -std::tan(nu) * sp, -std::cos(phi)};
}

Vec3 rotate_about(const Direction& axis, const Vec3& v, double angle) {
    const Vec3& u = axis.vec();
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + u.cross(v) * s + u * (u.dot(v) * (1.0 - c));
}

Flag rotate_flag_about(const Direction& Omega, const Flag& f, double delta, const Frame& frame) {
    const Direction p = flag_to_point(f, frame);
    const Direction omega2(rotate_about(Omega, f.omega.vec(), delta));
    const Direction p2(rotate_about(Omega, p.vec(), delta));
    return Flag{omega2, point_to_angle(omega2, p2, frame)};
}

}  // namespace projcurv
