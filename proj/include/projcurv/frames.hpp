#pragma once

#include <optional>
#include <tuple>

#include "projcurv/errors.hpp"
#include "projcurv/vec.hpp"

namespace projcurv {

/// Orthonormal right-handed triple {east, north, pole} with north = pole x east.
/// The pole fixes latitude nu, east fixes the tau = 0 meridian. Frames made by
/// canonical() / about() carry a fallback axis so the derived circle frame at
/// omega = +-pole stays defined; bare frames throw DegenerateFrame there.
class Frame {
  public:
    Frame(const Direction& pole, const Direction& east)
        : pole_(pole), east_(east), north_(Direction(pole.cross(east))) {
        if (std::abs(pole.dot(east)) > 1e-9)
            throw InvalidParameter("Frame: east must be orthogonal to pole");
    }

    /// Global frame: pole z, east x (so north = y).
    static const Frame& canonical();

    /// Frame with the given pole and a deterministic east reference.
    static Frame about(const Direction& pole);

    const Direction& pole() const { return pole_; }
    const Direction& east() const { return east_; }
    const Direction& north() const { return north_; }
    bool has_fallback() const { return fallback_.has_value(); }

    /// Local circle frame {E, N} on S_omega: E = normalize(pole x omega),
    /// N = omega x E. Near omega = +-pole uses the fallback axis if present.
    std::pair<Direction, Direction> circle_frame(const Direction& omega) const;

  private:
    Direction pole_, east_, north_;
    std::optional<Direction> fallback_;
};

/// Latitude/longitude relative to a frame; nu in [-pi/2, pi/2], tau in [0, 2pi).
struct SphericalCoord {
    double nu = 0.0;
    double tau = 0.0;

    Direction to_direction(const Frame& f) const;
    static SphericalCoord from_direction(const Direction& d, const Frame& f);
};

/// A flag (omega, phi): phi is the angle on S_omega measured from the East of
/// omega's circle frame, anticlockwise seen from outside the sphere at omega.
struct Flag {
    Direction omega;
    double phi = 0.0;
};

/// Dual flag (Omega, phi_star) per the flag duality: Omega is the spatial
/// direction of phi, phi_star locates omega on S_Omega.
struct DualFlag {
    Direction Omega;
    double phi_star = 0.0;
};

/// Point of S_omega at angle phi from the East reference.
Direction flag_to_point(const Direction& omega, double phi, const Frame& frame = Frame::canonical());
inline Direction flag_to_point(const Flag& f, const Frame& frame = Frame::canonical()) {
    return flag_to_point(f.omega, f.phi, frame);
}

/// Angle of the point p (assumed on S_omega) from the East reference at omega.
double point_to_angle(const Direction& omega, const Direction& p, const Frame& frame = Frame::canonical());

DualFlag dual(const Flag& f, const Frame& frame = Frame::canonical());
/// Inverse dual (the map is an involution).
Flag dual(const DualFlag& d, const Frame& frame = Frame::canonical());

/// Rates (dtau/dphi, dphi/dphi, dnu/dphi) of the flag coordinates under right
/// screw rotation about the flag's dual direction:
///   (sin(phi)/cos(nu), -tan(nu) sin(phi), -cos(phi)).
std::tuple<double, double, double> rotation_derivatives(double nu, double phi);

/// Rigid rotation of a flag about the axis Omega by angle delta (right screw).
Flag rotate_flag_about(const Direction& Omega, const Flag& f, double delta,
                       const Frame& frame = Frame::canonical());

/// Rodrigues rotation of v about unit axis by angle.
Vec3 rotate_about(const Direction& axis, const Vec3& v, double angle);

}  // namespace projcurv
