#pragma once

#include <stdexcept>
#include <string>

namespace projcurv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& msg) : Error(msg) {}
};

struct NearPoleSingularity : Error {
    explicit NearPoleSingularity(const std::string& msg) : Error(msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

struct InsufficientSmoothness : Error {
    explicit InsufficientSmoothness(const std::string& msg) : Error(msg) {}
};

struct NegativeRadius : Error {
    explicit NegativeRadius(const std::string& msg) : Error(msg) {}
};

struct NonSmooth : Error {
    explicit NonSmooth(const std::string& msg) : Error(msg) {}
};

struct StepTooLarge : Error {
    explicit StepTooLarge(const std::string& msg) : Error(msg) {}
};

/// The nu-integrand of the third reconstruction integral does not stay
/// bounded towards the pole; carries the fitted log-divergence coefficient.
struct PoleDivergence : Error {
    PoleDivergence(const std::string& msg, double c1_coeff) : Error(msg), c1(c1_coeff) {}
    double c1;
};

struct QuadratureUnderresolved : Error {
    explicit QuadratureUnderresolved(const std::string& msg) : Error(msg) {}
};

struct IllConditioned : Error {
    explicit IllConditioned(const std::string& msg) : Error(msg) {}
};

}  // namespace projcurv
