#pragma once

#include <complex>
#include <functional>

namespace jensen {

using Complex = std::complex<double>;

// Real-valued field on (a subset of) the plane.
using ScalarField = std::function<double(Complex)>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}
