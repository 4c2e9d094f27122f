#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace recfilt {

using Complex = std::complex<double>;
using Index = std::int64_t;
using ComplexVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

/// Relative separation below which two roots (or pole magnitudes) are
/// treated as equal.
inline constexpr double kTiesTolerance = 1e-8;

/// Default absolute tolerance for recursion residual checks.
inline constexpr double kDefaultCheckTolerance = 1e-9;

}  // namespace recfilt
