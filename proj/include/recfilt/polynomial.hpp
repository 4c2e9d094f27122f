#pragma once

#include <span>

#include "recfilt/types.hpp"

namespace recfilt {

// Coefficient vectors are ordered from the highest power down:
// {a0, a1, ..., an} stands for a0 z^n + a1 z^(n-1) + ... + an.

Complex polyval(std::span<const Complex> coeffs, Complex z) noexcept;

/// All roots, with multiplicity, of a polynomial with nonzero leading
/// coefficient. Eigenvalues of the companion matrix, each refined by Newton
/// steps on the original polynomial while the residual keeps shrinking.
ComplexVector polynomial_roots(std::span<const Complex> coeffs);

/// Monic polynomial prod (z - r_i).
ComplexVector poly_from_roots(std::span<const Complex> roots);

}  // namespace recfilt
