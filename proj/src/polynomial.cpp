#include "recfilt/polynomial.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "recfilt/error.hpp"

namespace recfilt {

Complex polyval(std::span<const Complex> coeffs, Complex z) noexcept {
  Complex acc{};
  for (const auto& c : coeffs) acc = acc * z + c;
  return acc;
}

namespace {

Complex polyder_val(std::span<const Complex> coeffs, Complex z) noexcept {
  const auto n = coeffs.size() - 1;
  Complex acc{};
  for (std::size_t i = 0; i < n; ++i) acc = acc * z + coeffs[i] * static_cast<double>(n - i);
  return acc;
}

Complex polish(std::span<const Complex> coeffs, Complex root) {
  double best = std::abs(polyval(coeffs, root));
  for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
    const Complex d = polyder_val(coeffs, root);
    if (d == Complex{}) break;
    const Complex next = root - polyval(coeffs, root) / d;
    const double r = std::abs(polyval(coeffs, next));
    if (!(r < best)) break;
    best = r;
    root = next;
  }
  return root;
}

}  // namespace

ComplexVector polynomial_roots(std::span<const Complex> coeffs) {
  if (coeffs.empty() || coeffs.front() == Complex{}) {
    throw Error(ErrorCode::InvalidArgument, "polynomial needs a nonzero leading coefficient");
  }
  const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
  if (n == 0) return {};
  if (n == 1) return {-coeffs[1] / coeffs[0]};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -coeffs[static_cast<std::size_t>(j + 1)] / coeffs[0];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "companion eigenvalue iteration did not converge");
  }
  ComplexVector roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(polish(coeffs, solver.eigenvalues()(i)));
  return roots;
}

ComplexVector poly_from_roots(std::span<const Complex> roots) {
  ComplexVector p{Complex{1.0}};
  for (const auto& r : roots) {
    p.push_back(Complex{});
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= r * p[i - 1];
  }
  return p;
}

}  // namespace recfilt
