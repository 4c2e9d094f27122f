#include "recfilt/recursive_filter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "recfilt/error.hpp"
#include "recfilt/polynomial.hpp"

namespace recfilt {

RecursiveFilter::RecursiveFilter(ComplexVector alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw Error(ErrorCode::InvalidArgument, "filter order must be at least 1");
  for (const auto& a : alpha_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::InvalidArgument, "filter coefficients must be finite");
    }
  }
}

std::size_t RecursiveFilter::reduced_order() const noexcept {
  std::size_t n = alpha_.size();
  while (n > 0 && alpha_[n - 1] == Complex{}) --n;
  return n;
}

RecursiveFilter RecursiveFilter::reduced() const {
  const auto n = reduced_order();
  if (n == 0) return RecursiveFilter({Complex{}});
  return RecursiveFilter(ComplexVector(alpha_.begin(), alpha_.begin() + static_cast<std::ptrdiff_t>(n)));
}

ComplexVector RecursiveFilter::characteristic_polynomial() const {
  ComplexVector p;
  p.reserve(alpha_.size() + 1);
  p.emplace_back(1.0);
  for (const auto& a : alpha_) p.push_back(-a);
  return p;
}

Initialization::Initialization(ComplexVector values) : values_(std::move(values)) {}

Complex Initialization::at(Index k) const {
  const auto n = static_cast<Index>(values_.size());
  if (k < -n || k > -1) throw Error(ErrorCode::InvalidArgument, "init index out of range");
  return values_[static_cast<std::size_t>(k + n)];
}

namespace {

void require_matching_init(const RecursiveFilter& filter, const Initialization& init) {
  if (init.size() != filter.order()) {
    throw Error(ErrorCode::InvalidArgument, "initialization has " + std::to_string(init.size()) +
                                                " values, filter order is " + std::to_string(filter.order()));
  }
}

}  // namespace

FiniteSignal run_forward(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                         Index kmax) {
  require_matching_init(filter, init);
  if (kmax < 0) throw Error(ErrorCode::InvalidArgument, "kmax must be non-negative");
  const auto n = filter.order();
  // buf[j] holds y[j - N].
  ComplexVector buf(init.values().begin(), init.values().end());
  buf.reserve(n + static_cast<std::size_t>(kmax) + 1);
  for (Index k = 0; k <= kmax; ++k) {
    Complex acc = x(k);
    const std::size_t pos = buf.size();
    for (std::size_t i = 1; i <= n; ++i) acc += filter.alpha(i) * buf[pos - i];
    buf.push_back(acc);
  }
  return FiniteSignal(0, ComplexVector(buf.begin() + static_cast<std::ptrdiff_t>(n), buf.end()));
}

FiniteSignal run_backward(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                          Index kmin) {
  require_matching_init(filter, init);
  const auto n = filter.order();
  const auto ni = static_cast<Index>(n);
  if (kmin >= -ni) throw Error(ErrorCode::InvalidArgument, "kmin must be below -N");
  const Complex last = filter.alpha(n);
  if (last == Complex{}) throw Error(ErrorCode::SingularBackstep, "alpha_N is zero; cannot solve for y[k-N]");

  std::vector<Complex> rev(init.values().rbegin(), init.values().rend());  // y[-1], y[-2], ...
  for (Index k = -1; k - ni >= kmin; --k) {
    // rev[j] = y[-1 - j]
    auto y_at = [&](Index idx) { return rev[static_cast<std::size_t>(-1 - idx)]; };
    Complex acc = y_at(k) - x(k);
    for (std::size_t i = 1; i < n; ++i) acc -= filter.alpha(i) * y_at(k - static_cast<Index>(i));
    rev.push_back(acc / last);
  }
  // Emit y[kmin..-N-1] in increasing index order.
  ComplexVector out;
  out.reserve(static_cast<std::size_t>(-ni - kmin));
  for (Index k = kmin; k <= -ni - 1; ++k) out.push_back(rev[static_cast<std::size_t>(-1 - k)]);
  return FiniteSignal(kmin, std::move(out));
}

FiniteSignal simulate(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                      const Window& window) {
  require_matching_init(filter, init);
  const auto ni = static_cast<Index>(filter.order());
  FiniteSignal forward = window.kmax() >= 0 ? run_forward(filter, init, x, window.kmax()) : FiniteSignal{};
  FiniteSignal backward = window.kmin() < -ni ? run_backward(filter, init, x, window.kmin()) : FiniteSignal{};
  ComplexVector out;
  out.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = window.kmin(); k <= window.kmax(); ++k) {
    if (k >= 0) {
      out.push_back(forward(k));
    } else if (k >= -ni) {
      out.push_back(init.at(k));
    } else {
      out.push_back(backward(k));
    }
  }
  return FiniteSignal(window.kmin(), std::move(out));
}

SolutionReport check_solution_pair(const RecursiveFilter& filter, const SequenceView& x, const SequenceView& y,
                                   const Window& window, double tol) {
  const auto n = filter.order();
  SolutionReport report;
  report.residuals.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = window.kmin(); k <= window.kmax(); ++k) {
    const Complex lhs = y(k);
    Complex rhs = x(k);
    for (std::size_t i = 1; i <= n; ++i) rhs += filter.alpha(i) * y(k - static_cast<Index>(i));
    const double r = std::abs(lhs - rhs);
    report.residuals.push_back(r);
    // NaN never passes.
    if (!(r <= tol)) {
      if (report.ok) report.first_violation = Violation{k, lhs, rhs, r};
      report.ok = false;
    }
    if (!(r <= report.max_residual)) report.max_residual = r;
  }
  return report;
}

SolutionReport check_solution_pair(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y,
                                   const Window& window, double tol) {
  return check_solution_pair(filter, view_of(x), y, window, tol);
}

ComplexVector nonzero_characteristic_roots(const RecursiveFilter& filter) {
  const auto reduced_n = filter.reduced_order();
  if (reduced_n == 0) return {};
  const auto poly = filter.reduced().characteristic_polynomial();
  return polynomial_roots(poly);
}

ComplexVector characteristic_roots(const RecursiveFilter& filter) {
  ComplexVector roots = nonzero_characteristic_roots(filter);
  roots.resize(filter.order(), Complex{});
  return roots;
}

bool roots_distinct(std::span<const Complex> roots, double ties_tol) noexcept {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double scale = std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= ties_tol * scale) return false;
    }
  }
  return true;
}

bool is_stable(const RecursiveFilter& filter) { return spectral_radius(filter) < 1.0; }

double spectral_radius(const RecursiveFilter& filter) {
  double rho = 0.0;
  for (const auto& r : nonzero_characteristic_roots(filter)) rho = std::max(rho, std::abs(r));
  return rho;
}

GeometricSum homogeneous_from_init(const RecursiveFilter& filter, const Initialization& init) {
  require_matching_init(filter, init);
  const auto n = static_cast<Index>(filter.order());
  const ComplexVector roots = nonzero_characteristic_roots(filter);
  const auto m = static_cast<Index>(roots.size());
  if (!roots_distinct(roots)) throw Error(ErrorCode::RepeatedRoots, "characteristic roots are not distinct");

  GeometricSum out;
  if (m > 0) {
    // Generalized Vandermonde system: sum_i c_i lambda_i^k = y[k], k = -m..-1.
    Eigen::MatrixXcd v(m, m);
    Eigen::VectorXcd rhs(m);
    for (Index row = 0; row < m; ++row) {
      const Index k = -m + row;
      for (Index col = 0; col < m; ++col) {
        v(row, col) = GeometricTerm{1.0, roots[static_cast<std::size_t>(col)], Side::Anticausal}(k);
      }
      rhs(row) = init.at(k);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    lu.setThreshold(1e-13);
    if (lu.rank() < m) throw Error(ErrorCode::SingularSystem, "Vandermonde system is numerically singular");
    const Eigen::VectorXcd c = lu.solve(rhs);
    for (Index i = 0; i < m; ++i) {
      const Complex ci = c(i);
      const Complex li = roots[static_cast<std::size_t>(i)];
      out.terms.push_back({ci, li, Side::Causal});
      out.terms.push_back({ci, li, Side::Anticausal});
    }
  }
  // Root-at-origin part: whatever of y[-N..-m-1] the geometric terms miss.
  ComplexVector corr;
  for (Index k = -n; k < -m; ++k) corr.push_back(init.at(k) - out(k));
  out.correction = FiniteSignal(-n, std::move(corr));
  return out;
}

}  // namespace recfilt
