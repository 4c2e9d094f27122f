#pragma once

#include <optional>
#include <span>

#include "recfilt/sequences.hpp"
#include "recfilt/types.hpp"

namespace recfilt {

/// y[k] = sum_{i=1..N} alpha_i y[k-i] + x[k], for every integer k.
class RecursiveFilter {
 public:
  explicit RecursiveFilter(ComplexVector alpha);

  std::size_t order() const noexcept { return alpha_.size(); }
  std::span<const Complex> coeffs() const noexcept { return alpha_; }
  /// 1-based, matching the recursion.
  Complex alpha(std::size_t i) const { return alpha_.at(i - 1); }

  /// Order after dropping trailing zero coefficients. Each dropped
  /// coefficient is a characteristic root at the origin.
  std::size_t reduced_order() const noexcept;
  RecursiveFilter reduced() const;

  /// lambda^N - alpha_1 lambda^(N-1) - ... - alpha_N, highest power first.
  ComplexVector characteristic_polynomial() const;

  bool operator==(const RecursiveFilter&) const = default;

 private:
  ComplexVector alpha_;
};

/// Values of y[-N], ..., y[-1], in that order.
class Initialization {
 public:
  explicit Initialization(ComplexVector values);
  static Initialization zeros(std::size_t order) { return Initialization(ComplexVector(order)); }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  /// y[k] for k in [-N, -1].
  Complex at(Index k) const;

 private:
  ComplexVector values_;
};

struct Violation {
  Index k = 0;
  Complex lhs;  // y[k]
  Complex rhs;  // sum alpha_i y[k-i] + x[k]
  double residual = 0.0;
};

struct SolutionReport {
  bool ok = true;
  double max_residual = 0.0;
  std::optional<Violation> first_violation;
  /// |y[k] - sum alpha_i y[k-i] - x[k]| for every k of the checked window.
  std::vector<double> residuals;
};

/// y[0..kmax] by forward iteration from y[-N..-1] = init.
FiniteSignal run_forward(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                         Index kmax);

/// y[kmin..-N-1] by solving the recursion for y[k-N]. Requires alpha_N != 0
/// (SingularBackstep otherwise) and kmin < -N.
FiniteSignal run_backward(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                          Index kmin);

/// The initialised filter's output on `window`: init on [-N, -1], forward
/// iteration above it and backward iteration below it.
FiniteSignal simulate(const RecursiveFilter& filter, const Initialization& init, const FiniteSignal& x,
                      const Window& window);

/// Checks the recursion at every k in `window`; y is read on
/// [window.kmin - N, window.kmax].
SolutionReport check_solution_pair(const RecursiveFilter& filter, const SequenceView& x, const SequenceView& y,
                                   const Window& window, double tol = kDefaultCheckTolerance);
SolutionReport check_solution_pair(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y,
                                   const Window& window, double tol = kDefaultCheckTolerance);

/// All N characteristic roots; roots at the origin (trailing zero
/// coefficients) are reported as exact zeros at the end of the list.
ComplexVector characteristic_roots(const RecursiveFilter& filter);

/// Characteristic roots excluding the exact zeros contributed by trailing
/// zero coefficients.
ComplexVector nonzero_characteristic_roots(const RecursiveFilter& filter);

/// True when no two roots lie within relative distance `ties_tol`.
bool roots_distinct(std::span<const Complex> roots, double ties_tol = kTiesTolerance) noexcept;

bool is_stable(const RecursiveFilter& filter);

/// Largest characteristic root magnitude.
double spectral_radius(const RecursiveFilter& filter);

/// The zero-input solution through y[-N..-1] = init, in closed form
/// sum c_i lambda_i^k (each a causal + anticausal term pair).
///
/// With roots at the origin (alpha_N = 0) the recursion only constrains the
/// last N' = reduced_order() values; the geometric part is fitted to
/// y[-N'..-1] and the remaining init values are held by the finite
/// correction. The result then satisfies the zero-input recursion for k >= 0
/// and k < -N, and on [-N, -1] only if the init values are themselves
/// consistent with the recursion.
///
/// Throws RepeatedRoots or SingularSystem.
GeometricSum homogeneous_from_init(const RecursiveFilter& filter, const Initialization& init);

}  // namespace recfilt
