#pragma once

#include <optional>

#include "recfilt/recursive_filter.hpp"
#include "recfilt/sequences.hpp"

namespace recfilt {

/// Outcome of one executable fact check.
struct FactReport {
  int fact = 0;
  bool ok = false;
  double max_residual = 0.0;
  std::optional<Index> counterexample_k;
  /// Per-index residuals backing the verdict, in window order.
  std::vector<double> residuals;
};

FactReport to_fact_report(int fact, const SolutionReport& report);

/// h[0..L-1]: the zero-initialised response to delta.
FiniteSignal impulse_response_prefix(const RecursiveFilter& filter, std::size_t length);

/// h[k] = sum c_i lambda_i^k u[k], with c fitted to the first N' simulated
/// samples (N' = reduced order; roots at the origin do not affect h). The
/// all-zero filter gives h = delta as a bare correction.
///
/// Throws RepeatedRoots, or SingularSystem when the fit does not reproduce
/// the first 2N' + 1 simulated samples to 1e-8 relative.
GeometricSum impulse_response_closed(const RecursiveFilter& filter);

/// The convolution system y~ = h * x built from the zero-initialised
/// impulse response.
class AssociatedLTI {
 public:
  static constexpr std::size_t kMaxDefaultPrefix = 64;
  static constexpr double kPrefixTailTarget = 1e-12;

  explicit AssociatedLTI(RecursiveFilter filter, std::optional<std::size_t> prefix_length = std::nullopt);

  const RecursiveFilter& filter() const noexcept { return filter_; }
  const std::optional<GeometricSum>& h_closed() const noexcept { return h_closed_; }
  const FiniteSignal& h_prefix() const noexcept { return h_prefix_; }
  std::size_t prefix_length() const noexcept { return prefix_length_; }
  bool stable() const noexcept { return stable_; }

  /// Upper bound on sum_{k >= L} |h[k]|; +inf when it cannot be certified
  /// (unstable filter).
  double tail_bound() const noexcept { return tail_bound_; }

  /// h[k] from the closed form when present, otherwise from the prefix
  /// (zero past L - 1).
  Complex h(Index k) const noexcept;

 private:
  RecursiveFilter filter_;
  std::optional<GeometricSum> h_closed_;
  FiniteSignal h_prefix_;
  std::size_t prefix_length_ = 0;
  bool stable_ = false;
  double tail_bound_ = 0.0;
};

/// Samples of (h * x)[k] on `window`. Exact with a closed form; otherwise a
/// prefix convolution whose truncation error is at most tail_bound * |x|_1,
/// refused with TruncationUncertified when that exceeds `tol`.
FiniteSignal lti_output(const AssociatedLTI& sys, const FiniteSignal& x, const Window& window,
                        double tol = kDefaultCheckTolerance);

/// Fact 1: (x, h * x) is a solution pair of the recursion on `window`.
FactReport verify_fact1(const RecursiveFilter& filter, const FiniteSignal& x, const Window& window,
                        double tol = kDefaultCheckTolerance);
/// Same check against a caller-supplied y~, for detector sanity runs.
FactReport verify_fact1_against(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y_tilde,
                                const Window& window, double tol = kDefaultCheckTolerance);

/// Fact 2: for causal x the zero-initialised run equals h * x on [0, kmax]
/// and h * x vanishes on [-N, -1]. Throws NotCausalInput if x has support
/// below 0.
FactReport verify_fact2(const RecursiveFilter& filter, const FiniteSignal& x, Index kmax,
                        double tol = kDefaultCheckTolerance);

struct Fact3Decomposition {
  FactReport report;
  /// y - h * x sampled on the padded window.
  FiniteSignal homogeneous;
};

/// Fact 3: splits y into h * x plus a remainder and checks that the
/// remainder solves the zero-input recursion on `window`.
Fact3Decomposition decompose_fact3(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y,
                                   const Window& window, double tol = kDefaultCheckTolerance);

}  // namespace recfilt
