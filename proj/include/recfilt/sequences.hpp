#pragma once

#include <functional>
#include <span>
#include <vector>

#include "recfilt/types.hpp"

namespace recfilt {

/// Inclusive index range [kmin, kmax] used to take a finite look at a
/// doubly-infinite sequence.
class Window {
 public:
  Window(Index kmin, Index kmax);

  Index kmin() const noexcept { return kmin_; }
  Index kmax() const noexcept { return kmax_; }
  Index size() const noexcept { return kmax_ - kmin_ + 1; }
  bool contains(Index k) const noexcept { return k >= kmin_ && k <= kmax_; }

  /// Extends the lower edge by `below` indices; used to cover the N past
  /// samples a recursion check reads.
  Window padded_below(Index below) const { return Window(kmin_ - below, kmax_); }

  bool operator==(const Window&) const = default;

 private:
  Index kmin_;
  Index kmax_;
};

/// Complex sequence that is zero outside a finite stretch of indices.
///
/// The stored form is canonical: leading and trailing exact zeros are
/// trimmed, and the all-zero signal has no samples and start 0. Two signals
/// therefore compare equal iff they agree at every integer.
class FiniteSignal {
 public:
  FiniteSignal() = default;
  FiniteSignal(Index start, ComplexVector samples);

  /// Samples `view` on every index of `window`.
  static FiniteSignal sampled(const std::function<Complex(Index)>& view, const Window& window);

  Index start() const noexcept { return start_; }
  /// One past the last stored index.
  Index end() const noexcept { return start_ + static_cast<Index>(samples_.size()); }
  std::span<const Complex> samples() const noexcept { return samples_; }
  bool is_zero() const noexcept { return samples_.empty(); }

  Complex operator()(Index k) const noexcept {
    if (k < start_ || k >= end()) return Complex{};
    return samples_[static_cast<std::size_t>(k - start_)];
  }

  /// Values on every index of `window`, zeros included.
  ComplexVector values_on(const Window& window) const;

  /// Sum of magnitudes.
  double l1_norm() const noexcept;

  FiniteSignal shifted(Index m) const;  // (shifted(m))[k] = (*this)[k - m]
  FiniteSignal scaled(Complex a) const;

  bool operator==(const FiniteSignal&) const = default;

 private:
  Index start_ = 0;
  ComplexVector samples_;
};

FiniteSignal operator+(const FiniteSignal& a, const FiniteSignal& b);
FiniteSignal operator-(const FiniteSignal& a, const FiniteSignal& b);

enum class Side { Causal, Anticausal };

/// One-sided geometric sequence c * p^k, active on k >= 0 (causal) or on
/// k <= -1 (anticausal).
struct GeometricTerm {
  Complex coefficient;
  Complex ratio;
  Side side = Side::Causal;

  bool active_at(Index k) const noexcept { return side == Side::Causal ? k >= 0 : k <= -1; }
  Complex operator()(Index k) const noexcept;

  bool operator==(const GeometricTerm&) const = default;
};

/// Closed-form two-sided sequence: a sum of one-sided geometric terms plus a
/// finite correction. A two-sided geometric c * p^k is stored as a causal
/// and an anticausal term sharing (c, p).
struct GeometricSum {
  std::vector<GeometricTerm> terms;
  FiniteSignal correction;

  Complex operator()(Index k) const noexcept;

  bool has_causal_terms() const noexcept;
  bool has_anticausal_terms() const noexcept;

  bool operator==(const GeometricSum&) const = default;
};

/// Type-erased read-only access to a sequence over all integers.
using SequenceView = std::function<Complex(Index)>;

SequenceView view_of(FiniteSignal s);
SequenceView view_of(GeometricSum s);

Complex eval(const GeometricSum& s, Index k) noexcept;

/// delta[k - shift].
FiniteSignal impulse(Index shift = 0);

/// exp(j 2 pi f k) on `window`; with `causal_gate`, samples at k < 0 are zero.
FiniteSignal exp_signal(double f, const Window& window, bool causal_gate);

/// Exact linear convolution of two finite-support signals.
FiniteSignal convolve(const FiniteSignal& a, const FiniteSignal& b);

/// Samples of (h * x)[k] for k in `window`. Each sample is a finite sum
/// because x has finite support, so there is no truncation.
FiniteSignal convolve_closed(const GeometricSum& h, const FiniteSignal& x, const Window& window);

}  // namespace recfilt
