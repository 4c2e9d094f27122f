#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "recfilt/associated_lti.hpp"
#include "recfilt/recursive_filter.hpp"
#include "recfilt/sequences.hpp"

namespace recfilt {

// Frequencies are in cycles/sample throughout.

/// H(f) = 1 / (1 - sum alpha_i e^{-j 2 pi f i}). PoleOnUnitCircle when the
/// denominator magnitude is at most 1e-12.
Complex frequency_response(const RecursiveFilter& filter, double f);

/// sum_{k=0}^{L-1} h[k] e^{-j 2 pi f k}.
Complex dtft_truncated(const FiniteSignal& h, double f, std::size_t length);
Complex dtft_truncated(const GeometricSum& h, double f, std::size_t length);

/// y[k] - H(f) e^{j 2 pi f k} on [0, kmax], where y is the zero-initialised
/// response to u[k] e^{j 2 pi f k}.
FiniteSignal steady_state_deviation(const RecursiveFilter& filter, double f, Index kmax);

/// |steady_state_deviation| on [0, kmax].
std::vector<double> settling_error_curve(const RecursiveFilter& filter, double f, Index kmax);

/// Smallest k <= kcap with |y[j] - H(f) e^{j 2 pi f j}| <= tol for every j
/// in [k, kcap]. Throws Unstable for unstable filters and NotSettled when
/// the error at kcap still exceeds tol.
Index settling_time(const RecursiveFilter& filter, double f, double tol, Index kcap);

struct FrequencyPoint {
  double f = 0.0;
  /// Empty when the filter has a pole on the unit circle at f.
  std::optional<Complex> response;
};

std::vector<FrequencyPoint> freq_sweep(const RecursiveFilter& filter, std::span<const double> grid);

/// M points f_i = -1/2 + i/M, i = 0..M-1, covering [-1/2, 1/2).
std::vector<double> uniform_grid(std::size_t points);

/// Header "f,re,im,abs,arg" then one row per point. Pole rows carry nan in
/// re, im and arg and inf in abs.
void write_sweep_csv(std::ostream& out, std::span<const FrequencyPoint> points);

/// Fact 4: y[k] = H(f) e^{j 2 pi f k} solves the recursion driven by
/// x[k] = e^{j 2 pi f k} on `window`.
FactReport verify_fact4(const RecursiveFilter& filter, double f, const Window& window,
                        double tol = kDefaultCheckTolerance);

}  // namespace recfilt
