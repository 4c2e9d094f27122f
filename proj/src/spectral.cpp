#include "recfilt/spectral.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "recfilt/error.hpp"

namespace recfilt {

namespace {

// e^{j 2 pi f k} with the phase reduced modulo one cycle first.
Complex phasor(double f, Index k) {
  return std::polar(1.0, 2.0 * kPi * std::fmod(f * static_cast<double>(k), 1.0));
}

}  // namespace

Complex frequency_response(const RecursiveFilter& filter, double f) {
  Complex denom{1.0};
  for (std::size_t i = 1; i <= filter.order(); ++i) denom -= filter.alpha(i) * phasor(-f, static_cast<Index>(i));
  if (std::abs(denom) <= 1e-12) {
    throw Error(ErrorCode::PoleOnUnitCircle, fmt::format("denominator vanishes at f = {}", f));
  }
  return 1.0 / denom;
}

Complex dtft_truncated(const FiniteSignal& h, double f, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidArgument, "DTFT length must be at least 1");
  Complex acc{};
  for (Index k = 0; k < static_cast<Index>(length); ++k) acc += h(k) * phasor(-f, k);
  return acc;
}

Complex dtft_truncated(const GeometricSum& h, double f, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidArgument, "DTFT length must be at least 1");
  return dtft_truncated(FiniteSignal::sampled(view_of(h), Window(0, static_cast<Index>(length) - 1)), f, length);
}

FiniteSignal steady_state_deviation(const RecursiveFilter& filter, double f, Index kmax) {
  const Window window(0, kmax);
  const Complex gain = frequency_response(filter, f);
  const FiniteSignal y = run_forward(filter, Initialization::zeros(filter.order()), exp_signal(f, window, true), kmax);
  ComplexVector d;
  d.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = 0; k <= kmax; ++k) d.push_back(y(k) - gain * phasor(f, k));
  return FiniteSignal(0, std::move(d));
}

std::vector<double> settling_error_curve(const RecursiveFilter& filter, double f, Index kmax) {
  const FiniteSignal d = steady_state_deviation(filter, f, kmax);
  std::vector<double> e;
  e.reserve(static_cast<std::size_t>(kmax + 1));
  for (Index k = 0; k <= kmax; ++k) e.push_back(std::abs(d(k)));
  return e;
}

Index settling_time(const RecursiveFilter& filter, double f, double tol, Index kcap) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (kcap < 0) throw Error(ErrorCode::InvalidArgument, "kcap must be non-negative");
  if (!is_stable(filter)) throw Error(ErrorCode::Unstable, "settling time needs a stable filter");
  const auto e = settling_error_curve(filter, f, kcap);
  if (!(e.back() <= tol)) {
    throw Error(ErrorCode::NotSettled, fmt::format("error {} still above {} at k = {}", e.back(), tol, kcap));
  }
  Index k = kcap;
  while (k > 0 && e[static_cast<std::size_t>(k - 1)] <= tol) --k;
  return k;
}

std::vector<FrequencyPoint> freq_sweep(const RecursiveFilter& filter, std::span<const double> grid) {
  std::vector<FrequencyPoint> out;
  out.reserve(grid.size());
  for (double f : grid) {
    FrequencyPoint p{f, std::nullopt};
    try {
      p.response = frequency_response(filter, f);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleOnUnitCircle) throw;
    }
    out.push_back(p);
  }
  return out;
}

std::vector<double> uniform_grid(std::size_t points) {
  std::vector<double> grid;
  grid.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(-0.5 + static_cast<double>(i) / static_cast<double>(points));
  }
  return grid;
}

void write_sweep_csv(std::ostream& out, std::span<const FrequencyPoint> points) {
  out << "f,re,im,abs,arg\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    if (p.response) {
      const Complex h = *p.response;
      out << fmt::format("{},{},{},{},{}\n", p.f, h.real(), h.imag(), std::abs(h), std::arg(h));
    } else {
      out << fmt::format("{},{},{},{},{}\n", p.f, nan, nan, inf, nan);
    }
  }
}

FactReport verify_fact4(const RecursiveFilter& filter, double f, const Window& window, double tol) {
  const Complex gain = frequency_response(filter, f);
  const SequenceView x = [f](Index k) { return phasor(f, k); };
  const SequenceView y = [f, gain](Index k) { return gain * phasor(f, k); };
  return to_fact_report(4, check_solution_pair(filter, x, y, window, tol));
}

}  // namespace recfilt
