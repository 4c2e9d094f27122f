#include "recfilt/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recfilt/error.hpp"

namespace recfilt {

Window::Window(Index kmin, Index kmax) : kmin_(kmin), kmax_(kmax) {
  if (kmin > kmax) {
    throw Error(ErrorCode::InvalidArgument,
                "window " + std::to_string(kmin) + ":" + std::to_string(kmax) + " is empty");
  }
}

FiniteSignal::FiniteSignal(Index start, ComplexVector samples) : start_(start), samples_(std::move(samples)) {
  const Complex zero{};
  auto first = std::find_if(samples_.begin(), samples_.end(), [&](const Complex& v) { return v != zero; });
  if (first == samples_.end()) {
    samples_.clear();
    start_ = 0;
    return;
  }
  auto last = std::find_if(samples_.rbegin(), samples_.rend(), [&](const Complex& v) { return v != zero; });
  samples_.erase(last.base(), samples_.end());
  start_ += first - samples_.begin();
  samples_.erase(samples_.begin(), first);
}

FiniteSignal FiniteSignal::sampled(const std::function<Complex(Index)>& view, const Window& window) {
  ComplexVector v;
  v.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = window.kmin(); k <= window.kmax(); ++k) v.push_back(view(k));
  return FiniteSignal(window.kmin(), std::move(v));
}

ComplexVector FiniteSignal::values_on(const Window& window) const {
  ComplexVector v;
  v.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = window.kmin(); k <= window.kmax(); ++k) v.push_back((*this)(k));
  return v;
}

double FiniteSignal::l1_norm() const noexcept {
  double s = 0.0;
  for (const auto& v : samples_) s += std::abs(v);
  return s;
}

FiniteSignal FiniteSignal::shifted(Index m) const {
  if (is_zero()) return {};
  return FiniteSignal(start_ + m, samples_);
}

FiniteSignal FiniteSignal::scaled(Complex a) const {
  ComplexVector v = samples_;
  for (auto& s : v) s *= a;
  return FiniteSignal(start_, std::move(v));
}

namespace {

FiniteSignal combine(const FiniteSignal& a, const FiniteSignal& b, double sign) {
  if (a.is_zero()) return b.scaled(sign);
  if (b.is_zero()) return a;
  const Index lo = std::min(a.start(), b.start());
  const Index hi = std::max(a.end(), b.end());
  ComplexVector v(static_cast<std::size_t>(hi - lo));
  for (Index k = lo; k < hi; ++k) v[static_cast<std::size_t>(k - lo)] = a(k) + sign * b(k);
  return FiniteSignal(lo, std::move(v));
}

}  // namespace

FiniteSignal operator+(const FiniteSignal& a, const FiniteSignal& b) { return combine(a, b, 1.0); }
FiniteSignal operator-(const FiniteSignal& a, const FiniteSignal& b) { return combine(a, b, -1.0); }

Complex GeometricTerm::operator()(Index k) const noexcept {
  if (!active_at(k)) return Complex{};
  // std::pow(complex, int) goes through exp/log for some inputs; repeated
  // squaring keeps exact dyadic ratios exact.
  Complex base = k >= 0 ? ratio : Complex{1.0} / ratio;
  auto n = static_cast<std::uint64_t>(k >= 0 ? k : -k);
  Complex acc{1.0};
  while (n != 0) {
    if (n & 1U) acc *= base;
    base *= base;
    n >>= 1U;
  }
  return coefficient * acc;
}

Complex GeometricSum::operator()(Index k) const noexcept {
  Complex s = correction(k);
  for (const auto& t : terms) s += t(k);
  return s;
}

bool GeometricSum::has_causal_terms() const noexcept {
  return std::any_of(terms.begin(), terms.end(), [](const GeometricTerm& t) { return t.side == Side::Causal; });
}

bool GeometricSum::has_anticausal_terms() const noexcept {
  return std::any_of(terms.begin(), terms.end(), [](const GeometricTerm& t) { return t.side == Side::Anticausal; });
}

SequenceView view_of(FiniteSignal s) {
  return [s = std::move(s)](Index k) { return s(k); };
}

SequenceView view_of(GeometricSum s) {
  return [s = std::move(s)](Index k) { return s(k); };
}

Complex eval(const GeometricSum& s, Index k) noexcept { return s(k); }

FiniteSignal impulse(Index shift) { return FiniteSignal(shift, {Complex{1.0}}); }

FiniteSignal exp_signal(double f, const Window& window, bool causal_gate) {
  ComplexVector v;
  v.reserve(static_cast<std::size_t>(window.size()));
  for (Index k = window.kmin(); k <= window.kmax(); ++k) {
    if (causal_gate && k < 0) {
      v.emplace_back();
      continue;
    }
    // Reduce f*k modulo 1 before scaling by 2 pi so that large k keep
    // full phase accuracy.
    const double cycles = std::fmod(f * static_cast<double>(k), 1.0);
    v.push_back(std::polar(1.0, 2.0 * kPi * cycles));
  }
  return FiniteSignal(window.kmin(), std::move(v));
}

FiniteSignal convolve(const FiniteSignal& a, const FiniteSignal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto as = a.samples();
  const auto bs = b.samples();
  ComplexVector out(as.size() + bs.size() - 1);
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) out[i + j] += as[i] * bs[j];
  return FiniteSignal(a.start() + b.start(), std::move(out));
}

FiniteSignal convolve_closed(const GeometricSum& h, const FiniteSignal& x, const Window& window) {
  ComplexVector out(static_cast<std::size_t>(window.size()));
  const auto xs = x.samples();
  for (Index k = window.kmin(); k <= window.kmax(); ++k) {
    Complex acc{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Index idx = x.start() + static_cast<Index>(i);
      acc += xs[i] * h(k - idx);
    }
    out[static_cast<std::size_t>(k - window.kmin())] = acc;
  }
  return FiniteSignal(window.kmin(), std::move(out));
}

}  // namespace recfilt
