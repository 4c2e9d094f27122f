#include "recfilt/associated_lti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "recfilt/error.hpp"

namespace recfilt {

FactReport to_fact_report(int fact, const SolutionReport& report) {
  FactReport out;
  out.fact = fact;
  out.ok = report.ok;
  out.max_residual = report.max_residual;
  if (report.first_violation) out.counterexample_k = report.first_violation->k;
  out.residuals = report.residuals;
  return out;
}

FiniteSignal impulse_response_prefix(const RecursiveFilter& filter, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::InvalidArgument, "prefix length must be at least 1");
  return run_forward(filter, Initialization::zeros(filter.order()), impulse(0), static_cast<Index>(length) - 1);
}

GeometricSum impulse_response_closed(const RecursiveFilter& filter) {
  const ComplexVector roots = nonzero_characteristic_roots(filter);
  const auto m = static_cast<Index>(roots.size());
  if (m == 0) return GeometricSum{{}, impulse(0)};
  if (!roots_distinct(roots)) throw Error(ErrorCode::RepeatedRoots, "characteristic roots are not distinct");

  const FiniteSignal prefix = impulse_response_prefix(filter, static_cast<std::size_t>(2 * m + 1));
  Eigen::MatrixXcd v(m, m);
  Eigen::VectorXcd rhs(m);
  for (Index k = 0; k < m; ++k) {
    for (Index i = 0; i < m; ++i) v(k, i) = GeometricTerm{1.0, roots[static_cast<std::size_t>(i)], Side::Causal}(k);
    rhs(k) = prefix(k);
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  lu.setThreshold(1e-13);
  if (lu.rank() < m) throw Error(ErrorCode::SingularSystem, "Vandermonde system is numerically singular");
  const Eigen::VectorXcd c = lu.solve(rhs);

  GeometricSum h;
  for (Index i = 0; i < m; ++i) h.terms.push_back({c(i), roots[static_cast<std::size_t>(i)], Side::Causal});

  for (Index k = 0; k <= 2 * m; ++k) {
    const double scale = std::max(1.0, std::abs(prefix(k)));
    if (std::abs(h(k) - prefix(k)) > 1e-8 * scale) {
      throw Error(ErrorCode::SingularSystem, "closed form does not reproduce the simulated impulse response");
    }
  }
  return h;
}

AssociatedLTI::AssociatedLTI(RecursiveFilter filter, std::optional<std::size_t> prefix_length)
    : filter_(std::move(filter)) {
  try {
    h_closed_ = impulse_response_closed(filter_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RepeatedRoots && e.code() != ErrorCode::SingularSystem) throw;
  }
  const double rho = spectral_radius(filter_);
  stable_ = rho < 1.0;

  // Geometric envelope |h[k]| <= C r^k used for the tail bound.
  double envelope_c = 0.0;
  double envelope_r = rho;
  FiniteSignal probe;
  if (h_closed_) {
    for (const auto& t : h_closed_->terms) envelope_c += std::abs(t.coefficient);
    envelope_c = std::max(envelope_c, h_closed_->correction.l1_norm());
  } else if (stable_) {
    // Repeated roots give k^j rho^k growth; fit C against a slightly slower
    // ratio over a generous prefix.
    envelope_r = 0.5 * (1.0 + rho);
    probe = impulse_response_prefix(filter_, 4 * kMaxDefaultPrefix);
    for (Index k = 0; k < probe.end(); ++k) {
      envelope_c = std::max(envelope_c, std::abs(probe(k)) / std::pow(envelope_r, static_cast<double>(k)));
    }
  }

  std::size_t length = kMaxDefaultPrefix;
  if (prefix_length) {
    length = *prefix_length;
  } else if (stable_ && envelope_c > 0.0 && envelope_r > 0.0) {
    // Smallest L with C r^L <= target, capped at the default maximum.
    std::size_t l = 1;
    while (l < kMaxDefaultPrefix && envelope_c * std::pow(envelope_r, static_cast<double>(l)) > kPrefixTailTarget) ++l;
    length = l;
  } else if (stable_) {
    length = 1;
  }
  length = std::max<std::size_t>(length, 2 * filter_.order() + 1);
  prefix_length_ = length;
  h_prefix_ = impulse_response_prefix(filter_, length);

  if (!stable_) {
    tail_bound_ = std::numeric_limits<double>::infinity();
  } else if (envelope_r == 0.0) {
    tail_bound_ = 0.0;  // h is finite (all roots at the origin)
  } else {
    tail_bound_ = envelope_c * std::pow(envelope_r, static_cast<double>(length)) / (1.0 - envelope_r);
  }
}

Complex AssociatedLTI::h(Index k) const noexcept {
  if (h_closed_) return (*h_closed_)(k);
  return h_prefix_(k);
}

FiniteSignal lti_output(const AssociatedLTI& sys, const FiniteSignal& x, const Window& window, double tol) {
  if (x.is_zero()) return {};
  if (sys.h_closed()) return convolve_closed(*sys.h_closed(), x, window);

  // Largest h index any output sample reads.
  const Index needed = window.kmax() - x.start();
  if (needed >= static_cast<Index>(sys.prefix_length())) {
    const double bound = sys.tail_bound() * x.l1_norm();
    if (!(bound <= tol)) {
      throw Error(ErrorCode::TruncationUncertified,
                  "prefix of length " + std::to_string(sys.prefix_length()) +
                      " cannot certify the requested window without a closed-form impulse response");
    }
  }
  ComplexVector out(static_cast<std::size_t>(window.size()));
  const auto xs = x.samples();
  for (Index k = window.kmin(); k <= window.kmax(); ++k) {
    Complex acc{};
    for (std::size_t i = 0; i < xs.size(); ++i) acc += xs[i] * sys.h_prefix()(k - x.start() - static_cast<Index>(i));
    out[static_cast<std::size_t>(k - window.kmin())] = acc;
  }
  return FiniteSignal(window.kmin(), std::move(out));
}

FactReport verify_fact1_against(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y_tilde,
                                const Window& window, double tol) {
  return to_fact_report(1, check_solution_pair(filter, x, y_tilde, window, tol));
}

FactReport verify_fact1(const RecursiveFilter& filter, const FiniteSignal& x, const Window& window, double tol) {
  const AssociatedLTI sys(filter);
  const Window padded = window.padded_below(static_cast<Index>(filter.order()));
  const FiniteSignal y_tilde = lti_output(sys, x, padded, tol);
  return verify_fact1_against(filter, x, view_of(y_tilde), window, tol);
}

FactReport verify_fact2(const RecursiveFilter& filter, const FiniteSignal& x, Index kmax, double tol) {
  if (!x.is_zero() && x.start() < 0) {
    throw Error(ErrorCode::NotCausalInput, "input has support at k = " + std::to_string(x.start()));
  }
  if (kmax < 0) throw Error(ErrorCode::InvalidArgument, "kmax must be non-negative");
  const auto n = static_cast<Index>(filter.order());
  const Window window(-n, kmax);
  const AssociatedLTI sys(filter);
  const FiniteSignal y_tilde = lti_output(sys, x, window, tol);
  const FiniteSignal y = run_forward(filter, Initialization::zeros(filter.order()), x, kmax);

  FactReport out;
  out.fact = 2;
  out.ok = true;
  for (Index k = -n; k <= kmax; ++k) {
    // Below 0 the initialised filter holds y = 0.
    const Complex expected = k >= 0 ? y(k) : Complex{};
    const double r = std::abs(y_tilde(k) - expected);
    out.residuals.push_back(r);
    if (!(r <= tol) && out.ok) {
      out.ok = false;
      out.counterexample_k = k;
    }
    out.max_residual = std::max(out.max_residual, r);
  }
  return out;
}

Fact3Decomposition decompose_fact3(const RecursiveFilter& filter, const FiniteSignal& x, const SequenceView& y,
                                   const Window& window, double tol) {
  const AssociatedLTI sys(filter);
  const Window padded = window.padded_below(static_cast<Index>(filter.order()));
  const FiniteSignal y_tilde = lti_output(sys, x, padded, tol);
  const FiniteSignal y_sampled = FiniteSignal::sampled(y, padded);
  Fact3Decomposition out;
  out.homogeneous = y_sampled - y_tilde;
  out.report = to_fact_report(3, check_solution_pair(filter, FiniteSignal{}, view_of(out.homogeneous), window, tol));
  return out;
}

}  // namespace recfilt
