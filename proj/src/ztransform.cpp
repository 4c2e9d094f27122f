#include "recfilt/ztransform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recfilt/error.hpp"

namespace recfilt {

Annulus::Annulus(double inner, double outer) : inner_(inner), outer_(outer) {
  if (!(inner >= 0.0) || !(inner < outer)) {
    throw Error(ErrorCode::InvalidArgument, "annulus needs 0 <= inner < outer");
  }
}

Complex PartialFractionForm::operator()(Complex z) const {
  Complex acc = direct;
  for (const auto& t : terms) acc += t.residue / (1.0 - t.pole / z);
  return acc;
}

ComplexVector poles(const RecursiveFilter& filter) { return nonzero_characteristic_roots(filter); }

std::vector<Annulus> enumerate_rocs(std::span<const Complex> pole_list, double ties_tol) {
  std::vector<double> mags;
  for (const auto& p : pole_list) {
    if (p != Complex{}) mags.push_back(std::abs(p));
  }
  std::sort(mags.begin(), mags.end());
  std::vector<double> radii;
  for (double m : mags) {
    if (radii.empty() || m - radii.back() > ties_tol * m) radii.push_back(m);
  }
  std::vector<Annulus> rocs;
  double inner = 0.0;
  for (double r : radii) {
    rocs.emplace_back(inner, r);
    inner = r;
  }
  rocs.emplace_back(inner, std::numeric_limits<double>::infinity());
  return rocs;
}

PartialFractionForm partial_fractions(const RecursiveFilter& filter) {
  PartialFractionForm pf;
  const ComplexVector p = poles(filter);
  pf.zero_roots = filter.order() - p.size();
  if (p.empty()) {
    pf.direct = 1.0;
    return pf;
  }
  if (!roots_distinct(p)) throw Error(ErrorCode::RepeatedPoles, "partial fractions need distinct poles");
  for (std::size_t i = 0; i < p.size(); ++i) {
    Complex r{1.0};
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i) r /= 1.0 - p[j] / p[i];
    }
    pf.terms.push_back({r, p[i]});
  }
  return pf;
}

RocImpulseResponse impulse_response_for_roc(const PartialFractionForm& pf, const Annulus& roc) {
  GeometricSum h;
  for (const auto& t : pf.terms) {
    const double mag = std::abs(t.pole);
    if (mag <= roc.inner() * (1.0 + kTiesTolerance)) {
      h.terms.push_back({t.residue, t.pole, Side::Causal});
    } else if (mag >= roc.outer() * (1.0 - kTiesTolerance)) {
      h.terms.push_back({-t.residue, t.pole, Side::Anticausal});
    } else {
      throw Error(ErrorCode::PoleInsideRoc, "pole of magnitude " + std::to_string(mag) + " lies inside the ROC");
    }
  }
  h.correction = impulse(0).scaled(pf.direct);

  const bool causal = h.has_causal_terms() || !h.correction.is_zero();
  const bool anticausal = h.has_anticausal_terms();
  SupportClass support = SupportClass::Causal;
  if (causal && anticausal) {
    support = SupportClass::TwoSided;
  } else if (anticausal) {
    support = SupportClass::Anticausal;
  }
  return RocImpulseResponse{roc, std::move(h), support, roc.contains_radius(1.0)};
}

RocImpulseResponse causal_ir_via_fact5(const RecursiveFilter& filter) {
  const auto p = poles(filter);
  const auto rocs = enumerate_rocs(p);
  return impulse_response_for_roc(partial_fractions(filter), rocs.back());
}

RocImpulseResponse unit_circle_ir(const RecursiveFilter& filter) {
  const auto p = poles(filter);
  for (const auto& pole : p) {
    if (std::abs(std::abs(pole) - 1.0) <= 1e-9) {
      throw Error(ErrorCode::PoleOnUnitCircle, "pole on the unit circle; no ROC contains |z| = 1");
    }
  }
  const auto pf = partial_fractions(filter);
  for (const auto& roc : enumerate_rocs(p)) {
    if (roc.contains_radius(1.0)) return impulse_response_for_roc(pf, roc);
  }
  throw Error(ErrorCode::PoleOnUnitCircle, "no ROC contains |z| = 1");
}

FactReport verify_fact5(const RecursiveFilter& filter, double rel_tol) {
  const auto ir = causal_ir_via_fact5(filter);
  const auto length = 2 * filter.order() + 17;
  const FiniteSignal prefix = impulse_response_prefix(filter, length);
  FactReport out;
  out.fact = 5;
  out.ok = true;
  for (Index k = 0; k < static_cast<Index>(length); ++k) {
    const double r = std::abs(ir.h(k) - prefix(k)) / std::max(1.0, std::abs(prefix(k)));
    out.residuals.push_back(r);
    if (!(r <= rel_tol) && out.ok) {
      out.ok = false;
      out.counterexample_k = k;
    }
    out.max_residual = std::max(out.max_residual, r);
  }
  // The expansion must also vanish before 0.
  for (Index k = -static_cast<Index>(filter.order()); k < 0; ++k) {
    if (ir.h(k) != Complex{} && out.ok) {
      out.ok = false;
      out.counterexample_k = k;
    }
  }
  return out;
}

RocReport roc_report(const RecursiveFilter& filter) {
  RocReport report;
  report.poles = poles(filter);
  const auto pf = partial_fractions(filter);
  for (const auto& roc : enumerate_rocs(report.poles)) report.rocs.push_back(impulse_response_for_roc(pf, roc));
  return report;
}

}  // namespace recfilt
