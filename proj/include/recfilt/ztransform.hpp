#pragma once

#include <limits>
#include <span>
#include <vector>

#include "recfilt/associated_lti.hpp"
#include "recfilt/recursive_filter.hpp"
#include "recfilt/sequences.hpp"

namespace recfilt {

/// Open annulus inner < |z| < outer; outer may be +inf, inner may be 0.
class Annulus {
 public:
  Annulus(double inner, double outer);

  double inner() const noexcept { return inner_; }
  double outer() const noexcept { return outer_; }
  bool unbounded() const noexcept { return outer_ == std::numeric_limits<double>::infinity(); }
  bool contains_radius(double r) const noexcept { return r > inner_ && r < outer_; }

  bool operator==(const Annulus&) const = default;

 private:
  double inner_;
  double outer_;
};

struct PartialFractionTerm {
  Complex residue;
  Complex pole;
};

/// H(z) = direct + sum r_i / (1 - p_i z^-1).
///
/// For these unit-numerator filters `direct` is 1 only when there are no
/// poles at all (H = 1) and 0 otherwise, so direct + sum r_i = H(inf) = 1.
struct PartialFractionForm {
  std::vector<PartialFractionTerm> terms;
  Complex direct;
  /// Characteristic roots at the origin dropped from the expansion.
  std::size_t zero_roots = 0;

  Complex operator()(Complex z) const;
};

enum class SupportClass { Causal, Anticausal, TwoSided };

struct RocImpulseResponse {
  Annulus roc;
  GeometricSum h;
  SupportClass support = SupportClass::Causal;
  bool stable_on_unit_circle = false;
};

/// Nonzero characteristic roots, i.e. the poles of H(z).
ComplexVector poles(const RecursiveFilter& filter);

/// Annuli between consecutive distinct pole magnitudes, innermost first:
/// (0, m1), (m1, m2), ..., (mn, inf). Magnitudes within relative `ties_tol`
/// share one boundary. Poles at the origin are ignored.
std::vector<Annulus> enumerate_rocs(std::span<const Complex> poles, double ties_tol = kTiesTolerance);

/// Residues by the product formula r_i = prod_{j != i} 1 / (1 - p_j / p_i).
/// Throws RepeatedPoles.
PartialFractionForm partial_fractions(const RecursiveFilter& filter);

/// Expands each term about 0 or infinity according to where its pole sits
/// relative to `roc`: |p| <= inner gives r p^k u[k], |p| >= outer gives
/// -r p^k u[-k-1]. Throws PoleInsideRoc if a pole lies strictly inside.
RocImpulseResponse impulse_response_for_roc(const PartialFractionForm& pf, const Annulus& roc);

/// The outermost ROC, whose expansion is the associated LTI impulse response.
RocImpulseResponse causal_ir_via_fact5(const RecursiveFilter& filter);

/// The ROC containing |z| = 1. Throws PoleOnUnitCircle when a pole
/// magnitude is within 1e-9 of 1.
RocImpulseResponse unit_circle_ir(const RecursiveFilter& filter);

/// Fact 5: the outermost-ROC expansion matches the simulated impulse response
/// on [0, 2N + 16] to `rel_tol` (relative to max(1, |h[k]|)).
FactReport verify_fact5(const RecursiveFilter& filter, double rel_tol = 1e-8);

struct RocReport {
  ComplexVector poles;
  std::vector<RocImpulseResponse> rocs;
};

RocReport roc_report(const RecursiveFilter& filter);

}  // namespace recfilt
