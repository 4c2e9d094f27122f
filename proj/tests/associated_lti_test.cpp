#include "recfilt/associated_lti.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recfilt/error.hpp"
#include "recfilt/random.hpp"
#include "recfilt/spectral.hpp"

namespace recfilt {
namespace {

const RecursiveFilter kHalf({0.5});
const RecursiveFilter kTwoPole({2.5, -1.0});

std::vector<GeometricTerm> SortedByRatio(std::vector<GeometricTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const GeometricTerm& a, const GeometricTerm& b) { return std::abs(a.ratio) < std::abs(b.ratio); });
  return terms;
}

TEST(ImpulseResponsePrefixTest, Examples) {
  EXPECT_EQ(impulse_response_prefix(kHalf, 3), FiniteSignal(0, {1.0, 0.5, 0.25}));
  EXPECT_EQ(impulse_response_prefix(kTwoPole, 3), FiniteSignal(0, {1.0, 2.5, 5.25}));
  const FiniteSignal trivial = impulse_response_prefix(RecursiveFilter({0.0, 0.0}), 6);
  EXPECT_EQ(trivial, impulse(0));
}

TEST(ImpulseResponsePrefixTest, ExtendingNeverChangesEarlierSamples) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const RecursiveFilter f = random_stable_filter(rng);
    const FiniteSignal shorter = impulse_response_prefix(f, 10);
    const FiniteSignal longer = impulse_response_prefix(f, 25);
    for (Index k = 0; k < 10; ++k) EXPECT_EQ(shorter(k), longer(k));
  }
}

TEST(ImpulseResponseClosedTest, TwoPoleCoefficients) {
  const GeometricSum h = impulse_response_closed(kTwoPole);
  const auto terms = SortedByRatio(h.terms);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_COMPLEX_NEAR(terms[0].coefficient, -1.0 / 3.0, 1e-12);
  EXPECT_COMPLEX_NEAR(terms[0].ratio, 0.5, 1e-12);
  EXPECT_COMPLEX_NEAR(terms[1].coefficient, 4.0 / 3.0, 1e-12);
  EXPECT_COMPLEX_NEAR(terms[1].ratio, 2.0, 1e-12);
  for (const auto& t : terms) EXPECT_EQ(t.side, Side::Causal);
  for (Index k = 0; k <= 20; ++k) {
    const double want = (std::pow(2.0, 2.0 * static_cast<double>(k) + 2.0) - 1.0) / (3.0 * std::pow(2.0, static_cast<double>(k)));
    EXPECT_COMPLEX_NEAR(h(k), want, 1e-8 * want);
  }
  EXPECT_EQ(h(-1), Complex{});
}

TEST(ImpulseResponseClosedTest, SinglePole) {
  const GeometricSum h = impulse_response_closed(kHalf);
  ASSERT_EQ(h.terms.size(), 1u);
  EXPECT_COMPLEX_NEAR(h.terms[0].coefficient, 1.0, 1e-15);
  EXPECT_COMPLEX_NEAR(h.terms[0].ratio, 0.5, 1e-15);
}

TEST(ImpulseResponseClosedTest, ThreeQuartersAgainstSimulation) {
  const GeometricSum h = impulse_response_closed(RecursiveFilter({0.75}));
  const FiniteSignal prefix = impulse_response_prefix(RecursiveFilter({0.75}), 20);
  for (Index k = 0; k < 20; ++k) EXPECT_COMPLEX_NEAR(h(k), prefix(k), 1e-12);
  ASSERT_EQ(h.terms.size(), 1u);
  EXPECT_COMPLEX_NEAR(h.terms[0].coefficient, 1.0, 1e-12);
}

TEST(ImpulseResponseClosedTest, RepeatedRootsRejected) {
  try {
    impulse_response_closed(RecursiveFilter({1.0, -0.25}));
    FAIL() << "expected RepeatedRoots";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RepeatedRoots);
  }
}

TEST(ImpulseResponseClosedTest, ZeroRootsDoNotChangeH) {
  // alpha = (1/2, 0): y[k] = y[k-1]/2 + x[k], the trailing zero is inert.
  const GeometricSum h = impulse_response_closed(RecursiveFilter({0.5, 0.0}));
  for (Index k = 0; k < 10; ++k) EXPECT_COMPLEX_NEAR(h(k), std::pow(0.5, static_cast<double>(k)), 1e-15);
  const GeometricSum delta = impulse_response_closed(RecursiveFilter({0.0}));
  EXPECT_EQ(delta(0), Complex{1.0});
  EXPECT_EQ(delta(1), Complex{});
}

TEST(AssociatedLtiTest, PrefixAgreesWithClosedForm) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const AssociatedLTI sys(random_stable_filter(rng));
    ASSERT_TRUE(sys.h_closed().has_value());
    for (Index k = 0; k < static_cast<Index>(sys.prefix_length()); ++k) {
      const Complex closed = (*sys.h_closed())(k);
      EXPECT_COMPLEX_NEAR(sys.h_prefix()(k), closed, 1e-6 * std::max(1.0, std::abs(closed)));
    }
    EXPECT_EQ(sys.h(-1), Complex{});
    EXPECT_EQ(sys.h(-7), Complex{});
  }
}

TEST(AssociatedLtiTest, DefaultPrefixAndTailBound) {
  const AssociatedLTI half(kHalf);
  EXPECT_TRUE(half.stable());
  EXPECT_LE(half.prefix_length(), AssociatedLTI::kMaxDefaultPrefix);
  // True tail of (1/2)^k beyond L is 2^{1-L}; the bound must dominate it.
  EXPECT_GE(half.tail_bound() * (1.0 + 1e-12), std::pow(0.5, static_cast<double>(half.prefix_length()) - 1.0));

  const AssociatedLTI unstable(kTwoPole);
  EXPECT_FALSE(unstable.stable());
  EXPECT_EQ(unstable.tail_bound(), std::numeric_limits<double>::infinity());
}

TEST(LtiOutputTest, Examples) {
  const AssociatedLTI sys(kHalf);
  const FiniteSignal shifted = lti_output(sys, impulse(-1), Window(-2, 1));
  EXPECT_EQ(shifted(-2), Complex{});
  EXPECT_EQ(shifted(-1), Complex{1.0});
  EXPECT_EQ(shifted(0), Complex{0.5});
  EXPECT_EQ(shifted(1), Complex{0.25});

  const FiniteSignal worked = lti_output(sys, FiniteSignal(0, {1.0, 2.0}), Window(0, 2));
  EXPECT_COMPLEX_NEAR(worked(0), 1.0, 1e-15);
  EXPECT_COMPLEX_NEAR(worked(1), 2.5, 1e-15);
  EXPECT_COMPLEX_NEAR(worked(2), 1.25, 1e-15);

  EXPECT_TRUE(lti_output(AssociatedLTI(kTwoPole), FiniteSignal{}, Window(-5, 5)).is_zero());
}

TEST(LtiOutputTest, RepeatedRootsUsePrefixWithinBound) {
  const RecursiveFilter repeated({1.0, -0.25});
  const AssociatedLTI sys(repeated);
  EXPECT_FALSE(sys.h_closed().has_value());
  // Oracle: h[k] = (k + 1) 2^-k for the double root at 1/2.
  const FiniteSignal y = lti_output(sys, impulse(0), Window(0, 20), 1e-6);
  for (Index k = 0; k <= 20; ++k) {
    EXPECT_COMPLEX_NEAR(y(k), static_cast<double>(k + 1) * std::pow(0.5, static_cast<double>(k)), 1e-12);
  }
}

TEST(LtiOutputTest, UnstableWithoutClosedFormRefused) {
  // Double root at 2: no closed form and no tail bound.
  const AssociatedLTI sys(RecursiveFilter({4.0, -4.0}), 16);
  EXPECT_FALSE(sys.h_closed().has_value());
  try {
    lti_output(sys, impulse(0), Window(0, 40));
    FAIL() << "expected TruncationUncertified";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationUncertified);
  }
}

TEST(LtiOutputTest, CausalInputGivesExactlyZeroBeforeZero) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const AssociatedLTI sys(random_stable_filter(rng));
    const FiniteSignal x = random_signal(rng, 0, 8);
    const FiniteSignal y = lti_output(sys, x, Window(-10, 10));
    for (Index k = -10; k < 0; ++k) EXPECT_EQ(y(k), Complex{});
  }
}

TEST(LtiOutputTest, GatedExponentialApproachesEigenfunctionGeometrically) {
  Rng rng(47);
  std::uniform_real_distribution<double> freq(-0.5, 0.5);
  for (int trial = 0; trial < 10; ++trial) {
    // Single real pole so the error is exactly one geometric sequence.
    std::uniform_real_distribution<double> pole(0.3, 0.9);
    const double p = pole(rng);
    const RecursiveFilter filter({p});
    const double f = freq(rng);
    const Index kmax = 30;
    const FiniteSignal y = lti_output(AssociatedLTI(filter), exp_signal(f, Window(0, kmax), true), Window(0, kmax));
    const Complex H = frequency_response(filter, f);
    std::vector<double> err;
    for (Index k = 0; k <= kmax; ++k) {
      err.push_back(std::abs(y(k) - H * std::exp(Complex(0.0, 2.0 * kPi * f * static_cast<double>(k)))));
    }
    for (Index k = 5; k < kmax; ++k) {
      const auto i = static_cast<std::size_t>(k);
      // Below ~1e-8 the subtraction's rounding dominates the ratio.
      if (err[i + 1] < 1e-8) break;
      EXPECT_NEAR(err[i + 1] / err[i], p, 1e-6) << "trial " << trial << " k " << k;
    }
  }
}

TEST(VerifyFact1Test, Examples) {
  const FactReport r = verify_fact1(kHalf, impulse(-1), Window(-5, 10));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.fact, 1);
  EXPECT_FALSE(r.counterexample_k.has_value());
}

TEST(VerifyFact1Test, CorruptedOutputIsCaughtAtTheCorruptedIndex) {
  const AssociatedLTI sys(kHalf);
  const Window w(-5, 10);
  const FiniteSignal y = lti_output(sys, impulse(-1), w.padded_below(1)) + impulse(4);
  const FactReport r = verify_fact1_against(kHalf, impulse(-1), view_of(y), w);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.counterexample_k.has_value());
  EXPECT_EQ(*r.counterexample_k, 4);
  EXPECT_NEAR(r.max_residual, 1.0, 1e-12);
}

TEST(VerifyFact1Test, RandomStableFiltersProperty) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const RecursiveFilter f = random_stable_filter(rng);
    const FiniteSignal x = random_signal(rng, -8, 20);
    const FactReport r = verify_fact1(f, x, Window(-10, 30), 1e-9);
    EXPECT_TRUE(r.ok) << "trial " << trial << " residual " << r.max_residual;
  }
}

TEST(VerifyFact2Test, Examples) {
  const FactReport r = verify_fact2(kHalf, FiniteSignal(0, {1.0, 2.0}), 2);
  EXPECT_TRUE(r.ok);
  EXPECT_LE(r.max_residual, 1e-15);
  EXPECT_EQ(r.fact, 2);

  try {
    verify_fact2(kHalf, impulse(-1), 5);
    FAIL() << "expected NotCausalInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCausalInput);
  }
  // Forcing the comparison anyway shows the mismatch at k = -1.
  const FiniteSignal y = simulate(kHalf, Initialization::zeros(1), impulse(-1), Window(-1, -1));
  const FiniteSignal y_tilde = lti_output(AssociatedLTI(kHalf), impulse(-1), Window(-1, -1));
  EXPECT_EQ(y(-1), Complex{});
  EXPECT_EQ(y_tilde(-1), Complex{1.0});
}

TEST(VerifyFact2Test, ImpulseHoldsByConstruction) {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const RecursiveFilter f = random_stable_filter(rng);
    const AssociatedLTI sys(f);
    EXPECT_TRUE(verify_fact2(f, impulse(0), static_cast<Index>(sys.prefix_length())).ok);
  }
  EXPECT_TRUE(verify_fact2(kTwoPole, impulse(0), 20, 1e-9 * std::pow(2.0, 20)).ok);
}

TEST(DecomposeFact3Test, GatedExponentialResidueIsHomogeneous) {
  const double f = 0.1;
  const Window w(0, 30);
  const FiniteSignal x = exp_signal(f, w, true);
  const FiniteSignal y = run_forward(kHalf, Initialization::zeros(1), x, w.kmax());
  const Fact3Decomposition d = decompose_fact3(kHalf, x, view_of(y), w);
  EXPECT_TRUE(d.report.ok);
  EXPECT_EQ(d.report.fact, 3);
}

TEST(DecomposeFact3Test, LtiOutputHasZeroHomogeneousPart) {
  const FiniteSignal x(-2, {1.0, -1.0, 0.5});
  const Window w(-10, 10);
  const FiniteSignal y_tilde = lti_output(AssociatedLTI(kHalf), x, w.padded_below(1));
  const Fact3Decomposition d = decompose_fact3(kHalf, x, view_of(y_tilde), w);
  EXPECT_TRUE(d.report.ok);
  EXPECT_TRUE(d.homogeneous.is_zero());
}

TEST(DecomposeFact3Test, AddedHomogeneousTermIsRecovered) {
  const FiniteSignal x(-2, {1.0, -1.0, 0.5});
  const Window w(-10, 10);
  const AssociatedLTI sys(kHalf);
  const GeometricSum y0{{{1.0, 0.5, Side::Causal}, {1.0, 0.5, Side::Anticausal}}, {}};
  const SequenceView y = [&](Index k) { return sys.h_closed() ? convolve_closed(*sys.h_closed(), x, Window(k, k))(k) + y0(k) : Complex{}; };
  const Fact3Decomposition d = decompose_fact3(kHalf, x, y, w);
  EXPECT_TRUE(d.report.ok);
  EXPECT_FALSE(d.homogeneous.is_zero());
  for (Index k = -11; k <= 10; ++k) EXPECT_COMPLEX_NEAR(d.homogeneous(k), std::pow(0.5, static_cast<double>(k)), 1e-9);
}

TEST(DecomposeFact3Test, NonSolutionIsRejected) {
  const Window w(0, 10);
  const SequenceView step = [](Index k) { return k >= 0 ? Complex{1.0} : Complex{}; };
  EXPECT_FALSE(decompose_fact3(kHalf, impulse(0), step, w).report.ok);
}

}  // namespace
}  // namespace recfilt
