#pragma once

#include <random>

#include "recfilt/recursive_filter.hpp"
#include "recfilt/sequences.hpp"

namespace recfilt {

using Rng = std::mt19937_64;

/// Uniform in the disc |z| < scale.
Complex random_complex(Rng& rng, double scale = 1.0);

/// Filter of random order in [1, max_order] built from random distinct
/// roots with magnitudes in [min_radius, max_radius]. Roots are kept at
/// least 1e-3 apart so the closed forms stay well conditioned.
RecursiveFilter random_stable_filter(Rng& rng, std::size_t max_order = 4, double max_radius = 0.95,
                                     double min_radius = 0.05);

/// Random complex samples on a random sub-range of [kmin, kmax] of at most
/// `max_len` indices.
FiniteSignal random_signal(Rng& rng, Index kmin, Index kmax, std::size_t max_len = 8);

}  // namespace recfilt
