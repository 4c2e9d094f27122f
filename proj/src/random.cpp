#include "recfilt/random.hpp"

#include <algorithm>
#include <cmath>

#include "recfilt/polynomial.hpp"

namespace recfilt {

Complex random_complex(Rng& rng, double scale) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = scale * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * kPi * unit(rng));
}

RecursiveFilter random_stable_filter(Rng& rng, std::size_t max_order, double max_radius, double min_radius) {
  std::uniform_int_distribution<std::size_t> order_dist(1, std::max<std::size_t>(1, max_order));
  std::uniform_real_distribution<double> radius(min_radius, max_radius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const std::size_t n = order_dist(rng);
  ComplexVector roots;
  while (roots.size() < n) {
    const Complex r = std::polar(radius(rng), angle(rng));
    const bool separated =
        std::all_of(roots.begin(), roots.end(), [&](const Complex& q) { return std::abs(q - r) > 1e-3; });
    if (separated) roots.push_back(r);
  }
  const ComplexVector poly = poly_from_roots(roots);
  ComplexVector alpha;
  for (std::size_t i = 1; i < poly.size(); ++i) alpha.push_back(-poly[i]);
  return RecursiveFilter(std::move(alpha));
}

FiniteSignal random_signal(Rng& rng, Index kmin, Index kmax, std::size_t max_len) {
  std::uniform_int_distribution<Index> start_dist(kmin, kmax);
  const Index start = start_dist(rng);
  const Index room = kmax - start + 1;
  std::uniform_int_distribution<Index> len_dist(1, std::max<Index>(1, std::min<Index>(room, static_cast<Index>(max_len))));
  const Index len = len_dist(rng);
  ComplexVector v;
  for (Index i = 0; i < len; ++i) v.push_back(random_complex(rng, 2.0));
  return FiniteSignal(start, std::move(v));
}

}  // namespace recfilt
