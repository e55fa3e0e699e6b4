#pragma once

#include <random>

#include "qframe/state.hpp"

namespace qframe {

using Rng = std::mt19937_64;

// Uniform random canonical pure-real state with interval within
// [-radius, radius]; emits the canonical zero with small probability.
BasisState random_real_canonical(Rng& rng, int radius);

// Random canonical complex state whose total occupied site count stays
// within max_sites (keeps gauge expansions tractable).
BasisState random_complex_canonical(Rng& rng, int radius, int max_sites);

// Random nonzero canonical pure-real state.
BasisState random_real_nonzero(Rng& rng, int radius);

} // namespace qframe
