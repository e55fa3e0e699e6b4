#include "qframe/sampling.hpp"

namespace qframe {

namespace {

BitInterval random_interval(Rng& rng, int radius) {
    std::uniform_int_distribution<int> lo_d(-radius, 0);
    std::uniform_int_distribution<int> hi_d(0, radius);
    int lo = lo_d(rng);
    int hi = hi_d(rng);
    std::vector<uint8_t> bits(static_cast<size_t>(hi - lo + 1));
    std::uniform_int_distribution<int> bit_d(0, 1);
    for (auto& b : bits) b = static_cast<uint8_t>(bit_d(rng));
    return BitInterval(lo, hi, std::move(bits));
}

Sign random_sign(Rng& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) ? Sign::minus : Sign::plus;
}

} // namespace

BasisState random_real_canonical(Rng& rng, int radius) {
    return canonicalize(random_sign(rng), random_interval(rng, radius), Sign::plus,
                        BitInterval::zero());
}

BasisState random_real_nonzero(Rng& rng, int radius) {
    for (;;) {
        BasisState s = random_real_canonical(rng, radius);
        if (!s.re.all_zero()) return s;
    }
}

BasisState random_complex_canonical(Rng& rng, int radius, int max_sites) {
    for (;;) {
        BasisState s = canonicalize(random_sign(rng), random_interval(rng, radius),
                                    random_sign(rng), random_interval(rng, radius));
        if (s.site_count() <= max_sites) return s;
    }
}

} // namespace qframe
