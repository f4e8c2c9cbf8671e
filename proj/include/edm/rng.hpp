#pragma once

#include <cstdint>
#include <initializer_list>

namespace edm {

// Stateless counter-based generator: every variate is a pure function of
// (seed, key words), so parallel workers reproduce the serial stream and
// identical seeds give bit-identical samples on any platform.
namespace rng {

inline std::uint64_t splitmix(std::uint64_t h) {
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

inline std::uint64_t fold(std::uint64_t h, std::uint64_t x) {
    return splitmix(h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline std::uint64_t key(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = splitmix(seed);
    for (std::uint64_t w : words) h = fold(h, w);
    return h;
}

// Uniform in the open interval (0,1).
inline double uniform01(std::uint64_t h) {
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

// Inverse standard normal CDF (Acklam's rational approximation, refined by
// one Halley step); bit-stable, no rejection loop.
double inverse_normal_cdf(double p);

inline double normal(std::uint64_t h) { return inverse_normal_cdf(uniform01(h)); }

}  // namespace rng
}  // namespace edm
