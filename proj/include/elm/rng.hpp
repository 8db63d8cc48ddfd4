#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace elm {

/// Seeded generator used everywhere randomness is needed. Passed explicitly;
/// there is no global RNG state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi]. Built from the raw 53 high bits so results do not
    /// depend on the standard library's distribution implementation.
    double uniform(double lo, double hi) noexcept {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::uint64_t next() noexcept { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finaliser.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

[[nodiscard]] constexpr std::uint64_t hash_combine(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (auto p : parts) h = mix64(h ^ mix64(p));
    return h;
}

/// FNV-1a, for fingerprinting configuration strings.
[[nodiscard]] constexpr std::uint64_t hash_string(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace elm
