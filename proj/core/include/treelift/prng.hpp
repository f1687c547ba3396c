#ifndef TREELIFT_PRNG_HPP
#define TREELIFT_PRNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "treelift/rational.hpp"

namespace treelift {

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// splitmix64 generator. Deterministic across platforms, which keeps
/// report output byte-identical for a fixed seed.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    /// Positive rational with numerator and denominator uniform in [lo, hi].
    Rational rational(std::uint64_t lo = 1, std::uint64_t hi = 1000) {
        long num = static_cast<long>(range(lo, hi));
        long den = static_cast<long>(range(lo, hi));
        return Rational(num, den);
    }

    /// Derives an independent child generator; `tag` keeps different call
    /// sites decorrelated under the same base seed.
    Prng fork(std::string_view tag, std::uint64_t index = 0) {
        std::uint64_t h = fnv1a64(tag) ^ (0x9e3779b97f4a7c15ull * (index + 1));
        return Prng(state_ ^ h);
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(next() % static_cast<std::uint64_t>(i + 1));
            std::swap(p[i], p[j]);
        }
        return p;
    }

private:
    std::uint64_t state_;
};

} // namespace treelift

#endif
