#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cgmatch {

// Deterministic, platform-independent random number generator (splitmix64).
// std:: engines and distributions are implementation-defined in places, so
// every random decision in the library flows through this type to keep
// seeded runs byte-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : root_(seed), state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform index in [0, n). n must be > 0.
    size_t uniform_index(size_t n) { return static_cast<size_t>(next_u64() % n); }

    // Child generator for an independent, named stream.
    Rng fork(uint64_t salt) const {
        uint64_t z = root_ + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    uint64_t root_seed() const { return root_; }

private:
    uint64_t root_;
    uint64_t state_;
};

// FNV-1a, used to derive per-word seeds for hashed OOV vectors.
inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Fisher-Yates shuffle driven by Rng; deterministic across platforms.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    if (items.size() < 2) return;
    for (size_t i = items.size() - 1; i > 0; --i) {
        size_t j = rng.uniform_index(i + 1);
        std::swap(items[i], items[j]);
    }
}

} // namespace cgmatch
