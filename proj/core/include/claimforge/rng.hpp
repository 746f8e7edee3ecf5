#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace claimforge {

// Seeded RNG with portable sampling helpers. std::mt19937_64 output is fully
// specified by the standard; the helpers below avoid std::shuffle and
// std::uniform_int_distribution, whose algorithms are implementation-defined,
// so identical seeds reproduce identical draws on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform in [0, n). Rejection sampling, no modulo bias.
    size_t below(size_t n) {
        if (n <= 1) {
            return 0;
        }
        const uint64_t bound = n;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return static_cast<size_t>(v % bound);
    }

    bool coin() { return below(2) == 1; }

    template <typename T>
    void shuffle(std::vector<T> & v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    // First `n` items of a seeded partial Fisher-Yates pass, in draw order.
    template <typename T>
    std::vector<T> sample(std::vector<T> pool, size_t n) {
        if (n > pool.size()) {
            n = pool.size();
        }
        for (size_t i = 0; i < n; ++i) {
            std::swap(pool[i], pool[i + below(pool.size() - i)]);
        }
        pool.resize(n);
        return pool;
    }

  private:
    std::mt19937_64 engine_;
};

// Stable 64-bit FNV-1a, used to derive per-document seeds from a run seed.
inline uint64_t stable_hash64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t derive_seed(uint64_t seed, std::string_view key) {
    uint64_t h = stable_hash64(key);
    // splitmix64 finalizer over the combination
    uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace claimforge
