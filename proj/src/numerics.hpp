// Deterministic random numbers and finite-difference gradient oracles.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace qppg {

// Seeded 64-bit generator (SplitMix64 recurrence). Identical seeds produce
// identical sequences on every platform; copying the struct forks the stream.
struct Rng64 {
    uint64_t state = 0;

    explicit Rng64(uint64_t seed = 0) : state(seed) {}

    uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1].
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
    }

    // Standard normal via Box-Muller; consumes exactly two uniform draws.
    double rand_normal() {
        double u1 = next_unit();
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Uniform integer in [0, n). Modulo bias is irrelevant at the scales used here.
    uint64_t bounded(uint64_t n) { return next_u64() % n; }

    // Child stream for a worker; parent advances by one draw.
    Rng64 split() { return Rng64(next_u64()); }
};

template <typename T>
void shuffle(std::vector<T>& v, Rng64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded(i));
        std::swap(v[i - 1], v[j]);
    }
}

// Central differences (f(x+h e_i) - f(x-h e_i)) / 2h, always in 64-bit floats.
std::vector<double> finite_diff_grad(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<double>& x, double h);

}  // namespace qppg
