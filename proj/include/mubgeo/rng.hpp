#pragma once

// Deterministic randomness for simulations and property tests.  The
// constructor requires a seed, so an unseeded generator cannot exist;
// identical seeds give identical streams on every platform because the
// transformations from raw 64-bit draws are spelled out here instead of
// delegated to library distribution objects.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mubgeo/linalg.hpp"

namespace mubgeo {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01();

    // Uniform integer in [0, n).
    long long uniform_index(long long n);

    // Standard normal via Box-Muller.
    double gauss();

    // Inverse-CDF draw from a probability vector.  Weights below the
    // cutoff are treated as exactly zero support.
    long long sample_discrete(const std::vector<double>& probs, double cutoff = 1e-12);

    // Haar-like random pure state: normalized complex Gaussian entries.
    Vec random_state(long long dim);

private:
    std::mt19937_64 gen_;
};

}  // namespace mubgeo
