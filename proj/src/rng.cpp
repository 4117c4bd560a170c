#include "mubgeo/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mubgeo {

double SeededRng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

long long SeededRng::uniform_index(long long n) {
    if (n <= 0) throw std::invalid_argument("uniform_index: n must be positive");
    return static_cast<long long>(uniform01() * static_cast<double>(n)) % n;
}

double SeededRng::gauss() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

long long SeededRng::sample_discrete(const std::vector<double>& probs, double cutoff) {
    double total = 0.0;
    for (double p : probs) {
        if (p < -cutoff) throw std::invalid_argument("sample_discrete: negative weight");
        if (p > cutoff) total += p;
    }
    if (total <= 0.0) throw std::invalid_argument("sample_discrete: empty support");
    double u = uniform01() * total;
    double acc = 0.0;
    long long last_supported = -1;
    for (size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= cutoff) continue;
        last_supported = static_cast<long long>(i);
        acc += probs[i];
        if (u < acc) return last_supported;
    }
    return last_supported;  // guards against accumulated rounding at u ~ total
}

Vec SeededRng::random_state(long long dim) {
    Vec v(dim);
    for (long long i = 0; i < dim; ++i) v[i] = cplx{gauss(), gauss()};
    v.normalize();
    return v;
}

}  // namespace mubgeo
