#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace epss {

// Seeded draws built directly on the mt19937_64 stream, so identical seeds
// give identical results on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform in [0,1) with 53 random bits.
    double u01() { return double(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), unbiased via rejection.
    uint64_t below(uint64_t n) {
        const uint64_t threshold = (~n + 1) % n; // 2^64 mod n
        for (;;) {
            const uint64_t x = gen_();
            if (x >= threshold) return x % n;
        }
    }

    bool bernoulli(double p) { return u01() < p; }

    // Knuth inversion; fine for the small means used here.
    int poisson(double mean) {
        const double limit = std::exp(-mean);
        double product = 1.0;
        int k = 0;
        do {
            ++k;
            product *= u01();
        } while (product > limit);
        return k - 1;
    }

    double normal() {
        double u1 = u01();
        while (u1 <= 0.0) u1 = u01();
        const double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace epss
