#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace ricesim {

// Deterministic RNG with splittable per-replication streams. Sampling uses
// explicit inversion so identical seeds give identical draws on every
// platform; std::<distribution> types are implementation-defined and avoided.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Independent stream for a (master seed, replication index) pair.
    static SplitRng for_replication(std::uint64_t master, std::uint64_t replication) {
        std::uint64_t s = splitmix64(master);
        s = splitmix64(s ^ (0x9e3779b97f4a7c15ULL + replication));
        return SplitRng(s);
    }

    // Uniform on the open interval (0,1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential(double rate) {
        if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
        return -std::log(uniform()) / rate;
    }

    double normal() {
        // Box-Muller, fresh pair every call (cache-free keeps streams splittable).
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Index sampled with probability weights[i] / sum(weights).
    std::size_t categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("categorical: weights must have positive sum");
        double target = uniform() * total;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            target -= weights[i];
            if (target <= 0.0) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 gen_;
};

}  // namespace ricesim
