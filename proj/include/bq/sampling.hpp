#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bq/holoexpr.hpp"

namespace bq {

/// Deterministic source for every random quantity in the toolkit. All
/// sampling flows through one seeded engine so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    /// Uniform over the closed unit disc in C.
    Complex unit_disc() {
        const double r = std::sqrt(uniform(0.0, 1.0));
        const double theta = uniform(0.0, 2.0 * 3.141592653589793);
        return std::polar(r, theta);
    }

    Point4 polydisc_point() {
        return {unit_disc(), unit_disc(), unit_disc(), unit_disc()};
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

std::vector<Point4> sample_polydisc(Rng& rng, int count);

}  // namespace bq
