#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace smalekit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Deterministic 64-bit mix, used to derive independent child seeds from a
/// master seed and a task tag so results do not depend on thread scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27; x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    Rng child(std::uint64_t tag) const { return Rng(mix_seed(state_seed_, tag)); }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

    /// Uniform direction on the unit sphere in R^d.
    RVector unit_vector(int d) {
        RVector v(d);
        do {
            for (int i = 0; i < d; ++i) v[i] = normal();
        } while (v.norm() < 1e-12);
        return v / v.norm();
    }

    Complex unit_complex() {
        double t = uniform(0.0, 2.0 * M_PI);
        return Complex(std::cos(t), std::sin(t));
    }

private:
    explicit Rng(std::uint64_t seed, int) : gen_(seed), state_seed_(seed) {}
    std::mt19937_64 gen_;
    std::uint64_t state_seed_ = 0;

public:
    // keep the constructing seed around for child derivation
    static Rng seeded(std::uint64_t seed) { Rng r(seed); r.state_seed_ = seed; return r; }
};

/// Halton low-discrepancy sequence, one value per (index, base).
inline double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    std::uint64_t i = index;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/// First `count` Halton points in the open ball of radius `radius` in R^d,
/// obtained by rejection from the cube [-1,1]^d. Fully deterministic.
inline std::vector<RVector> halton_ball(int d, int count, double radius,
                                        std::uint64_t offset = 0) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<RVector> pts;
    pts.reserve(count);
    std::uint64_t idx = 1 + offset;
    while (static_cast<int>(pts.size()) < count) {
        RVector x(d);
        for (int i = 0; i < d; ++i) x[i] = 2.0 * halton(idx, primes[i]) - 1.0;
        ++idx;
        double n = x.norm();
        if (n <= 0.98 && n > 1e-9) pts.push_back(radius * x);
    }
    return pts;
}

/// Deterministic unit directions on the sphere of R^d (Halton + normalize).
inline std::vector<RVector> halton_sphere(int d, int count, std::uint64_t offset = 0) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<RVector> pts;
    pts.reserve(count);
    std::uint64_t idx = 1 + offset;
    while (static_cast<int>(pts.size()) < count) {
        RVector x(d);
        for (int i = 0; i < d; ++i) x[i] = 2.0 * halton(idx, primes[i]) - 1.0;
        ++idx;
        double n = x.norm();
        if (n > 1e-6 && n <= 1.0) pts.push_back(x / n);
    }
    return pts;
}

/// Worker cap: min(hardware, SMALEKIT_THREADS). At least 1.
int worker_count();

/// Runs fn(i) for i in [0, n) over the worker pool; fn must be thread safe.
/// Results should be written into per-index slots so the outcome does not
/// depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

/// Shortest decimal string that round-trips to the given double.
std::string format_double(double x);

} // namespace smalekit
