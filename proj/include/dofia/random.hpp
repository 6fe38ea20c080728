#pragma once

#include <cstdint>
#include <random>
#include <type_traits>

#include "dofia/field.hpp"

namespace dofia {

// Purpose tags for seed derivation. Every random object in a trial draws from
// its own stream so any single object can be perturbed in isolation.
enum class Stream : std::uint64_t {
    Channel = 0x48,    // H[k][j](t): (k, j, t)
    Combine = 0x44,    // phase-two combination matrices: (j, t)
    Symbols = 0x55,    // information symbols: (j)
    Precoder = 0x46,   // phase-one precoders of the special schemes: (j, t)
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, Stream s, std::uint64_t a = 0, std::uint64_t b = 0,
                                    std::uint64_t c = 0) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ static_cast<std::uint64_t>(s));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ (b + 0x100));
    return splitmix64(h ^ (c + 0x10000));
}

// Full-period 64-bit LCG (Knuth's MMIX constants). Seeding is O(1), which
// matters because every matrix of every trial gets its own derived stream;
// only the high bits are used.
using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

// Entries uniform over F_p (rejection on the top 31 bits, portable across
// standard libraries) or standard normal for the real path.
template <class Scalar>
MatrixX<Scalar> random_matrix(std::uint64_t seed, Eigen::Index rows, Eigen::Index cols) {
    Engine gen(splitmix64(seed));
    MatrixX<Scalar> m(rows, cols);
    if constexpr (std::is_same_v<Scalar, Fp>) {
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) {
                std::uint64_t x;
                do x = gen() >> 33;
                while (x >= Fp::modulus);
                m(i, j) = Fp::raw(static_cast<std::uint32_t>(x));
            }
    } else {
        std::normal_distribution<double> nd(0.0, 1.0);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = nd(gen);
    }
    return m;
}

}  // namespace dofia
