#pragma once

#include <cstdint>
#include <limits>
#include <ostream>

#include <Eigen/Core>

namespace dofia {

/// Element of the prime field F_p with p = 2^31 - 1.
///
/// Stored canonically in [0, p). Products fit in 64 bits and reduce with the
/// Mersenne fold, so no division is involved anywhere.
struct Fp {
    static constexpr std::uint32_t modulus = 2147483647u;

    std::uint32_t v = 0;

    constexpr Fp() = default;
    constexpr Fp(int x) : v(from_signed(x)) {}  // NOLINT: Eigen builds Scalar(0), Scalar(1)
    static constexpr Fp raw(std::uint32_t x) {
        Fp r;
        r.v = x;
        return r;
    }

    static constexpr std::uint32_t reduce(std::uint64_t x) {
        x = (x & modulus) + (x >> 31);
        x = (x & modulus) + (x >> 31);
        return static_cast<std::uint32_t>(x >= modulus ? x - modulus : x);
    }

    friend constexpr Fp operator+(Fp a, Fp b) {
        std::uint32_t s = a.v + b.v;
        return raw(s >= modulus ? s - modulus : s);
    }
    friend constexpr Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + modulus - b.v); }
    friend constexpr Fp operator*(Fp a, Fp b) { return raw(reduce(std::uint64_t{a.v} * b.v)); }
    friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    constexpr Fp operator-() const { return raw(v == 0 ? 0 : modulus - v); }
    constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
    constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
    constexpr Fp& operator*=(Fp o) { return *this = *this * o; }
    constexpr Fp& operator/=(Fp o) { return *this = *this / o; }
    friend constexpr bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    // Fermat; inverse of zero is zero (callers never divide by a zero pivot).
    [[nodiscard]] constexpr Fp inverse() const {
        Fp base = *this, r = raw(1);
        std::uint32_t e = modulus - 2;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

private:
    static constexpr std::uint32_t from_signed(long long x) {
        long long m = x % static_cast<long long>(modulus);
        if (m < 0) m += modulus;
        return static_cast<std::uint32_t>(m);
    }
};

// Eigen needs these for a handful of generic paths (isApprox, norms); they are
// never meaningful for a finite field and only exist so templates compile.
inline Fp abs(Fp a) { return a; }
inline Fp abs2(Fp a) { return a * a; }
inline Fp conj(Fp a) { return a; }
inline Fp real(Fp a) { return a; }
inline Fp imag(Fp) { return Fp(0); }
inline Fp sqrt(Fp a) { return a; }

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXp = MatrixX<Fp>;
using VectorXp = VectorX<Fp>;

enum class FieldTag { Prime, Real };

}  // namespace dofia

namespace Eigen {
template <>
struct NumTraits<dofia::Fp> : GenericNumTraits<dofia::Fp> {
    using Real = dofia::Fp;
    using NonInteger = dofia::Fp;
    using Literal = dofia::Fp;
    using Nested = dofia::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline dofia::Fp epsilon() { return dofia::Fp(0); }
    static inline dofia::Fp dummy_precision() { return dofia::Fp(0); }
    static inline dofia::Fp highest() { return dofia::Fp::raw(dofia::Fp::modulus - 1); }
    static inline dofia::Fp lowest() { return dofia::Fp(0); }
    static inline int digits10() { return 9; }
};
}  // namespace Eigen
