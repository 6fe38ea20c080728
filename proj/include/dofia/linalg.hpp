#pragma once

#include <optional>
#include <type_traits>

#include <Eigen/Core>

#include "dofia/field.hpp"

namespace dofia {

// Exact rank over F_p by Gaussian elimination.
Eigen::Index rank_fp(const MatrixXp& m);

// Numerical rank: singular values above max(rows, cols) * eps * sigma_max.
Eigen::Index rank_real(const Eigen::MatrixXd& m);

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if constexpr (std::is_same_v<Scalar, Fp>) {
        return rank_fp(m.eval());
    } else {
        static_assert(std::is_same_v<Scalar, double>, "rank: Fp or double only");
        return rank_real(m.eval());
    }
}

struct SolveResult {
    Eigen::Index rank = 0;
    bool consistent = false;
    VectorXp x;  // particular solution, free variables set to zero
};

// Reduced row echelon solve of A x = b over F_p.
SolveResult solve(const MatrixXp& a, const VectorXp& b);

}  // namespace dofia
