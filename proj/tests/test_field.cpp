#include <doctest.h>

#include "dofia/field.hpp"
#include "dofia/linalg.hpp"
#include "dofia/random.hpp"

using namespace dofia;

TEST_CASE("F_p arithmetic") {
    CHECK(Fp::modulus == 2147483647u);
    const Fp a(-1);
    CHECK(a.v == Fp::modulus - 1);
    CHECK(a + Fp(1) == Fp(0));
    CHECK(Fp(3) * Fp(5) == Fp(15));
    CHECK(Fp(0) - Fp(1) == a);
    for (int x : {1, 2, 3, 12345, -77, 2147483646}) {
        const Fp f(x);
        CHECK(f * f.inverse() == Fp(1));
        CHECK(Fp(7) / f * f == Fp(7));
    }
}

TEST_CASE("exact rank over F_p") {
    MatrixXp id = MatrixXp::Identity(4, 4);
    CHECK(rank(id) == 4);
    CHECK(rank(MatrixXp(MatrixXp::Zero(3, 5))) == 0);
    CHECK(rank(MatrixXp(0, 0)) == 0);
    // Product of random 6x2 and 2x7 factors has rank 2.
    const MatrixXp a = random_matrix<Fp>(1, 6, 2), b = random_matrix<Fp>(2, 2, 7);
    CHECK(rank(MatrixXp(a * b)) == 2);
    // Duplicated row.
    MatrixXp m = random_matrix<Fp>(3, 4, 4);
    m.row(3) = m.row(0) * Fp(5) + m.row(1);
    CHECK(rank(m) == 3);
    // Entries reduced mod p: p-1 and -1 are the same element.
    MatrixXp s(2, 2);
    s << Fp(1), Fp(2), Fp(-1), Fp(-2);
    CHECK(rank(s) == 1);
}

TEST_CASE("numerical rank agrees on well-conditioned inputs") {
    const Eigen::MatrixXd a = random_matrix<double>(5, 8, 3), b = random_matrix<double>(6, 3, 9);
    CHECK(rank(Eigen::MatrixXd(a * b)) == 3);
    CHECK(rank(Eigen::MatrixXd(Eigen::MatrixXd::Identity(5, 5))) == 5);
}

TEST_CASE("solve") {
    const MatrixXp a = random_matrix<Fp>(7, 5, 5);
    const VectorXp x = random_matrix<Fp>(8, 5, 1);
    const SolveResult r = solve(a, a * x);
    CHECK(r.rank == 5);
    CHECK(r.consistent);
    CHECK(r.x == x);

    MatrixXp low(3, 2);
    low << Fp(1), Fp(0), Fp(2), Fp(0), Fp(3), Fp(0);
    VectorXp bad(3);
    bad << Fp(1), Fp(1), Fp(1);
    CHECK_FALSE(solve(low, bad).consistent);
}

TEST_CASE("seeded draws are reproducible and stream-separated") {
    CHECK(random_matrix<Fp>(42, 3, 3) == random_matrix<Fp>(42, 3, 3));
    CHECK(random_matrix<Fp>(42, 3, 3) != random_matrix<Fp>(43, 3, 3));
    CHECK(derive_seed(1, Stream::Channel, 1, 2, 3) != derive_seed(1, Stream::Channel, 2, 1, 3));
    CHECK(derive_seed(1, Stream::Channel, 1, 2, 3) != derive_seed(1, Stream::Combine, 1, 2, 3));
    const MatrixXp m = random_matrix<Fp>(9, 50, 50);
    for (Eigen::Index i = 0; i < m.size(); ++i) CHECK(m.data()[i].v < Fp::modulus);
}
