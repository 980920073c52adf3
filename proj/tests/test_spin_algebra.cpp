#include <doctest.h>

#include <random>

#include "qed1d/spin_algebra.hpp"

using namespace qed1d;

namespace {

CMat2 random_mat2(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    CMat2 m;
    for (auto& z : m.a) z = {N(rng), N(rng)};
    return m;
}

CMat4 random_mat4(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    CMat4 m;
    for (auto& z : m.a) z = {N(rng), N(rng)};
    return m;
}

double diff(const CMat4& a, const CMat4& b) { return (a - b).max_abs(); }
double diff(const CMat2& a, const CMat2& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("tensor product of identities and Pauli matrices") {
    CHECK(diff(tensor(CMat2::identity(), CMat2::identity()), CMat4::identity()) == 0.0);
    CHECK(std::abs(tensor(CMat2::sigma1(), CMat2::sigma1()).trace()) == 0.0);
}

TEST_CASE("tensor product uses the composite index 2*rho + nu") {
    CMat2 A, B;
    A(0, 1) = 2.0;
    B(1, 0) = 3.0;
    const CMat4 C = tensor(A, B);
    // C_{(0,1),(1,0)} = A_{01} B_{10}
    CHECK(C(1, 2) == cplx{6.0});
    double others = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (!(r == 1 && c == 2)) others += std::abs(C(r, c));
    CHECK(others == 0.0);
}

TEST_CASE("trace of a tensor product factorizes on random matrices") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const CMat2 A = random_mat2(rng), B = random_mat2(rng);
        CHECK(std::abs(tensor(A, B).trace() - A.trace() * B.trace()) < 1e-14 * (1 + std::abs(A.trace() * B.trace())));
    }
}

TEST_CASE("partial traces of tensor products") {
    CHECK(diff(partial_trace(tensor(CMat2::identity(), CMat2::identity()), 2),
               cplx{2.0} * CMat2::identity()) == 0.0);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const CMat2 A = random_mat2(rng), B = random_mat2(rng);
        const CMat4 C = tensor(A, B);
        CHECK(diff(partial_trace(C, 1), A.trace() * B) < 1e-13);
        CHECK(diff(partial_trace(C, 2), B.trace() * A) < 1e-13);
        CHECK(partial_trace(tensor(CMat2::sigma3(), B), 1).max_abs() == 0.0);
    }
}

TEST_CASE("partial trace followed by trace is the full trace") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const CMat4 C = random_mat4(rng);
        CHECK(std::abs(partial_trace(C, 1).trace() - C.trace()) < 1e-13);
        CHECK(std::abs(partial_trace(C, 2).trace() - C.trace()) < 1e-13);
    }
}

TEST_CASE("partial_trace rejects an invalid factor index") {
    CHECK_THROWS(partial_trace(CMat4::identity(), 3));
}

TEST_CASE("permutation X is the literal swap matrix and an involution") {
    const CMat4 X = permutation_x();
    const int literal[4][4] = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(X(r, c) == cplx{static_cast<double>(literal[r][c])});
    CHECK(diff(X * X, CMat4::identity()) == 0.0);
}

TEST_CASE("X swaps the factors of a product vector") {
    // Basis vector e_i (x) e_j sits at index 2i + j.
    const CMat4 X = permutation_x();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const int from = 2 * i + j, to = 2 * j + i;
            for (int r = 0; r < 4; ++r) CHECK(X(r, from) == cplx{r == to ? 1.0 : 0.0});
        }
}

TEST_CASE("X conjugation swaps tensor factors") {
    std::mt19937_64 rng(17);
    const CMat4 X = permutation_x();
    for (int i = 0; i < 50; ++i) {
        const CMat2 A = random_mat2(rng), B = random_mat2(rng);
        CHECK(diff(X * tensor(A, B) * X, tensor(B, A)) < 1e-14);
    }
}

TEST_CASE("contact interaction kernel") {
    const CMat4 W = interaction_kernel();
    CHECK(diff(W, W.adjoint()) == 0.0);
    CHECK(W.trace() == cplx{4.0});
    const auto ev = hermitian_eigenvalues(W);
    CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(ev[1]) < 1e-14);
    CHECK(ev[2] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ev[3] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(diff(W * W, W + W) < 1e-15);
}

TEST_CASE("kernel annihilates the +1 eigenvectors of sigma1 x sigma1") {
    const CMat4 W = interaction_kernel();
    const CMat4 S = tensor(CMat2::sigma1(), CMat2::sigma1());
    // e1 x e1 + e2 x e2 and e1 x e2 + e2 x e1 have eigenvalue +1 under S.
    const double vecs[2][4] = {{1, 0, 0, 1}, {0, 1, 1, 0}};
    for (const auto& v : vecs) {
        for (int r = 0; r < 4; ++r) {
            cplx sv = 0.0, wv = 0.0;
            for (int c = 0; c < 4; ++c) {
                sv += S(r, c) * v[c];
                wv += W(r, c) * v[c];
            }
            CHECK(sv == cplx{v[r]});
            CHECK(wv == cplx{0.0});
        }
    }
}

TEST_CASE("Coulomb-only kernel is the identity") {
    CHECK(diff(interaction_kernel(KernelKind::CoulombOnly), CMat4::identity()) == 0.0);
}

TEST_CASE("2x2 inverse") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        const CMat2 A = random_mat2(rng);
        CHECK(diff(A * inverse(A), CMat2::identity()) < 1e-12);
    }
    CHECK_THROWS(inverse(CMat2::zero()));
}
