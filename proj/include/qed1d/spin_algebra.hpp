#pragma once

#include <array>
#include <complex>

namespace qed1d {

using cplx = std::complex<double>;

// Row-major complex 2x2.
struct CMat2 {
    std::array<cplx, 4> a{};

    cplx& operator()(int r, int c) { return a[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[2 * r + c]; }

    static CMat2 identity();
    static CMat2 zero() { return CMat2{}; }
    static CMat2 sigma1();
    static CMat2 sigma3();

    cplx trace() const { return a[0] + a[3]; }
    CMat2 adjoint() const;
    double max_abs() const;
};

CMat2 operator+(const CMat2& x, const CMat2& y);
CMat2 operator-(const CMat2& x, const CMat2& y);
CMat2 operator*(const CMat2& x, const CMat2& y);
CMat2 operator*(cplx s, const CMat2& x);

/// Inverse of a 2x2; throws DomainError when |det| underflows.
CMat2 inverse(const CMat2& m);

// Complex 4x4 indexed by the composite (rho nu) pair, row index 2*rho + nu.
struct CMat4 {
    std::array<cplx, 16> a{};

    cplx& operator()(int r, int c) { return a[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[4 * r + c]; }

    static CMat4 identity();

    cplx trace() const;
    CMat4 adjoint() const;
    double max_abs() const;
};

CMat4 operator+(const CMat4& x, const CMat4& y);
CMat4 operator-(const CMat4& x, const CMat4& y);
CMat4 operator*(const CMat4& x, const CMat4& y);

/// C_{rho nu, sigma tau} = A_{rho sigma} B_{nu tau}.
CMat4 tensor(const CMat2& A, const CMat2& B);

/// which = 1 traces out the first factor (Tr1[A x B] = tr(A) B),
/// which = 2 the second (Tr2[A x B] = tr(B) A).
CMat2 partial_trace(const CMat4& C, int which);

/// Swap of the two tensor factors: exchanges rows 2 and 3 of I4.
CMat4 permutation_x();

enum class KernelKind { CoulombBreit, CoulombOnly };

/// Matrix coefficient of delta(x1 - x2) in the two-body contact interaction.
/// CoulombBreit: I x I - sigma1 x sigma1.  CoulombOnly: I x I.
CMat4 interaction_kernel(KernelKind kind = KernelKind::CoulombBreit);

/// Eigenvalues of a Hermitian 4x4, ascending.
std::array<double, 4> hermitian_eigenvalues(const CMat4& H);

}  // namespace qed1d
