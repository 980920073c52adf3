#include "qed1d/spin_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "qed1d/errors.hpp"

namespace qed1d {

CMat2 CMat2::identity() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

CMat2 CMat2::sigma1() {
    CMat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

CMat2 CMat2::sigma3() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

CMat2 CMat2::adjoint() const {
    CMat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

double CMat2::max_abs() const {
    double v = 0.0;
    for (const auto& z : a) v = std::max(v, std::abs(z));
    return v;
}

CMat2 operator+(const CMat2& x, const CMat2& y) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
}

CMat2 operator-(const CMat2& x, const CMat2& y) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
}

CMat2 operator*(const CMat2& x, const CMat2& y) {
    CMat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
    return m;
}

CMat2 operator*(cplx s, const CMat2& x) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = s * x.a[i];
    return m;
}

CMat2 inverse(const CMat2& m) {
    const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det) < 1e-300) throw DomainError("singular 2x2 matrix");
    CMat2 r;
    r(0, 0) = m(1, 1) / det;
    r(0, 1) = -m(0, 1) / det;
    r(1, 0) = -m(1, 0) / det;
    r(1, 1) = m(0, 0) / det;
    return r;
}

CMat4 CMat4::identity() {
    CMat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

cplx CMat4::trace() const { return a[0] + a[5] + a[10] + a[15]; }

CMat4 CMat4::adjoint() const {
    CMat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

double CMat4::max_abs() const {
    double v = 0.0;
    for (const auto& z : a) v = std::max(v, std::abs(z));
    return v;
}

CMat4 operator+(const CMat4& x, const CMat4& y) {
    CMat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
}

CMat4 operator-(const CMat4& x, const CMat4& y) {
    CMat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
}

CMat4 operator*(const CMat4& x, const CMat4& y) {
    CMat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
            m(r, c) = s;
        }
    return m;
}

CMat4 tensor(const CMat2& A, const CMat2& B) {
    CMat4 C;
    for (int rho = 0; rho < 2; ++rho)
        for (int nu = 0; nu < 2; ++nu)
            for (int sigma = 0; sigma < 2; ++sigma)
                for (int tau = 0; tau < 2; ++tau)
                    C(2 * rho + nu, 2 * sigma + tau) = A(rho, sigma) * B(nu, tau);
    return C;
}

CMat2 partial_trace(const CMat4& C, int which) {
    if (which != 1 && which != 2) throw DomainError("partial_trace: which must be 1 or 2");
    CMat2 r;
    if (which == 1) {
        for (int nu = 0; nu < 2; ++nu)
            for (int tau = 0; tau < 2; ++tau)
                r(nu, tau) = C(nu, tau) + C(2 + nu, 2 + tau);
    } else {
        for (int rho = 0; rho < 2; ++rho)
            for (int sigma = 0; sigma < 2; ++sigma)
                r(rho, sigma) = C(2 * rho, 2 * sigma) + C(2 * rho + 1, 2 * sigma + 1);
    }
    return r;
}

CMat4 permutation_x() {
    CMat4 X;
    X(0, 0) = 1.0;
    X(1, 2) = 1.0;
    X(2, 1) = 1.0;
    X(3, 3) = 1.0;
    return X;
}

CMat4 interaction_kernel(KernelKind kind) {
    const CMat4 id = CMat4::identity();
    if (kind == KernelKind::CoulombOnly) return id;
    return id - tensor(CMat2::sigma1(), CMat2::sigma1());
}

std::array<double, 4> hermitian_eigenvalues(const CMat4& H) {
    Eigen::Matrix4cd m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = H(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
    std::array<double, 4> ev{};
    for (int i = 0; i < 4; ++i) ev[i] = es.eigenvalues()(i);
    return ev;
}

}  // namespace qed1d
