#include "qed1d/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qed1d {

namespace {

constexpr cplx I{0.0, 1.0};

void require_momentum(double k, bool allow_zero) {
    if (!std::isfinite(k) || k < 0.0 || (!allow_zero && k == 0.0))
        throw DomainError("momentum must be " + std::string(allow_zero ? "k >= 0" : "k > 0") +
                          ", got " + std::to_string(k));
}

}  // namespace

void validate(const ModelParams& p) {
    if (!(p.c > 0.0) || !std::isfinite(p.c)) throw DomainError("c must be positive");
    if (!(p.m > 0.0) || !std::isfinite(p.m)) throw DomainError("m must be positive");
    if (!(p.Z >= 0.0) || p.Z > 2.0 * p.c)
        throw DomainError("Z must lie in [0, 2c] = [0, " + std::to_string(2.0 * p.c) + "], got " +
                          std::to_string(p.Z));
}

DerivedParams derive(const ModelParams& p) {
    validate(p);
    DerivedParams d;
    d.params = p;
    const double lam = p.Z / (2.0 * p.c);
    const double one_plus = 1.0 + lam * lam;
    d.lambda = lam;
    d.theta = 2.0 * std::atan(lam);
    d.kappa = 2.0 * p.m * p.c * lam / one_plus;
    d.A = std::sqrt(d.kappa / one_plus);
    d.eps1 = bound_state_energy(p.Z, p.c, p.m);
    return d;
}

NonrelExpansion nonrel_expansion(const ModelParams& p) {
    validate(p);
    const double z2 = p.Z * p.Z;
    return {p.m * p.c * p.c, -0.5 * p.m * z2, p.m * z2 * z2 / (8.0 * p.c * p.c)};
}

Dispersion dispersion(const ModelParams& p, double k) {
    require_momentum(k, true);
    const double mc2 = p.m * p.c * p.c;
    const double kc = k * p.c;
    Dispersion d;
    d.k = k;
    d.eps_k = std::hypot(kc, mc2);
    d.kinetic = kc * kc / (d.eps_k + mc2);
    d.s_k = kc / (d.eps_k + mc2);
    d.A_k = std::sqrt((d.eps_k + mc2) / (2.0 * std::numbers::pi * d.eps_k));
    d.B_k = std::sqrt((d.eps_k + mc2) / (4.0 * std::numbers::pi * d.eps_k));
    return d;
}

Spinor operator*(const CMat2& M, const Spinor& v) {
    return {M(0, 0) * v.upper + M(0, 1) * v.lower, M(1, 0) * v.upper + M(1, 1) * v.lower};
}

double sgn(double x, Side side) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    switch (side) {
        case Side::Left: return -1.0;
        case Side::Right: return 1.0;
        case Side::Origin: break;
    }
    return 0.0;
}

Spinor bound_spinor(const DerivedParams& d, double x, Side side) {
    if (d.kappa == 0.0) throw DomainError("no bound state for Z = 0");
    const double e = d.A * std::exp(-d.kappa * std::abs(x));
    return {e, I * (d.lambda * sgn(x, side) * e)};
}

Spinor free_state(const ModelParams& p, StateLabel label, double k, double x) {
    validate(p);
    require_momentum(k, true);
    const bool pos = label.branch == Branch::Positive;
    const bool ger = label.parity == Parity::Gerade;
    if (k == 0.0 && pos != ger)
        throw DomainError("k = 0 is only admitted for the positive gerade and negative ungerade states");
    const Dispersion dk = dispersion(p, k);
    const double a = dk.A_k, s = dk.s_k;
    const double ck = std::cos(k * x), sk = std::sin(k * x);
    if (pos && ger) return {a * ck, I * (a * s * sk)};
    if (pos) return {a * sk, -I * (a * s * ck)};
    if (ger) return {I * (a * s * ck), a * sk};
    return {-I * (a * s * sk), a * ck};
}

PhaseShifts phase_shifts(const ModelParams& p, double k) {
    validate(p);
    require_momentum(k, true);
    const Dispersion dk = dispersion(p, k);
    const double lam = p.Z / (2.0 * p.c);
    const double mc2 = p.m * p.c * p.c;
    const double kc = k * p.c;
    return {std::atan2(lam * (dk.eps_k + mc2), kc), std::atan2(lam * dk.kinetic, kc)};
}

Spinor scattering_state(const ModelParams& p, StateLabel label, double k, double x, Side side) {
    validate(p);
    require_momentum(k, false);
    const Dispersion dk = dispersion(p, k);
    const PhaseShifts ph = phase_shifts(p, k);
    const double a = dk.A_k, s = dk.s_k;
    const double sg = sgn(x, side);
    const double r = k * std::abs(x);
    const bool pos = label.branch == Branch::Positive;
    const bool ger = label.parity == Parity::Gerade;
    if (pos && ger) {
        const double ph1 = r + ph.delta_plus;
        return {a * std::cos(ph1), I * (a * s * sg * std::sin(ph1))};
    }
    if (pos) {
        const double ph1 = r + ph.delta_minus;
        return {a * sg * std::sin(ph1), -I * (a * s * std::cos(ph1))};
    }
    if (ger) {
        const double ph1 = r - ph.delta_minus;
        return {I * (a * s * std::cos(ph1)), a * sg * std::sin(ph1)};
    }
    const double ph1 = r - ph.delta_plus;
    return {-I * (a * s * sg * std::sin(ph1)), a * std::cos(ph1)};
}

CMat2 boundary_matrix(const ModelParams& p) {
    validate(p);
    const double lam = p.Z / (2.0 * p.c);
    const double den = 1.0 + lam * lam;
    const double ct = (1.0 - lam * lam) / den;
    const double st = 2.0 * lam / den;
    CMat2 M;
    M(0, 0) = ct;
    M(0, 1) = I * st;
    M(1, 0) = I * st;
    M(1, 1) = ct;
    return M;
}

CMat2 electron_density_matrix(const DerivedParams& d, double x) {
    if (d.kappa == 0.0) throw DomainError("no bound state for Z = 0");
    const double lam = d.lambda;
    const double pre = d.A * d.A * std::exp(-2.0 * d.kappa * std::abs(x));
    const double sg = sgn(x);
    CMat2 n;
    n(0, 0) = pre;
    n(0, 1) = -I * (pre * lam * sg);
    n(1, 0) = I * (pre * lam * sg);
    n(1, 1) = pre * lam * lam;
    return n;
}

double electron_density(const DerivedParams& d, double x) {
    return electron_density_matrix(d, x).trace().real();
}

double electron_current(const DerivedParams& d, double x) {
    const CMat2 n = electron_density_matrix(d, x);
    return (d.params.c * (n(0, 1) + n(1, 0))).real();
}

}  // namespace qed1d
