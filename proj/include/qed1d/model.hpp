#pragma once

#include <cmath>

#include "qed1d/errors.hpp"
#include "qed1d/spin_algebra.hpp"

namespace qed1d {

inline constexpr double kDefaultC = 137.036;

struct ModelParams {
    double Z = 0.0;
    double c = kDefaultC;
    double m = 1.0;
};

/// Throws DomainError unless c > 0, m > 0 and 0 <= Z <= 2c.
void validate(const ModelParams& p);

struct DerivedParams {
    ModelParams params;
    double lambda = 0.0;  // Z / 2c
    double theta = 0.0;   // tan(theta/2) = lambda
    double kappa = 0.0;   // bound-state decay constant
    double A = 0.0;       // bound-state normalization
    double eps1 = 0.0;    // bound-state energy

    double mc() const { return params.m * params.c; }
    double mc2() const { return params.m * params.c * params.c; }
};

DerivedParams derive(const ModelParams& p);

/// mc^2 (1 - lambda^2)/(1 + lambda^2), generic in the floating type so tests
/// can evaluate it in extended precision.
template <class Real>
Real bound_state_energy(const Real& Z, const Real& c, const Real& m) {
    const Real lam = Z / (2 * c);
    return m * c * c * (1 - lam * lam) / (1 + lam * lam);
}

struct NonrelExpansion {
    double rest = 0.0;          // mc^2
    double nonrel = 0.0;        // -m Z^2 / 2
    double leading_corr = 0.0;  // +m Z^4 / (8 c^2)
};

NonrelExpansion nonrel_expansion(const ModelParams& p);

struct Dispersion {
    double k = 0.0;
    double eps_k = 0.0;  // sqrt(k^2 c^2 + m^2 c^4)
    double s_k = 0.0;    // kc / (eps_k + mc^2)
    double A_k = 0.0;    // sqrt((eps_k + mc^2) / (2 pi eps_k))
    double B_k = 0.0;    // sqrt((eps_k + mc^2) / (4 pi eps_k))
    double kinetic = 0.0;  // eps_k - mc^2, without cancellation
};

Dispersion dispersion(const ModelParams& p, double k);

struct Spinor {
    cplx upper;
    cplx lower;
};

Spinor operator*(const CMat2& M, const Spinor& v);

enum class Branch { Positive, Negative };
enum class Parity { Gerade, Ungerade };

struct StateLabel {
    Branch branch = Branch::Positive;
    Parity parity = Parity::Gerade;
};

/// Which sign to use for sgn(x) at x = 0. `Origin` uses sgn(0) = 0; the
/// one-sided values give the limits x -> 0-, 0+.
enum class Side { Origin, Left, Right };

/// sgn with sgn(0) = 0, or the one-sided limit at 0.
double sgn(double x, Side side = Side::Origin);

Spinor bound_spinor(const DerivedParams& d, double x, Side side = Side::Origin);

Spinor free_state(const ModelParams& p, StateLabel label, double k, double x);

struct PhaseShifts {
    double delta_plus = 0.0;
    double delta_minus = 0.0;
};

/// tan(delta^+-) = lambda (eps_k +- mc^2) / (kc); k = 0 gives the limits
/// (pi/2, 0) for Z > 0.
PhaseShifts phase_shifts(const ModelParams& p, double k);

Spinor scattering_state(const ModelParams& p, StateLabel label, double k, double x,
                        Side side = Side::Origin);

/// M = [[cos t, i sin t], [i sin t, cos t]]; psi(0+) = M psi(0-).
CMat2 boundary_matrix(const ModelParams& p);

/// Local density matrix psi(x) psi(x)^dagger of the bound orbital.
CMat2 electron_density_matrix(const DerivedParams& d, double x);

double electron_density(const DerivedParams& d, double x);

/// c tr[sigma1 n(x)], identically zero for the bound orbital.
double electron_current(const DerivedParams& d, double x);

}  // namespace qed1d
