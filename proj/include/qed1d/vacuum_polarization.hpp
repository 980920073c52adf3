#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qed1d/model.hpp"
#include "qed1d/quadrature.hpp"

namespace qed1d {

/// The two oscillatory kernels of the vacuum-polarization density matrix.
struct VpKernels {
    const DerivedParams& d;

    // kappa cos(2kx) - (eps1/eps_k) k sin(2k|x|)
    double f(double k, double x) const;
    // (eps1/eps_k) k cos(2kx) + kappa sin(2k|x|)
    double g(double k, double x) const;
};

/// Default spec for the pointwise density integrals.
QuadratureSpec density_spec();

/// Local density matrix of the polarized vacuum. Its diagonal and off-diagonal
/// entries diverge logarithmically at x = 0 (only the trace stays finite), so
/// x = 0 is rejected with DomainError.
CMat2 vp_density_matrix(const DerivedParams& d, double x, const QuadratureSpec& spec = density_spec());

/// -(1/pi) int_0^inf dk kappa f_k(x) / (k^2 + kappa^2).
QuadResult vp_density(const DerivedParams& d, double x, const QuadratureSpec& spec = density_spec());

/// Outside |x| <= commutator_window(d) the commutator route loses digits to
/// cancellation and is refused.
double commutator_window(const DerivedParams& d);

/// -(kappa/2) e^{-2 kappa |x|} + (1/pi) int_0^inf dk kappa/(k^2+kappa^2) (eps1/eps_k) k sin(2k|x|).
QuadResult vp_density_commutator(const DerivedParams& d, double x,
                                 const QuadratureSpec& spec = density_spec());

struct CommutatorCheck {
    QuadResult commutator;
    QuadResult spectral;
    bool unstable = false;  // routes differ by more than 10x their combined error
};

CommutatorCheck vp_density_commutator_checked(const DerivedParams& d, double x,
                                              const QuadratureSpec& spec = density_spec());

/// c tr[sigma1 n1(x)], assembled at integrand level. Throws ConsistencyError
/// if the result is not below 1e-10.
double vp_current(const DerivedParams& d, double x, const QuadratureSpec& spec = density_spec());

struct VacuumChargeSummary {
    double integral = 0.0;  // -(2/pi) arctan(Z/2c)
    double z_obs = 0.0;     // Z + (2/pi) arctan(Z/2c)
};

VacuumChargeSummary vacuum_charge_summary(const ModelParams& p);

/// int n^vp dx by nested quadrature of vp_density. The density decays like
/// e^{-2mc|x|}, so the x-range is cut at 20/(mc) and the tail bound added to
/// the error estimate.
QuadResult vp_charge_integral(const DerivedParams& d, const QuadratureSpec& spec = {});

/// Half-width at half-minimum of n^vp, found by bisection on x > 0.
double vp_half_width(const DerivedParams& d, const QuadratureSpec& spec = density_spec());

struct RadialProfile {
    std::string quantity;
    ModelParams params;
    std::vector<double> xs;
    std::vector<double> values;
    std::vector<double> errors;
};

/// n points from x_min to x_max; symmetric ranges give exactly mirrored points.
std::vector<double> linear_grid(double x_min, double x_max, int points);

/// Evaluates `point` on the grid in parallel; rows keep grid order.
RadialProfile make_profile(const std::string& quantity, const ModelParams& p,
                           const std::vector<double>& xs,
                           const std::function<QuadResult(double)>& point);

}  // namespace qed1d
