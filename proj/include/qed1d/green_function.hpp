#pragma once

#include "qed1d/model.hpp"
#include "qed1d/quadrature.hpp"
#include "qed1d/spin_algebra.hpp"

namespace qed1d {

struct ResolventScalars {
    cplx kappa;    // sqrt(m^2 c^4 - w^2) / c, Re > 0
    cplx g_plus;   // g(w)  = sqrt((mc^2 + w) / (mc^2 - w))
    cplx g_minus;  // g(-w)
    cplx z1;       // 1 / (1 - lambda g(w))
    cplx z2;       // 1 / (1 + lambda g(-w))
};

/// Rejects w on the spectrum (real with |w| >= mc^2) and, unless
/// allow_pole is set, |1 - lambda g(w)| or |1 + lambda g(-w)| below 1e-12.
ResolventScalars resolvent_scalars(const ModelParams& p, cplx omega, bool allow_pole = false);

/// Free resolvent (w - D0)^{-1} as a kernel in x, x' (sgn(0) = 0).
CMat2 free_resolvent(const ModelParams& p, double x, double x2, cplx omega);

enum class Order { AllOrders, FirstOrder };

/// G - G0 for the delta potential -Z delta(x). FirstOrder sets z1 = z2 = 1.
CMat2 resolvent_correction(const ModelParams& p, double x, double x2, cplx omega,
                           Order order = Order::AllOrders);

/// tr Delta G(x, x; w). At x = 0 this returns the x -> 0 limit, because the
/// literal sgn(0) = 0 value of the off-diagonal products does not give a
/// convergent frequency integral.
cplx resolvent_correction_trace(const ModelParams& p, double x, cplx omega,
                                Order order = Order::AllOrders);

QuadratureSpec green_spec();

/// (1/2pi) int du tr Delta G(x, x; iu).
QuadResult vp_density_green(const ModelParams& p, double x, const QuadratureSpec& spec = green_spec(),
                            Order order = Order::AllOrders);

/// -(Zm/pi) int_1^inf dt e^{-2mc|x|t} / (t sqrt(t^2-1)), evaluated with
/// t = sec(phi) on [0, pi/2].
QuadResult uehling_density(const ModelParams& p, double x, const QuadratureSpec& spec = green_spec());

/// Same density in the frequency form
/// -(Z m^2 c^2 / pi) int_0^inf du e^{-2 sqrt(m^2c^4+u^2)|x|/c} / (m^2c^4+u^2).
QuadResult uehling_density_frequency(const ModelParams& p, double x,
                                     const QuadratureSpec& spec = green_spec());

struct VacuumCharges {
    double n_e = 0.0;    // electrons, momenta |k| <= cutoff
    double n_p = 0.0;    // positrons, momenta |k| <= cutoff
    double n_net = 0.0;  // n_e - n_p over all momenta
    double n_e_error = 0.0;
    double n_p_error = 0.0;
    double n_net_error = 0.0;
    double cutoff = 0.0;
};

/// Per-momentum integrands of the vacuum electron and positron numbers after
/// the frequency integral, each summed over +k and -k.
struct VacuumNumberDensity {
    double electrons = 0.0;
    double positrons = 0.0;
};

VacuumNumberDensity vacuum_number_density(const ModelParams& p, double k,
                                          const QuadratureSpec& spec = green_spec());

/// The default momentum cutoff for n_e and n_p, in units of mc.
inline constexpr double kDefaultVacuumCutoff = 100.0;

VacuumCharges vacuum_numbers(const ModelParams& p, const QuadratureSpec& spec = green_spec(),
                             double cutoff_in_mc = kDefaultVacuumCutoff);

}  // namespace qed1d
