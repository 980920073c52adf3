#pragma once

#include "qed1d/model.hpp"
#include "qed1d/quadrature.hpp"

namespace qed1d {

/// Reduced: the x-integral is done in closed form, leaving one k-integral.
/// Direct2D: nested quadrature over (k, x); slow, used as the oracle.
enum class Evaluation { Reduced, Direct2D };

QuadratureSpec energy_spec();

/// Direct Coulomb-type correction, int n^el n^vp dx.
QuadResult dc_correction(const ModelParams& p, const QuadratureSpec& spec = energy_spec(),
                         Evaluation how = Evaluation::Reduced);

/// Exchange Coulomb-type correction, -int tr[n1^el n1^vp] dx.
QuadResult xc_correction(const ModelParams& p, const QuadratureSpec& spec = energy_spec(),
                         Evaluation how = Evaluation::Reduced);

/// Exchange Breit-type correction, +int tr[sigma1 n1^el sigma1 n1^vp] dx.
QuadResult xb_correction(const ModelParams& p, const QuadratureSpec& spec = energy_spec(),
                         Evaluation how = Evaluation::Reduced);

/// -(1/c^2) int j^el j^vp dx recomputed from the two current densities.
double db_diagnostic(const ModelParams& p, const QuadratureSpec& spec = energy_spec());

/// Direct Breit-type correction: exactly 0. Runs db_diagnostic and throws
/// ConsistencyError if its magnitude reaches 1e-12.
double db_correction(const ModelParams& p, const QuadratureSpec& spec = energy_spec());

/// Compact single-integrand form of dc + xc + db + xb.
QuadResult total_vp_correction(const ModelParams& p, const QuadratureSpec& spec = energy_spec());

struct EnergyErrors {
    double dc = 0.0, xc = 0.0, db = 0.0, xb = 0.0, total_vp = 0.0;
};

struct EnergyBreakdown {
    double zeroth = 0.0;  // bound-state energy
    double dc = 0.0;
    double xc = 0.0;
    double db = 0.0;
    double xb = 0.0;
    double total_vp = 0.0;
    double el_first_order = 0.0;  // direct and exchange electronic terms cancel
    EnergyErrors errors;
};

/// All fields, with the component integrals run concurrently. Throws
/// ConsistencyError if the compact total and the four-term sum disagree by
/// more than 1e-9 relative plus their combined error.
EnergyBreakdown breakdown(const ModelParams& p, const QuadratureSpec& spec = energy_spec());

}  // namespace qed1d
