#include "qed1d/energy_corrections.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <sstream>

#include "qed1d/vacuum_polarization.hpp"

namespace qed1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

enum class Term { DC, XC, XB };

const char* term_name(Term t) {
    switch (t) {
        case Term::DC: return "dc correction";
        case Term::XC: return "xc correction";
        case Term::XB: return "xb correction";
    }
    return "";
}

// (kappa^2/pi) (kappa^2 - (eps1/eps_k) k^2) / (k^2 + kappa^2)^2: the k-integrand
// left after the x-integral of e^{-2 kappa |x|} against f_k(x).
double reduced_core(const DerivedParams& d, double k, double eps) {
    const double k2 = k * k, kap2 = d.kappa * d.kappa;
    const double den = k2 + kap2;
    return kap2 / kPi * (kap2 - (d.eps1 / eps) * k2) / (den * den);
}

// Weight multiplying the reduced core, including the overall sign and the
// 1/(1+lambda^2) of the exchange terms. Factors of 1/(1-s^2) are written out
// through eps +- mc^2 so that nothing grows like (1-s^2)^{-1} numerically.
double reduced_weight(const DerivedParams& d, Term t, const Dispersion& dk) {
    const double lam2 = d.lambda * d.lambda;
    const double two_mc2 = 2.0 * d.mc2();
    const double plus = dk.eps_k + d.mc2();
    switch (t) {
        case Term::DC: return -1.0;
        case Term::XC: return (lam2 * plus - dk.kinetic) / two_mc2 / (1.0 + lam2);
        case Term::XB: return -(plus - lam2 * dk.kinetic) / two_mc2 / (1.0 + lam2);
    }
    return 0.0;
}

QuadResult reduced(const ModelParams& p, Term t, const QuadratureSpec& spec) {
    const DerivedParams d = derive(p);
    if (d.kappa == 0.0) return {};
    QuadratureSpec s = spec;
    s.oscillation_frequency.reset();
    s.scale = d.kappa;
    auto integrand = [&](double k) {
        const Dispersion dk = dispersion(p, k);
        return reduced_weight(d, t, dk) * reduced_core(d, k, dk.eps_k);
    };
    return require_converged(integrate_halfline(integrand, s), term_name(t));
}

// Momentum-resolved vacuum density matrix at x: the integrand of n1^vp(x).
CMat2 vp_matrix_integrand(const DerivedParams& d, const Dispersion& dk, double x) {
    const VpKernels kern{d};
    const double f = kern.f(dk.k, x), g = kern.g(dk.k, x);
    const double pre = -d.kappa / (kPi * (dk.k * dk.k + d.kappa * d.kappa)) * (dk.eps_k + d.mc2()) /
                       (2.0 * d.mc2());
    const double s = dk.s_k;
    CMat2 n;
    n(0, 0) = pre * (-s * s * f);
    n(0, 1) = pre * (-I * s * g);
    n(1, 0) = pre * (I * s * g);
    n(1, 1) = pre * f;
    return n;
}

double local_energy_density(const DerivedParams& d, Term t, const Dispersion& dk, double x) {
    const CMat2 nel = electron_density_matrix(d, x);
    const CMat2 nvp = vp_matrix_integrand(d, dk, x);
    switch (t) {
        case Term::DC: return (nel.trace() * nvp.trace()).real();
        case Term::XC: return -(nel * nvp).trace().real();
        case Term::XB: {
            const CMat2 s1 = CMat2::sigma1();
            return (s1 * nel * s1 * nvp).trace().real();
        }
    }
    return 0.0;
}

QuadResult direct_2d(const ModelParams& p, Term t, const QuadratureSpec& spec) {
    const DerivedParams d = derive(p);
    if (d.kappa == 0.0) return {};
    auto f = [&](double k, double x) {
        const Dispersion dk = dispersion(p, k);
        return local_energy_density(d, t, dk, x) + local_energy_density(d, t, dk, -x);
    };
    auto inner = [&](double k, QuadratureSpec& is) {
        is.scale = 1.0 / d.kappa;
        if (k > 0.0) is.oscillation_frequency = 2.0 * k;
    };
    QuadratureSpec s = spec;
    s.scale = d.kappa;
    return require_converged(
        integrate_2d(f, Range::half_line(d.kappa), Range::half_line(1.0 / d.kappa), s, inner),
        std::string(term_name(t)) + " (2D)");
}

QuadResult correction(const ModelParams& p, Term t, const QuadratureSpec& spec, Evaluation how) {
    return how == Evaluation::Reduced ? reduced(p, t, spec) : direct_2d(p, t, spec);
}

}  // namespace

QuadratureSpec energy_spec() {
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-14;
    return s;
}

QuadResult dc_correction(const ModelParams& p, const QuadratureSpec& spec, Evaluation how) {
    return correction(p, Term::DC, spec, how);
}

QuadResult xc_correction(const ModelParams& p, const QuadratureSpec& spec, Evaluation how) {
    return correction(p, Term::XC, spec, how);
}

QuadResult xb_correction(const ModelParams& p, const QuadratureSpec& spec, Evaluation how) {
    return correction(p, Term::XB, spec, how);
}

double db_diagnostic(const ModelParams& p, const QuadratureSpec& spec) {
    const DerivedParams d = derive(p);
    if (d.kappa == 0.0) return 0.0;
    QuadratureSpec s = spec;
    s.oscillation_frequency.reset();
    auto integrand = [&](double x) {
        return electron_current(d, x) * vp_current(d, x, density_spec()) +
               electron_current(d, -x) * vp_current(d, -x, density_spec());
    };
    const QuadResult r = require_converged(integrate_interval(integrand, 0.0, 20.0 / d.mc(), s),
                                           "db diagnostic");
    return -r.value / (p.c * p.c);
}

double db_correction(const ModelParams& p, const QuadratureSpec& spec) {
    const double residual = db_diagnostic(p, spec);
    if (std::abs(residual) >= 1e-12) {
        std::ostringstream os;
        os << "direct Breit term should vanish, diagnostic gives " << residual;
        throw ConsistencyError(os.str());
    }
    return 0.0;
}

QuadResult total_vp_correction(const ModelParams& p, const QuadratureSpec& spec) {
    const DerivedParams d = derive(p);
    if (d.kappa == 0.0) return {};
    const double m2c4 = d.mc2() * d.mc2();
    QuadratureSpec s = spec;
    s.oscillation_frequency.reset();
    s.scale = d.kappa;
    auto integrand = [&](double k) {
        const Dispersion dk = dispersion(p, k);
        return -(1.0 + d.eps1 * dk.eps_k / m2c4) * reduced_core(d, k, dk.eps_k);
    };
    return require_converged(integrate_halfline(integrand, s), "total vp correction");
}

EnergyBreakdown breakdown(const ModelParams& p, const QuadratureSpec& spec) {
    const DerivedParams d = derive(p);
    EnergyBreakdown b;
    b.zeroth = d.eps1;
    if (d.kappa == 0.0) return b;

    auto dc = std::async(std::launch::async, [&] { return dc_correction(p, spec); });
    auto xc = std::async(std::launch::async, [&] { return xc_correction(p, spec); });
    auto xb = std::async(std::launch::async, [&] { return xb_correction(p, spec); });
    auto total = std::async(std::launch::async, [&] { return total_vp_correction(p, spec); });
    auto db = std::async(std::launch::async, [&] { return db_correction(p, spec); });

    const QuadResult rdc = dc.get(), rxc = xc.get(), rxb = xb.get(), rt = total.get();
    b.db = db.get();
    b.dc = rdc.value;
    b.xc = rxc.value;
    b.xb = rxb.value;
    b.total_vp = rt.value;
    b.errors = {rdc.error_estimate, rxc.error_estimate, 0.0, rxb.error_estimate, rt.error_estimate};

    const double sum = b.dc + b.xc + b.db + b.xb;
    const double combined = b.errors.dc + b.errors.xc + b.errors.xb + b.errors.total_vp;
    if (std::abs(sum - b.total_vp) > 1e-9 * std::abs(b.total_vp) + combined) {
        std::ostringstream os;
        os.precision(17);
        os << "compact total " << b.total_vp << " differs from dc+xc+db+xb = " << sum;
        throw ConsistencyError(os.str());
    }
    return b;
}

}  // namespace qed1d
