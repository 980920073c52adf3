#include "qed1d/green_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qed1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

double lambda_of(const ModelParams& p) { return p.Z / (2.0 * p.c); }

}  // namespace

ResolventScalars resolvent_scalars(const ModelParams& p, cplx omega, bool allow_pole) {
    validate(p);
    const double mc2 = p.m * p.c * p.c;
    if (omega.imag() == 0.0 && std::abs(omega.real()) >= mc2) {
        std::ostringstream os;
        os.precision(17);
        os << "frequency " << omega.real() << " lies on the spectrum |w| >= mc^2";
        throw DomainError(os.str());
    }
    ResolventScalars r;
    r.kappa = std::sqrt(mc2 * mc2 - omega * omega) / p.c;
    if (r.kappa.real() < 0.0) r.kappa = -r.kappa;
    r.g_plus = std::sqrt((mc2 + omega) / (mc2 - omega));
    r.g_minus = std::sqrt((mc2 - omega) / (mc2 + omega));
    const double lam = lambda_of(p);
    const cplx d1 = 1.0 - lam * r.g_plus;
    const cplx d2 = 1.0 + lam * r.g_minus;
    if (!allow_pole && (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12))
        throw DomainError("frequency within 1e-12 of the bound-state pole");
    r.z1 = 1.0 / d1;
    r.z2 = 1.0 / d2;
    return r;
}

CMat2 free_resolvent(const ModelParams& p, double x, double x2, cplx omega) {
    const ResolventScalars r = resolvent_scalars(p, omega, true);
    const double sg = sgn(x - x2);
    const cplx pre = -std::exp(-r.kappa * std::abs(x - x2)) / (2.0 * p.c);
    CMat2 G;
    G(0, 0) = pre * r.g_plus;
    G(0, 1) = pre * I * sg;
    G(1, 0) = pre * I * sg;
    G(1, 1) = -pre * r.g_minus;
    return G;
}

CMat2 resolvent_correction(const ModelParams& p, double x, double x2, cplx omega, Order order) {
    if (p.Z == 0.0) return CMat2::zero();
    const ResolventScalars r = resolvent_scalars(p, omega);
    const cplx z1 = order == Order::FirstOrder ? cplx{1.0} : r.z1;
    const cplx z2 = order == Order::FirstOrder ? cplx{1.0} : r.z2;
    const double s = sgn(x), s2 = sgn(x2);
    const cplx g = r.g_plus, gm = r.g_minus;

    CMat2 G1, G2;
    G1(0, 0) = g * g;
    G1(0, 1) = -I * s2 * g;
    G1(1, 0) = I * s * g;
    G1(1, 1) = s * s2;
    G2(0, 0) = s * s2;
    G2(0, 1) = -I * s * gm;
    G2(1, 0) = I * s2 * gm;
    G2(1, 1) = gm * gm;

    const cplx pre = -p.Z / (4.0 * p.c * p.c) * std::exp(-r.kappa * (std::abs(x) + std::abs(x2)));
    return pre * (z1 * G1 + z2 * G2);
}

cplx resolvent_correction_trace(const ModelParams& p, double x, cplx omega, Order order) {
    if (p.Z == 0.0) return 0.0;
    const ResolventScalars r = resolvent_scalars(p, omega);
    const cplx z1 = order == Order::FirstOrder ? cplx{1.0} : r.z1;
    const cplx z2 = order == Order::FirstOrder ? cplx{1.0} : r.z2;
    const cplx g = r.g_plus, gm = r.g_minus;
    const cplx pre = -p.Z / (4.0 * p.c * p.c) * std::exp(-2.0 * r.kappa * std::abs(x));
    return pre * (z1 * (g * g + 1.0) + z2 * (1.0 + gm * gm));
}

QuadratureSpec green_spec() {
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-11;
    return s;
}

QuadResult vp_density_green(const ModelParams& p, double x, const QuadratureSpec& spec, Order order) {
    validate(p);
    if (p.Z == 0.0) return {};
    QuadratureSpec s = spec;
    s.scale = p.m * p.c * p.c;
    auto integrand = [&](double u) {
        return resolvent_correction_trace(p, x, cplx{0.0, u}, order).real() / (2.0 * kPi);
    };
    return require_converged(integrate_imaginary_axis(integrand, s, Symmetry::Even),
                             "green-function vp density");
}

QuadResult uehling_density(const ModelParams& p, double x, const QuadratureSpec& spec) {
    validate(p);
    if (p.Z == 0.0) return {};
    const double a = 2.0 * p.m * p.c * std::abs(x);
    auto integrand = [&](double phi) { return std::exp(-a / std::cos(phi)); };
    QuadResult r;
    if (a == 0.0) {
        r = {0.5 * kPi, 0.0, 0, true};
    } else {
        QuadratureSpec s = spec;
        s.oscillation_frequency.reset();
        r = require_converged(integrate_interval(integrand, 0.0, 0.5 * kPi, s), "uehling density");
    }
    const double pre = -p.Z * p.m / kPi;
    return {pre * r.value, std::abs(pre) * r.error_estimate, r.evaluations, true};
}

QuadResult uehling_density_frequency(const ModelParams& p, double x, const QuadratureSpec& spec) {
    validate(p);
    if (p.Z == 0.0) return {};
    const double mc2 = p.m * p.c * p.c;
    QuadratureSpec s = spec;
    s.scale = mc2;
    auto integrand = [&](double u) {
        const double e2 = mc2 * mc2 + u * u;
        return std::exp(-2.0 * std::sqrt(e2) * std::abs(x) / p.c) / e2;
    };
    QuadResult r = require_converged(integrate_imaginary_axis(integrand, s, Symmetry::Even),
                                     "uehling density (frequency form)");
    // The two-sided integral is twice the half-line one.
    const double pre = -p.Z * p.m * p.m * p.c * p.c / kPi * 0.5;
    return {pre * r.value, std::abs(pre) * r.error_estimate, r.evaluations, true};
}

namespace {

struct NumberIntegrands {
    const ModelParams& p;

    // Re of the frequency integrands at momentum k, both signs of k included.
    void at(double k, double u, double& electrons, double& positrons) const {
        const Dispersion dk = dispersion(p, k);
        const ResolventScalars r = resolvent_scalars(p, cplx{0.0, u});
        const double b2 = dk.B_k * dk.B_k;
        const double s2 = dk.s_k * dk.s_k;
        const cplx em = dk.eps_k - I * u;
        const cplx ep = dk.eps_k + I * u;
        const double scale = 2.0 * p.Z / (2.0 * kPi);
        electrons = -scale * (b2 * (r.z1 + r.z2 * s2) / (em * em)).real();
        positrons = scale * (b2 * (r.z1 * s2 + r.z2) / (ep * ep)).real();
    }
};

}  // namespace

VacuumNumberDensity vacuum_number_density(const ModelParams& p, double k, const QuadratureSpec& spec) {
    validate(p);
    if (p.Z == 0.0) return {};
    const NumberIntegrands nb{p};
    QuadratureSpec s = spec;
    s.scale = dispersion(p, k).eps_k;
    auto fe = [&](double u) {
        double e, q;
        nb.at(k, u, e, q);
        return e;
    };
    auto fp = [&](double u) {
        double e, q;
        nb.at(k, u, e, q);
        return q;
    };
    const double e = require_converged(integrate_imaginary_axis(fe, s, Symmetry::Even),
                                       "vacuum electron number (frequency)").value;
    const double q = require_converged(integrate_imaginary_axis(fp, s, Symmetry::Even),
                                       "vacuum positron number (frequency)").value;
    return {e, q};
}

VacuumCharges vacuum_numbers(const ModelParams& p, const QuadratureSpec& spec, double cutoff_in_mc) {
    validate(p);
    VacuumCharges out;
    out.cutoff = cutoff_in_mc * p.m * p.c;
    if (p.Z == 0.0) return out;

    const NumberIntegrands nb{p};
    auto inner_scale = [&](double k, QuadratureSpec& is) { is.scale = dispersion(p, k).eps_k; };
    const Range u_range = Range::real_line(0.0, Symmetry::Even);

    auto electrons = [&](double k, double u) {
        double e, q;
        nb.at(k, u, e, q);
        return e;
    };
    auto positrons = [&](double k, double u) {
        double e, q;
        nb.at(k, u, e, q);
        return q;
    };
    auto net = [&](double k, double u) {
        double e, q;
        nb.at(k, u, e, q);
        return e - q;
    };

    const Range k_cut = Range::finite(0.0, out.cutoff);
    const QuadResult re = require_converged(integrate_2d(electrons, k_cut, u_range, spec, inner_scale),
                                            "vacuum electron number");
    const QuadResult rp = require_converged(integrate_2d(positrons, k_cut, u_range, spec, inner_scale),
                                            "vacuum positron number");
    QuadratureSpec ns = spec;
    ns.scale = p.m * p.c;
    const QuadResult rn = require_converged(
        integrate_2d(net, Range::half_line(p.m * p.c), u_range, ns, inner_scale), "vacuum net charge");

    out.n_e = re.value;
    out.n_p = rp.value;
    out.n_net = rn.value;
    out.n_e_error = re.error_estimate;
    out.n_p_error = rp.error_estimate;
    out.n_net_error = rn.error_estimate;
    return out;
}

}  // namespace qed1d
