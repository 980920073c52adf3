#include "qed1d/vacuum_polarization.hpp"

#include <cmath>
#include <numbers>

#include "qed1d/parallel.hpp"

namespace qed1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

QuadratureSpec pointwise_spec(const DerivedParams& d, double x, const QuadratureSpec& base) {
    QuadratureSpec s = base;
    if (x != 0.0) {
        s.oscillation_frequency = 2.0 * std::abs(x);
        s.scale = d.mc();
    } else {
        s.oscillation_frequency.reset();
        s.scale = d.kappa;
    }
    return s;
}

// Lorentzian weight kappa / (pi (k^2 + kappa^2)).
double weight(const DerivedParams& d, double k) {
    return d.kappa / (kPi * (k * k + d.kappa * d.kappa));
}

}  // namespace

double VpKernels::f(double k, double x) const {
    const double eps = std::hypot(k * d.params.c, d.mc2());
    return d.kappa * std::cos(2.0 * k * x) - (d.eps1 / eps) * k * std::sin(2.0 * k * std::abs(x));
}

double VpKernels::g(double k, double x) const {
    const double eps = std::hypot(k * d.params.c, d.mc2());
    return (d.eps1 / eps) * k * std::cos(2.0 * k * x) + d.kappa * std::sin(2.0 * k * std::abs(x));
}

QuadratureSpec density_spec() {
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-11;
    return s;
}

CMat2 vp_density_matrix(const DerivedParams& d, double x, const QuadratureSpec& spec) {
    if (x == 0.0)
        throw DomainError("vp density matrix entries diverge at x = 0; only the trace is finite");
    if (d.kappa == 0.0) return CMat2::zero();
    const VpKernels kern{d};
    const ModelParams& p = d.params;
    const double two_mc2 = 2.0 * d.mc2();
    const QuadratureSpec s = pointwise_spec(d, x, spec);

    // (eps+mc^2)/(2mc^2) times -s^2, s and 1 respectively.
    auto upper = [&](double k) {
        const Dispersion dk = dispersion(p, k);
        return weight(d, k) * dk.kinetic / two_mc2 * kern.f(k, x);
    };
    auto lower = [&](double k) {
        const Dispersion dk = dispersion(p, k);
        return -weight(d, k) * (dk.eps_k + d.mc2()) / two_mc2 * kern.f(k, x);
    };
    auto off = [&](double k) { return weight(d, k) * k * p.c / two_mc2 * kern.g(k, x); };

    const double n11 = require_converged(integrate_halfline(upper, s), "vp density matrix (1,1)").value;
    const double n22 = require_converged(integrate_halfline(lower, s), "vp density matrix (2,2)").value;
    const double n12 = require_converged(integrate_halfline(off, s), "vp density matrix (1,2)").value;
    CMat2 n;
    n(0, 0) = n11;
    n(1, 1) = n22;
    n(0, 1) = I * n12;
    n(1, 0) = -I * n12;
    return n;
}

QuadResult vp_density(const DerivedParams& d, double x, const QuadratureSpec& spec) {
    if (d.kappa == 0.0) return {};
    const VpKernels kern{d};
    auto integrand = [&](double k) { return -weight(d, k) * kern.f(k, x); };
    return require_converged(integrate_halfline(integrand, pointwise_spec(d, x, spec)), "vp density");
}

double commutator_window(const DerivedParams& d) { return 10.0 / d.mc(); }

QuadResult vp_density_commutator(const DerivedParams& d, double x, const QuadratureSpec& spec) {
    if (std::abs(x) > commutator_window(d))
        throw DomainError("commutator density is only evaluated for |x| <= 10/(mc)");
    if (d.kappa == 0.0) return {};
    const double base = -0.5 * d.kappa * std::exp(-2.0 * d.kappa * std::abs(x));
    if (x == 0.0) return {base, 0.0, 0, true};
    auto integrand = [&](double k) {
        const double eps = std::hypot(k * d.params.c, d.mc2());
        return weight(d, k) * (d.eps1 / eps) * k * std::sin(2.0 * k * std::abs(x));
    };
    QuadResult r = require_converged(integrate_halfline(integrand, pointwise_spec(d, x, spec)),
                                     "commutator vp density");
    r.value += base;
    return r;
}

CommutatorCheck vp_density_commutator_checked(const DerivedParams& d, double x,
                                              const QuadratureSpec& spec) {
    CommutatorCheck c;
    c.commutator = vp_density_commutator(d, x, spec);
    c.spectral = vp_density(d, x, spec);
    const double combined = c.commutator.error_estimate + c.spectral.error_estimate;
    const double floor = std::max(spec.abs_tol, spec.rel_tol * std::abs(c.spectral.value));
    c.unstable = std::abs(c.commutator.value - c.spectral.value) > 10.0 * std::max(combined, floor);
    return c;
}

double vp_current(const DerivedParams& d, double x, const QuadratureSpec& spec) {
    if (d.kappa == 0.0) return 0.0;
    const VpKernels kern{d};
    const double c = d.params.c;
    const double two_mc2 = 2.0 * d.mc2();
    auto integrand = [&](double k) {
        const double amp = -weight(d, k) * k * c / two_mc2 * kern.g(k, x);
        const cplx n12 = -I * amp;
        const cplx n21 = I * amp;
        return (c * (n12 + n21)).real();
    };
    const QuadResult r =
        require_converged(integrate_halfline(integrand, pointwise_spec(d, x, spec)), "vp current");
    if (std::abs(r.value) >= 1e-10)
        throw ConsistencyError("vacuum-polarization current does not vanish: " +
                               std::to_string(r.value));
    return r.value;
}

VacuumChargeSummary vacuum_charge_summary(const ModelParams& p) {
    validate(p);
    const double q = (2.0 / kPi) * std::atan(p.Z / (2.0 * p.c));
    return {-q, p.Z + q};
}

QuadResult vp_charge_integral(const DerivedParams& d, const QuadratureSpec& spec) {
    if (d.kappa == 0.0) return {};
    const double x_max = 20.0 / d.mc();
    QuadratureSpec inner = density_spec();
    inner.rel_tol = std::min(inner.rel_tol, 0.1 * spec.rel_tol);
    long evals = 0;
    auto n = [&](double x) {
        const QuadResult r = vp_density(d, x, inner);
        evals += r.evaluations;
        return r.value;
    };
    // Breakpoints on the Compton scale resolve the x log x cusp at the origin.
    std::vector<double> bps;
    for (double b = x_max / 4096.0; b < x_max; b *= 4.0) bps.push_back(b);
    QuadResult half = require_converged(integrate_interval(n, 0.0, x_max, spec, bps), "vp charge integral");
    const double tail = std::abs(vp_density(d, x_max, inner).value) / (2.0 * d.mc());
    return {2.0 * half.value, 2.0 * (half.error_estimate + tail), half.evaluations + evals, true};
}

double vp_half_width(const DerivedParams& d, const QuadratureSpec& spec) {
    if (d.kappa == 0.0) throw DomainError("no vacuum polarization for Z = 0");
    const double target = 0.5 * vp_density(d, 0.0, spec).value;
    double lo = 0.0, hi = 1.0 / d.mc();
    while (vp_density(d, hi, spec).value < target) hi *= 2.0;
    for (int it = 0; it < 60 && hi - lo > 1e-10 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (vp_density(d, mid, spec).value < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> linear_grid(double x_min, double x_max, int points) {
    if (points < 2) throw DomainError("a grid needs at least 2 points");
    if (!(x_max > x_min)) throw DomainError("grid requires x_min < x_max");
    std::vector<double> xs(points);
    const double n1 = points - 1;
    for (int i = 0; i < points; ++i) xs[i] = (x_min * (n1 - i) + x_max * i) / n1;
    return xs;
}

RadialProfile make_profile(const std::string& quantity, const ModelParams& p,
                           const std::vector<double>& xs,
                           const std::function<QuadResult(double)>& point) {
    RadialProfile prof;
    prof.quantity = quantity;
    prof.params = p;
    prof.xs = xs;
    const auto results =
        parallel_map<QuadResult>(xs.size(), [&](std::size_t i) { return point(xs[i]); });
    for (const auto& r : results) {
        prof.values.push_back(r.value);
        prof.errors.push_back(r.error_estimate);
    }
    return prof;
}

}  // namespace qed1d
