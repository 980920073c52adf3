#include "qed1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "qed1d/errors.hpp"

namespace qed1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// Kronrod abscissae and weights for the 21-point rule; odd indices are the
// 10-point Gauss nodes.
constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

double checked(const Integrand& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "integrand returned " << v << " at " << x;
        throw QuadratureError("integrand", os.str());
    }
    return v;
}

Segment qk21(const Integrand& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);

    double fv1[10], fv2[10];
    const double fc = checked(f, centr);
    double resg = 0.0;
    double resk = wgk[10] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        const double f1 = checked(f, centr - absc);
        const double f2 = checked(f, centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jtw] * (f1 + f2);
        resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        const double f1 = checked(f, centr - absc);
        const double f2 = checked(f, centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += wgk[jtwm1] * (f1 + f2);
        resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > kUflow / (50.0 * kEps)) abserr = std::max(kEps * 50.0 * resabs, abserr);
    return {a, b, result, abserr};
}

double tolerance(const QuadratureSpec& spec, double value) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

void validate(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (spec.max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
    if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
        throw DomainError("quadrature scale must be positive");
}

QuadResult integrate_mapped_halfline(const Integrand& f, const QuadratureSpec& spec) {
    const double s = spec.scale;
    auto g = [&](double th) {
        const double c = std::cos(th);
        return f(s * std::tan(th)) * s / (c * c);
    };
    return integrate_interval(g, 0.0, 0.5 * kPi, spec);
}

QuadResult integrate_oscillatory_halfline(const Integrand& f, const QuadratureSpec& spec,
                                          double omega) {
    const double period = kPi / omega;
    // The core holds the non-oscillatory structure, but never more than 16
    // half-periods; beyond that the panels plus extrapolation are cheaper.
    const double a0 = period * std::clamp(std::ceil(4.0 * spec.scale / period), 1.0, 16.0);

    std::vector<double> bps;
    for (double b = std::min(spec.scale, a0) / 1024.0; b < a0; b *= 4.0) bps.push_back(b);

    QuadResult total = integrate_interval(f, 0.0, a0, spec, bps);
    if (!total.converged) return total;

    std::vector<double> sums{total.value};
    double panel_err = total.error_estimate;
    long evals = total.evaluations;
    double prev_est = total.value, prev_prev_est = total.value;
    int negligible_run = 0;
    const int max_panels = std::max(50, spec.max_subdivisions);

    for (int j = 0; j < max_panels; ++j) {
        const double a = a0 + j * period;
        QuadratureSpec ps = spec;
        ps.abs_tol = 0.01 * tolerance(spec, sums.back());
        const QuadResult p = integrate_interval(f, a, a + period, ps);
        evals += p.evaluations;
        panel_err += p.error_estimate;
        if (!p.converged) return {sums.back() + p.value, panel_err, evals, false};
        sums.push_back(sums.back() + p.value);

        const double tol = tolerance(spec, sums.back());
        negligible_run = std::abs(p.value) < 1e-3 * tol ? negligible_run + 1 : 0;
        if (negligible_run >= 3) return {sums.back(), panel_err + std::abs(p.value), evals, true};

        if (sums.size() < 5) continue;
        const std::vector<double> tail(
            sums.end() - std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(sums.size()), 60),
            sums.end());
        const auto [est, werr] = wynn_epsilon(tail);
        const double err = std::max({std::abs(est - prev_est), std::abs(est - prev_prev_est), werr});
        prev_prev_est = prev_est;
        prev_est = est;
        if (sums.size() >= 8 && err + panel_err <= tolerance(spec, est))
            return {est, err + panel_err, evals, true};
    }
    return {prev_est, std::abs(prev_est - prev_prev_est) + panel_err, evals, false};
}

}  // namespace

const QuadResult& require_converged(const QuadResult& r, const std::string& integral) {
    if (!r.converged) {
        std::ostringstream os;
        os.precision(6);
        os << "no convergence (estimate " << r.value << ", error " << r.error_estimate << ", "
           << r.evaluations << " evaluations)";
        throw QuadratureError(integral, os.str());
    }
    return r;
}

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                              const std::vector<double>& breakpoints) {
    validate(spec);
    if (a == b) return {};
    if (b < a) {
        QuadResult r = integrate_interval(f, b, a, spec, breakpoints);
        r.value = -r.value;
        return r;
    }

    std::vector<double> cuts{a};
    for (double p : breakpoints)
        if (p > a && p < b) cuts.push_back(p);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(b);

    std::priority_queue<Segment> heap;
    double value = 0.0, error = 0.0;
    long evals = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Segment s = qk21(f, cuts[i], cuts[i + 1]);
        evals += 21;
        value += s.value;
        error += s.error;
        heap.push(s);
    }

    // Segments too narrow to split further are retired with their error.
    double frozen_error = 0.0;
    int subdivisions = static_cast<int>(cuts.size()) - 1;
    while (error > tolerance(spec, value)) {
        if (heap.empty() || subdivisions >= spec.max_subdivisions)
            return {value, error, evals, false};
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) <= 100.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            frozen_error += worst.error;
            if (frozen_error > tolerance(spec, value)) return {value, error, evals, false};
            continue;
        }
        const Segment l = qk21(f, worst.a, mid);
        const Segment r = qk21(f, mid, worst.b);
        evals += 42;
        ++subdivisions;
        value += l.value + r.value - worst.value;
        error += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        if (error <= tolerance(spec, value)) break;
    }
    // Recompute the sums from the segments to shed accumulated round-off.
    value = 0.0;
    error = frozen_error;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error, evals, error <= tolerance(spec, value)};
}

QuadResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec) {
    validate(spec);
    if (spec.oscillation_frequency) {
        const double omega = std::abs(*spec.oscillation_frequency);
        if (omega > 0.0 && std::isfinite(omega)) return integrate_oscillatory_halfline(f, spec, omega);
    }
    return integrate_mapped_halfline(f, spec);
}

QuadResult integrate_imaginary_axis(const Integrand& f, const QuadratureSpec& spec,
                                    Symmetry symmetry) {
    validate(spec);
    QuadratureSpec hs = spec;
    hs.oscillation_frequency.reset();
    if (symmetry == Symmetry::Even) {
        bool even = true;
        long probes = 0;
        for (double t : {0.013, 0.31, 0.77, 1.0, 2.9, 17.0, 230.0}) {
            const double u = t * spec.scale;
            const double fp = checked(f, u), fm = checked(f, -u);
            probes += 2;
            if (std::abs(fp - fm) > 1e-12 * std::max({std::abs(fp), std::abs(fm), kUflow})) {
                even = false;
                break;
            }
        }
        if (even) {
            hs.abs_tol = 0.5 * spec.abs_tol;
            QuadResult r = integrate_mapped_halfline(f, hs);
            r.value *= 2.0;
            r.error_estimate *= 2.0;
            r.evaluations += probes;
            return r;
        }
    }
    const double s = spec.scale;
    auto g = [&](double ph) {
        const double c = std::cos(ph);
        return f(s * std::tan(ph)) * s / (c * c);
    };
    return integrate_interval(g, -0.5 * kPi, 0.5 * kPi, hs, {0.0});
}

QuadResult integrate_range(const Integrand& f, const Range& r, const QuadratureSpec& spec) {
    QuadratureSpec s = spec;
    switch (r.kind) {
        case Range::Kind::Finite:
            return integrate_interval(f, r.a, r.b, s);
        case Range::Kind::HalfLine:
            if (r.scale > 0.0) s.scale = r.scale;
            return integrate_halfline(f, s);
        case Range::Kind::RealLine:
            if (r.scale > 0.0) s.scale = r.scale;
            return integrate_imaginary_axis(f, s, r.symmetry);
    }
    return {};
}

QuadResult integrate_2d(const Integrand2& f, const Range& outer, const Range& inner,
                        const QuadratureSpec& spec,
                        const std::function<void(double, QuadratureSpec&)>& inner_spec) {
    validate(spec);
    long inner_evals = 0;
    QuadratureSpec ospec = spec;
    ospec.oscillation_frequency.reset();

    auto outer_f = [&](double y) {
        QuadratureSpec is = spec;
        is.rel_tol = 0.1 * spec.rel_tol;
        is.abs_tol = 0.1 * spec.abs_tol;
        is.oscillation_frequency.reset();
        if (inner_spec) inner_spec(y, is);
        const QuadResult r = integrate_range([&](double x) { return f(y, x); }, inner, is);
        inner_evals += r.evaluations;
        if (!r.converged) {
            std::ostringstream os;
            os.precision(17);
            os << "inner integral did not converge at outer point " << y;
            throw QuadratureError("integrate_2d", os.str());
        }
        return r.value;
    };
    QuadResult r = integrate_range(outer_f, outer, ospec);
    r.evaluations += inner_evals;
    return r;
}

std::pair<double, double> wynn_epsilon(const std::vector<double>& s) {
    const std::size_t n = s.size();
    if (n == 0) return {0.0, 0.0};
    if (n < 3) return {s.back(), n == 2 ? std::abs(s[1] - s[0]) : 0.0};

    std::vector<double> prev(n + 1, 0.0);  // column k-1
    std::vector<double> cur(s.begin(), s.end());  // column k
    double best = s.back();
    double best_prev = s[n - 2];
    for (std::size_t k = 1; cur.size() >= 2; ++k) {
        std::vector<double> next(cur.size() - 1);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (d == 0.0 || !std::isfinite(1.0 / d)) {
                ok = false;
                break;
            }
            next[i] = prev[i + 1] + 1.0 / d;
        }
        if (!ok) break;
        if (k % 2 == 0) {
            if (!std::isfinite(next.back())) break;
            best_prev = next.size() >= 2 ? next[next.size() - 2] : best;
            best = next.back();
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {best, std::abs(best - best_prev)};
}

}  // namespace qed1d
