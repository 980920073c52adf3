// Acceptance suite. `acceptance N` runs criterion N, `acceptance` runs all.
// Each criterion prints exactly one PASS/FAIL line; the exit status is
// nonzero if any criterion fails.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qed1d/energy_corrections.hpp"
#include "qed1d/green_function.hpp"
#include "qed1d/model.hpp"
#include "qed1d/vacuum_polarization.hpp"

using namespace qed1d;

namespace {

constexpr double C = kDefaultC;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!detail.str().empty()) detail << "; ";
            pass = false;
            detail << what;
        }
    }
};

struct Criterion {
    const char* title;
    double budget_s;
    std::function<void(Verdict&)> body;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void vacuum_charge_identity(Verdict& v) {
    double worst = 0.0;
    for (double Z : {1.0, 10.0, 50.0, 120.0}) {
        const ModelParams p{Z, C, 1.0};
        const QuadResult r = vp_charge_integral(derive(p));
        const double dev = std::abs(r.value - vacuum_charge_summary(p).integral);
        worst = std::max(worst, dev);
        v.require(r.converged && dev <= 1e-6, "Z=" + fmt(Z) + " deviation " + fmt(dev));
    }
    if (v.pass) v.detail << "max deviation " << fmt(worst);
}

void route_equivalence(Verdict& v) {
    const std::vector<double> xs = linear_grid(-0.05, 0.05, 101);
    double worst = 0.0;
    for (double Z : {1.0, 50.0, 120.0}) {
        const ModelParams p{Z, C, 1.0};
        const DerivedParams d = derive(p);
        const double window = 5.0 / d.mc();
        const RadialProfile spec = make_profile("n_vp", p, xs, [&](double x) { return vp_density(d, x); });
        const RadialProfile green = make_profile("n_vp", p, xs, [&](double x) { return vp_density_green(p, x); });
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double dg = std::abs(spec.values[i] - green.values[i]);
            worst = std::max(worst, dg);
            v.require(dg <= 1e-8, "Z=" + fmt(Z) + " x=" + fmt(xs[i]) + " spectral/green " + fmt(dg));
            if (std::abs(xs[i]) <= window) {
                const double comm = vp_density_commutator(d, xs[i]).value;
                const double dc = std::max(std::abs(comm - spec.values[i]), std::abs(comm - green.values[i]));
                worst = std::max(worst, dc);
                v.require(dc <= 1e-8, "Z=" + fmt(Z) + " x=" + fmt(xs[i]) + " commutator " + fmt(dc));
            }
        }
    }
    if (v.pass) v.detail << "max pairwise difference " << fmt(worst);
}

void closed_form_anchors(Verdict& v) {
    double worst = 0.0;
    for (double Z : {0.5, 1.0, 10.0, 50.0, 120.0, 274.0}) {
        const ModelParams p{Z, C, 1.0};
        const DerivedParams d = derive(p);
        const double r1 = std::abs(vp_density(d, 0.0).value / (-d.kappa / 2) - 1);
        const double r2 = std::abs(uehling_density(p, 0.0).value / (-Z / 2) - 1);
        worst = std::max({worst, r1, r2});
        v.require(r1 <= 1e-10, "Z=" + fmt(Z) + " n_vp(0) rel " + fmt(r1));
        v.require(r2 <= 1e-10, "Z=" + fmt(Z) + " n_vp1(0) rel " + fmt(r2));
    }
    if (v.pass) v.detail << "max relative deviation " << fmt(worst);
}

void vacuum_neutrality(Verdict& v) {
    for (double Z : {1.0, 10.0}) {
        const ModelParams p{Z, C, 1.0};
        const VacuumCharges q = vacuum_numbers(p);
        const QuadResult integral = vp_charge_integral(derive(p));
        v.require(std::abs(q.n_net) <= 1e-6, "Z=" + fmt(Z) + " |N_e-N_p|=" + fmt(std::abs(q.n_net)));
        v.require(std::abs(integral.value) > 100 * integral.error_estimate && std::abs(integral.value) > 1e-6,
                  "Z=" + fmt(Z) + " density integral indistinguishable from 0");
        if (v.pass) v.detail << "Z=" << fmt(Z) << " |N_e-N_p|=" << fmt(std::abs(q.n_net)) << " integral=" << fmt(integral.value) << " ";
    }
}

void energy_consistency(Verdict& v) {
    for (double Z : {50.0, 60.0}) {
        const EnergyBreakdown b = breakdown({Z, C, 1.0});
        const double sum = b.dc + b.xc + b.db + b.xb;
        const double rel = std::abs(b.total_vp - sum) / std::abs(sum);
        v.require(rel <= 1e-9, "Z=" + fmt(Z) + " total vs sum " + fmt(rel));
        v.require(b.db == 0.0, "db nonzero");
    }
    const ModelParams p{50.0, C, 1.0};
    using Fn = QuadResult (*)(const ModelParams&, const QuadratureSpec&, Evaluation);
    const std::pair<const char*, Fn> terms[] = {{"dc", dc_correction}, {"xc", xc_correction}, {"xb", xb_correction}};
    double worst = 0.0;
    for (const auto& [name, fn] : terms) {
        const double reduced = fn(p, energy_spec(), Evaluation::Reduced).value;
        const double direct = fn(p, energy_spec(), Evaluation::Direct2D).value;
        const double rel = std::abs(reduced - direct) / std::abs(direct);
        worst = std::max(worst, rel);
        v.require(rel <= 1e-9, std::string(name) + " reduced vs 2D " + fmt(rel));
    }
    if (v.pass) v.detail << "max reduced-vs-2D deviation " << fmt(worst);
}

void sign_pattern(Verdict& v) {
    double worst_ratio = 0.0, worst_z = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double Z = 1.0 + 119.0 * i / 24;
        const EnergyBreakdown b = breakdown({Z, C, 1.0});
        v.require(b.dc < 0 && b.xc > 0 && b.xb < 0 && b.total_vp < 0, "sign pattern broken at Z=" + fmt(Z));
        if (Z <= 40.0) {
            const double ratio = std::abs(b.xc + b.xb) / std::abs(b.xc);
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_z = Z;
            }
        }
    }
    v.require(worst_ratio < 0.05, "|xc+xb|/|xc| reaches " + fmt(worst_ratio) + " at Z=" + fmt(worst_z));
    for (int i = 0; i < 25; ++i) {
        const double inv_c = 0.01 + 0.99 * i / 24;
        const EnergyBreakdown b = breakdown({1.0, 1.0 / inv_c, 1.0});
        v.require(b.dc < 0 && b.xc > 0 && b.xb < 0 && b.total_vp < 0, "sign pattern broken at 1/c=" + fmt(inv_c));
    }
    if (v.pass) v.detail << "max |xc+xb|/|xc| for Z<=40 " << fmt(worst_ratio);
}

void scaling_laws(Verdict& v) {
    std::vector<double> zs{0.5, 1.0, 2.0, 4.0}, tz;
    for (double Z : zs) tz.push_back(std::abs(total_vp_correction({Z, C, 1.0}).value));
    const double sz = fit_slope(zs, tz);
    std::vector<double> inv_c, tc;
    for (double c : {137.036, 274.0, 548.0}) {
        inv_c.push_back(1.0 / c);
        tc.push_back(std::abs(total_vp_correction({1.0, c, 1.0}).value));
    }
    const double sc = fit_slope(inv_c, tc);
    v.require(std::abs(sz - 2.0) <= 0.05, "Z exponent " + fmt(sz));
    v.require(std::abs(sc - 1.0) <= 0.05, "1/c exponent " + fmt(sc));
    v.detail << (v.pass ? "" : "; ") << "Z exponent " << sz << ", 1/c exponent " << sc;
}

void nonrelativistic_limits(Verdict& v) {
    using Big = boost::multiprecision::cpp_bin_float_50;
    const double cs[3] = {1e2, 1e3, 1e4};
    const double Z = 1.0, k = 0.8;
    double res[3], dev[3], dminus[3], lower[3];
    for (int i = 0; i < 3; ++i) {
        const Big z = Z, c = cs[i], m = 1;
        const Big e = bound_state_energy<Big>(z, c, m);
        res[i] = std::abs(static_cast<double>(e - (m * c * c - m * z * z / 2 + m * z * z * z * z / (8 * c * c))));
        const PhaseShifts ph = phase_shifts({Z, cs[i], 1.0}, k);
        dev[i] = std::abs(std::tan(ph.delta_plus) - Z / k);
        dminus[i] = ph.delta_minus;
        const Spinor s = bound_spinor(derive({Z, cs[i], 1.0}), 0.7);
        lower[i] = std::abs(s.lower) / std::abs(s.upper);
    }
    for (int i = 0; i < 2; ++i) {
        const double rr = res[i + 1] / res[i];
        v.require(std::abs(std::log10(rr) + 4) < 0.01, "residual ratio " + fmt(rr));
        v.require(dev[i + 1] / dev[i] < 0.011, "tan(delta+) - mZ/k ratio " + fmt(dev[i + 1] / dev[i]));
        v.require(dminus[i + 1] / dminus[i] < 0.011, "delta- ratio " + fmt(dminus[i + 1] / dminus[i]));
        v.require(lower[i + 1] / lower[i] < 0.11, "lower component ratio " + fmt(lower[i + 1] / lower[i]));
    }
    if (v.pass) v.detail << "residual exponent " << std::log10(res[2] / res[1]) << " per decade of c";
}

void boundary_conditions(Verdict& v) {
    const StateLabel labels[4] = {{Branch::Positive, Parity::Gerade},
                                  {Branch::Positive, Parity::Ungerade},
                                  {Branch::Negative, Parity::Gerade},
                                  {Branch::Negative, Parity::Ungerade}};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> logk(-2.0, 4.0);
    double worst = 0.0;
    auto gap = [](const Spinor& a, const Spinor& b) {
        return std::max(std::abs(a.upper - b.upper), std::abs(a.lower - b.lower));
    };
    for (double Z : {1.0, 120.0}) {
        const ModelParams p{Z, C, 1.0};
        const DerivedParams d = derive(p);
        const CMat2 M = boundary_matrix(p);
        const double gb = gap(bound_spinor(d, 0.0, Side::Right), M * bound_spinor(d, 0.0, Side::Left)) / d.A;
        worst = std::max(worst, gb);
        v.require(gb <= 1e-12, "bound state Z=" + fmt(Z) + " " + fmt(gb));
        for (int i = 0; i < 20; ++i) {
            const double k = std::pow(10.0, logk(rng));
            for (const auto& lab : labels) {
                const double g = gap(scattering_state(p, lab, k, 0.0, Side::Right),
                                     M * scattering_state(p, lab, k, 0.0, Side::Left));
                worst = std::max(worst, g);
                v.require(g <= 1e-12, "scattering Z=" + fmt(Z) + " k=" + fmt(k) + " " + fmt(g));
            }
        }
    }
    if (v.pass) v.detail << "max mismatch " << fmt(worst);
}

void uehling_dominance(Verdict& v) {
    const std::vector<double> xs = linear_grid(-0.05, 0.05, 21);
    double worst = 0.0;
    for (double x : xs) {
        double prev = 0.0;
        for (double Z : {4.0, 2.0, 1.0, 0.5}) {
            const ModelParams p{Z, C, 1.0};
            const double rem = std::abs(vp_density(derive(p), x).value - uehling_density(p, x).value);
            if (prev > 0.0) {
                const double ratio = rem / prev;
                worst = std::max(worst, ratio);
                v.require(ratio <= 0.6, "x=" + fmt(x) + " Z=" + fmt(Z) + " ratio " + fmt(ratio));
            }
            prev = rem;
        }
    }
    if (v.pass) v.detail << "max halving ratio " << fmt(worst);
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"vacuum-charge identity", 10, vacuum_charge_identity},
        {"route equivalence", 60, route_equivalence},
        {"closed-form anchors", 1, closed_form_anchors},
        {"vacuum neutrality", 120, vacuum_neutrality},
        {"energy-correction consistency", 60, energy_consistency},
        {"sign pattern and cancellation", 600, sign_pattern},
        {"scaling laws", 300, scaling_laws},
        {"non-relativistic limits", 5, nonrelativistic_limits},
        {"boundary conditions", 5, boundary_conditions},
        {"first-order dominance", 60, uehling_dominance},
    };
    return list;
}

bool run_one(int n) {
    const Criterion& c = criteria()[n - 1];
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(secs <= c.budget_s, "runtime " + fmt(secs) + " s over budget");
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", n, c.title, v.detail.str().c_str(),
                secs);
    std::fflush(stdout);
    return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
    const int count = static_cast<int>(criteria().size());
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > count) {
            std::fprintf(stderr, "usage: acceptance [1-%d ...]\n", count);
            return 2;
        }
        which.push_back(n);
    }
    if (which.empty())
        for (int n = 1; n <= count; ++n) which.push_back(n);
    bool ok = true;
    for (int n : which) ok = run_one(n) && ok;
    return ok ? 0 : 1;
}
