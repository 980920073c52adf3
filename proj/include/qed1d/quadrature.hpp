#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qed1d {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    // Angular frequency of the dominant oscillation in the integration
    // variable, e.g. 2|x| for cos(2kx). Panels are then aligned to pi/omega.
    std::optional<double> oscillation_frequency;
    // Characteristic length of the integrand's non-oscillatory structure;
    // used by the tan() maps and to place the first breakpoints.
    double scale = 1.0;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

/// Throws QuadratureError naming `integral` unless r.converged.
const QuadResult& require_converged(const QuadResult& r, const std::string& integral);

/// Adaptive Gauss-Kronrod (10/21) on [a, b] with optional interior breakpoints.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                              const std::vector<double>& breakpoints = {});

/// Integral over (0, inf). Without an oscillation hint the variable is mapped
/// k = scale * tan(theta). With a hint omega the range is cut into half-period
/// panels of width pi/omega whose partial sums are accelerated by Wynn's
/// epsilon algorithm.
QuadResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec);

enum class Symmetry { None, Even };

/// Integral over the whole real line, u = scale * tan(phi). When declared
/// Even, a probe check f(u) == f(-u) runs first; if it passes only (0, inf)
/// is integrated and doubled.
QuadResult integrate_imaginary_axis(const Integrand& f, const QuadratureSpec& spec,
                                    Symmetry symmetry = Symmetry::None);

/// Range of one variable of a 2D integral.
struct Range {
    enum class Kind { Finite, HalfLine, RealLine };
    Kind kind = Kind::HalfLine;
    double a = 0.0;
    double b = 0.0;
    double scale = 0.0;  // 0 keeps the scale of the spec in force
    Symmetry symmetry = Symmetry::None;

    static Range finite(double a, double b) { return {Kind::Finite, a, b, 0.0, Symmetry::None}; }
    static Range half_line(double scale = 0.0) {
        return {Kind::HalfLine, 0.0, 0.0, scale, Symmetry::None};
    }
    static Range real_line(double scale = 0.0, Symmetry sym = Symmetry::None) {
        return {Kind::RealLine, 0.0, 0.0, scale, sym};
    }
};

/// Nested adaptive quadrature of f(outer, inner). The inner tolerance is a tenth
/// of the outer one. `inner_spec` may adjust the inner spec per outer point
/// (for instance an oscillation hint that depends on the outer variable).
QuadResult integrate_2d(const Integrand2& f, const Range& outer, const Range& inner,
                        const QuadratureSpec& spec,
                        const std::function<void(double, QuadratureSpec&)>& inner_spec = {});

/// One-dimensional dispatch on a Range.
QuadResult integrate_range(const Integrand& f, const Range& r, const QuadratureSpec& spec);

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// estimate and a crude error from the last two diagonal values.
std::pair<double, double> wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace qed1d
