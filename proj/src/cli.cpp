#include "qed1d/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qed1d/energy_corrections.hpp"
#include "qed1d/errors.hpp"
#include "qed1d/green_function.hpp"
#include "qed1d/parallel.hpp"
#include "qed1d/vacuum_polarization.hpp"

namespace qed1d::cli {

namespace {

// A table of named columns. Columns flagged `error` are emitted in JSON only.
struct Column {
    std::string name;
    bool error = false;
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
};

struct Common {
    double Z = 0.0;
    double c = kDefaultC;
    double m = 1.0;
    double rel_tol = 0.0;  // 0 keeps each module's default
    double abs_tol = 0.0;
    int max_subdivisions = 0;
    std::string format;
    std::string output;
    std::string x_units = "au";
};

QuadratureSpec with_overrides(QuadratureSpec s, const Common& o) {
    if (o.rel_tol > 0.0) s.rel_tol = o.rel_tol;
    if (o.abs_tol > 0.0) s.abs_tol = o.abs_tol;
    if (o.max_subdivisions > 0) s.max_subdivisions = o.max_subdivisions;
    return s;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

void write_csv(std::ostream& os, const Table& t) {
    bool first = true;
    for (const auto& col : t.columns) {
        if (col.error) continue;
        os << (first ? "" : ",") << col.name;
        first = false;
    }
    os << '\n';
    for (const auto& row : t.rows) {
        first = true;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (t.columns[i].error) continue;
            os << (first ? "" : ",") << format_number(row[i]);
            first = false;
        }
        os << '\n';
    }
}

void write_json_object(std::ostream& os, const Table& t, std::size_t r, const std::string& indent) {
    os << "{";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? ",\n" : "\n") << indent << "  " << json_string(t.columns[i].name) << ": "
           << format_number(t.rows[r][i]);
    }
    os << "\n" << indent << "}";
}

void write_json(std::ostream& os, const Table& t, bool single) {
    if (single) {
        write_json_object(os, t, 0, "");
        os << "\n";
        return;
    }
    os << "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << (r ? ",\n  " : "\n  ");
        write_json_object(os, t, r, "  ");
    }
    os << "\n]\n";
}

struct Emitter {
    const Common& opts;
    std::ostream& out;

    void emit(const Table& t, bool single, const nlohmann::json& meta) const {
        std::ostringstream body;
        const bool json = opts.format == "json";
        if (json)
            write_json(body, t, single);
        else
            write_csv(body, t);
        if (opts.output.empty()) {
            out << body.str();
            return;
        }
        std::ofstream f(opts.output, std::ios::binary);
        if (!f) throw std::ios_base::failure("cannot open output file " + opts.output);
        f << body.str();
        if (!f) throw std::ios_base::failure("write failed for " + opts.output);

        nlohmann::json m = meta;
        m["format"] = opts.format;
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& col : t.columns)
            if (json || !col.error) cols.push_back(col.name);
        m["columns"] = cols;
        std::ofstream mf(opts.output + ".meta.json", std::ios::binary);
        if (!mf) throw std::ios_base::failure("cannot open metadata file " + opts.output + ".meta.json");
        mf << m.dump(2) << '\n';
    }
};

nlohmann::json base_meta(const Common& o, const std::string& command, const QuadratureSpec& spec) {
    nlohmann::json m;
    m["command"] = command;
    m["Z"] = o.Z;
    m["c"] = o.c;
    m["m"] = o.m;
    m["rel_tol"] = spec.rel_tol;
    m["abs_tol"] = spec.abs_tol;
    m["max_subdivisions"] = spec.max_subdivisions;
    m["units"] = "hartree atomic units";
    return m;
}

void add_common(CLI::App* sub, Common& o, const std::string& default_format, bool need_z = true) {
    auto* z = sub->add_option("--Z", o.Z, "Nuclear charge (0 <= Z <= 2c)");
    if (need_z) z->required();
    sub->add_option("--c", o.c, "Speed of light in a.u.")->capture_default_str();
    sub->add_option("--m", o.m, "Electron mass in a.u.")->capture_default_str();
    sub->add_option("--rel-tol", o.rel_tol, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--abs-tol", o.abs_tol, "Absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subdivisions", o.max_subdivisions, "Quadrature subdivision budget")
        ->check(CLI::PositiveNumber);
    o.format = default_format;
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output,-o", o.output, "Output file (default: stdout)");
}

ModelParams params_of(const Common& o) {
    ModelParams p{o.Z, o.c, o.m};
    validate(p);
    return p;
}

// ---- energy ---------------------------------------------------------------

const std::vector<std::string> kEnergyFields = {"zeroth", "dc", "xc", "db", "xb", "total_vp",
                                                "el_first_order"};

std::vector<double> energy_row(const EnergyBreakdown& b, double unit) {
    // zeroth stays in a.u.; corrections are divided by `unit`.
    return {b.zeroth,
            b.dc / unit,
            b.xc / unit,
            b.db / unit,
            b.xb / unit,
            b.total_vp / unit,
            b.el_first_order / unit,
            0.0,
            b.errors.dc / unit,
            b.errors.xc / unit,
            b.errors.db / unit,
            b.errors.xb / unit,
            b.errors.total_vp / unit,
            0.0};
}

std::vector<Column> energy_columns() {
    std::vector<Column> cols;
    for (const auto& f : kEnergyFields) cols.push_back({f, false});
    for (const auto& f : kEnergyFields) cols.push_back({f + "_error", true});
    return cols;
}

double energy_unit(const ModelParams& p, const std::string& units) {
    if (units != "scaled") return 1.0;
    if (p.Z == 0.0) throw DomainError("scaled energy units m Z^4/(8c^2) are undefined at Z = 0");
    return p.m * std::pow(p.Z, 4) / (8.0 * p.c * p.c);
}

// ---- vacuum charge ----------------------------------------------------------

std::vector<Column> charge_columns() {
    return {{"integral", false},        {"z_obs", false},   {"integral_numeric", false},
            {"n_e", false},             {"n_p", false},     {"n_net", false},
            {"cutoff", false},          {"integral_error", true}, {"z_obs_error", true},
            {"integral_numeric_error", true}, {"n_e_error", true}, {"n_p_error", true},
            {"n_net_error", true},      {"cutoff_error", true}};
}

std::vector<double> charge_row(const ModelParams& p, double cutoff_mc, const Common& o) {
    const VacuumChargeSummary s = vacuum_charge_summary(p);
    const DerivedParams d = derive(p);
    const QuadResult num = vp_charge_integral(d, with_overrides(QuadratureSpec{}, o));
    const VacuumCharges v = vacuum_numbers(p, with_overrides(green_spec(), o), cutoff_mc);
    return {s.integral, s.z_obs, num.value, v.n_e, v.n_p, v.n_net, v.cutoff,
            0.0,        0.0,     num.error_estimate, v.n_e_error, v.n_p_error, v.n_net_error, 0.0};
}

std::vector<Column> prefixed(std::vector<Column> head, const std::vector<Column>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

std::vector<double> joined(std::vector<double> head, const std::vector<double>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qed1d: vacuum polarization and QED energy corrections of the 1D Dirac "
                 "hydrogen-like atom", "qed1d"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common energy_o, vp_o, ue_o, ch_o, sc_o;

    auto* energy = app.add_subcommand("energy", "First-order QED corrections to the bound-state energy");
    add_common(energy, energy_o, "json");
    std::string energy_units = "au";
    energy->add_option("--energy-units", energy_units,
                       "au, or scaled: corrections in units of m Z^4/(8c^2)")
        ->check(CLI::IsMember({"au", "scaled"}))
        ->capture_default_str();

    auto* vp = app.add_subcommand("vp-density", "Vacuum-polarization density profile");
    add_common(vp, vp_o, "csv");
    std::string method = "spectral";
    double x_min = -0.05, x_max = 0.05;
    int points = 501;
    vp->add_option("--method", method, "Evaluation route")
        ->check(CLI::IsMember({"spectral", "commutator", "green", "uehling"}))
        ->capture_default_str();
    auto grid_opts = [&](CLI::App* sub, Common& o) {
        sub->add_option("--x-min", x_min, "Grid start")->capture_default_str();
        sub->add_option("--x-max", x_max, "Grid end")->capture_default_str();
        sub->add_option("--points", points, "Grid points (>= 2)")->capture_default_str();
        sub->add_option("--x-units", o.x_units, "au, or compton: units of 1/(mc)")
            ->check(CLI::IsMember({"au", "compton"}))
            ->capture_default_str();
    };
    grid_opts(vp, vp_o);

    auto* ue = app.add_subcommand("uehling", "First-order (Uehling-type) vacuum-polarization density");
    add_common(ue, ue_o, "csv");
    grid_opts(ue, ue_o);

    auto* ch = app.add_subcommand("vacuum-charge", "Vacuum charge integral, observed charge, vacuum numbers");
    add_common(ch, ch_o, "json");
    double cutoff_mc = kDefaultVacuumCutoff;
    ch->add_option("--cutoff", cutoff_mc, "Momentum cutoff for n_e, n_p in units of mc")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* sc = app.add_subcommand("scan", "Parameter scan over Z or 1/c");
    add_common(sc, sc_o, "csv", false);
    std::string variable = "Z", spacing = "linear", quantity = "energy-breakdown";
    double from = 0.0, to = 0.0;
    int steps = 0;
    sc->add_option("--variable", variable, "Scanned variable")
        ->check(CLI::IsMember({"Z", "inv_c"}))
        ->capture_default_str();
    sc->add_option("--from", from, "First value")->required();
    sc->add_option("--to", to, "Last value")->required();
    sc->add_option("--steps", steps, "Number of points (>= 2)")->required();
    sc->add_option("--spacing", spacing, "Point spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    sc->add_option("--quantity", quantity, "Scanned quantity")
        ->check(CLI::IsMember({"energy-breakdown", "vacuum-charge"}))
        ->capture_default_str();
    sc->add_option("--energy-units", energy_units, "au or scaled")
        ->check(CLI::IsMember({"au", "scaled"}))
        ->capture_default_str();
    sc->add_option("--cutoff", cutoff_mc, "Momentum cutoff for n_e, n_p in units of mc")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (energy->parsed()) {
            const ModelParams p = params_of(energy_o);
            const QuadratureSpec spec = with_overrides(energy_spec(), energy_o);
            const EnergyBreakdown b = breakdown(p, spec);
            Table t;
            t.columns = prefixed({{"Z"}, {"c"}, {"m"}}, energy_columns());
            t.rows.push_back(joined({p.Z, p.c, p.m}, energy_row(b, energy_unit(p, energy_units))));
            nlohmann::json meta = base_meta(energy_o, "energy", spec);
            meta["energy_units"] = energy_units;
            Emitter{energy_o, out}.emit(t, true, meta);
            return kOk;
        }

        if (vp->parsed() || ue->parsed()) {
            const bool uehling_cmd = ue->parsed();
            const Common& o = uehling_cmd ? ue_o : vp_o;
            const ModelParams p = params_of(o);
            const DerivedParams d = derive(p);
            if (points < 2) throw CLI::ValidationError("--points", "a grid needs at least 2 points");
            const double to_au = o.x_units == "compton" ? 1.0 / (p.m * p.c) : 1.0;
            const std::vector<double> xs = linear_grid(x_min * to_au, x_max * to_au, points);
            const std::string m = uehling_cmd ? "uehling" : method;
            const QuadratureSpec spec = with_overrides(
                m == "green" || m == "uehling" ? green_spec() : density_spec(), o);
            std::function<QuadResult(double)> point;
            if (m == "spectral")
                point = [&](double x) { return vp_density(d, x, spec); };
            else if (m == "commutator")
                point = [&](double x) { return vp_density_commutator(d, x, spec); };
            else if (m == "green")
                point = [&](double x) { return vp_density_green(p, x, spec); };
            else
                point = [&](double x) { return uehling_density(p, x, spec); };
            const std::string field = uehling_cmd ? "n_vp1" : "n_vp";
            const RadialProfile prof = make_profile(field, p, xs, point);

            Table t;
            t.columns = {{"x"}, {field}, {field + "_error", true}};
            for (std::size_t i = 0; i < xs.size(); ++i)
                t.rows.push_back({prof.xs[i] / to_au, prof.values[i], prof.errors[i]});
            nlohmann::json meta = base_meta(o, uehling_cmd ? "uehling" : "vp-density", spec);
            meta["method"] = m;
            meta["x_units"] = o.x_units;
            meta["x_min"] = x_min;
            meta["x_max"] = x_max;
            meta["points"] = points;
            Emitter{o, out}.emit(t, false, meta);
            return kOk;
        }

        if (ch->parsed()) {
            const ModelParams p = params_of(ch_o);
            const QuadratureSpec spec = with_overrides(QuadratureSpec{}, ch_o);
            Table t;
            t.columns = prefixed({{"Z"}, {"c"}, {"m"}}, charge_columns());
            t.rows.push_back(joined({p.Z, p.c, p.m}, charge_row(p, cutoff_mc, ch_o)));
            nlohmann::json meta = base_meta(ch_o, "vacuum-charge", spec);
            meta["cutoff_in_mc"] = cutoff_mc;
            Emitter{ch_o, out}.emit(t, true, meta);
            return kOk;
        }

        if (sc->parsed()) {
            if (steps < 2) throw CLI::ValidationError("--steps", "a scan needs at least 2 steps");
            if (spacing == "log" && !(from > 0.0 && to > 0.0))
                throw CLI::ValidationError("--spacing", "log spacing needs positive --from and --to");
            std::vector<double> values(steps);
            for (int i = 0; i < steps; ++i) {
                const double f = static_cast<double>(i) / (steps - 1);
                values[i] = spacing == "log" ? std::exp(std::log(from) * (1.0 - f) + std::log(to) * f)
                                             : (from * (steps - 1 - i) + to * i) / (steps - 1);
            }
            std::vector<ModelParams> ps;
            for (double v : values) {
                ModelParams p{sc_o.Z, sc_o.c, sc_o.m};
                if (variable == "Z")
                    p.Z = v;
                else {
                    if (!(v > 0.0)) throw DomainError("1/c must be positive");
                    p.c = 1.0 / v;
                }
                validate(p);
                ps.push_back(p);
            }
            const bool energy_q = quantity == "energy-breakdown";
            const QuadratureSpec espec = with_overrides(energy_spec(), sc_o);
            const QuadratureSpec cspec = with_overrides(QuadratureSpec{}, sc_o);
            const auto rows = parallel_map<std::vector<double>>(ps.size(), [&](std::size_t i) {
                const ModelParams& p = ps[i];
                const std::vector<double> head{values[i], p.Z, p.c, p.m};
                if (energy_q) return joined(head, energy_row(breakdown(p, espec), energy_unit(p, energy_units)));
                return joined(head, charge_row(p, cutoff_mc, sc_o));
            });
            Table t;
            t.columns = prefixed({{variable}, {"Z"}, {"c"}, {"m"}},
                                 energy_q ? energy_columns() : charge_columns());
            if (variable == "Z") t.columns[0].name = "scan_Z";
            t.rows = rows;
            nlohmann::json meta = base_meta(sc_o, "scan", energy_q ? espec : cspec);
            meta["variable"] = variable;
            meta["from"] = from;
            meta["to"] = to;
            meta["steps"] = steps;
            meta["spacing"] = spacing;
            meta["quantity"] = quantity;
            if (energy_q) meta["energy_units"] = energy_units;
            Emitter{sc_o, out}.emit(t, false, meta);
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "validation error: " << e.what() << "\n";
        return kDomain;
    } catch (const QuadratureError& e) {
        err << "computation error: " << e.what() << "\n";
        return kComputation;
    } catch (const ConsistencyError& e) {
        err << "computation error: " << e.what() << "\n";
        return kComputation;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
    return kUsage;
}

}  // namespace qed1d::cli
