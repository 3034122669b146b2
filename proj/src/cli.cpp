#include "rsur/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rsur/analytic_fields.hpp"
#include "rsur/eigensolver.hpp"
#include "rsur/errors.hpp"
#include "rsur/field_io.hpp"
#include "rsur/kspace.hpp"
#include "rsur/moments.hpp"
#include "rsur/propagator.hpp"

namespace rsur::cli {
namespace {

using nlohmann::json;

constexpr double kGridTolerance = 1e-3;
constexpr double kAnalyticTolerance = 1e-6;
constexpr double kSpectrumTolerance = 1e-3;
constexpr double kSpreadTolerance = 0.02;
// ||k.F~|| / ||k|| ||F~|| of an input field: warn above the first, reject above the second.
constexpr double kTransverseWarning = 1e-6;
constexpr double kTransverseTolerance = 1e-2;

constexpr double kFieldExtent = 16.0;
constexpr double kSpreadExtent = 16.0;

std::string format_csv_row(std::initializer_list<double> values) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '\n';
    return os.str();
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw FormatError("cannot open " + config.out + " for writing");
    f << text;
    if (!f) throw FormatError("failed writing " + config.out);
}

void require_format(const RunConfig& config) {
    if (config.format != "json" && config.format != "csv") throw DomainError("--format must be json or csv");
}

analytic::SaturatingFieldSpec spec_of(const RunConfig& config) {
    analytic::SaturatingFieldSpec spec{config.a, config.c_plus, config.c_minus, 0.0};
    spec.validate();
    return spec;
}

Grid3 position_grid(const RunConfig& config, double default_extent) {
    validate_grid_size(config.grid);
    const double extent = (config.extent > 0.0 ? config.extent : default_extent) * config.a;
    return Grid3::centered(config.grid, extent);
}

// Runs a command body and maps library errors onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const DegenerateNormError& e) {
        err << "error: degenerate field: " << e.what() << '\n';
        return kDegenerateField;
    } catch (const ResolutionError& e) {
        err << "error: resolution: " << e.what() << '\n';
        return kResolution;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

std::string report_text(const RunConfig& config, const VarianceReport& r, json extra) {
    if (config.format == "csv") {
        return "delta_r2,delta_k2,product,bound,saturation_ratio,norm_r,norm_k,truncation_warning\n" +
               format_csv_row({r.delta_r2, r.delta_k2, r.product, r.bound, r.saturation_ratio, r.norm_r, r.norm_k,
                               r.truncation_warning ? 1.0 : 0.0});
    }
    json j = r;
    for (auto& [key, value] : extra.items()) j[key] = value;
    return j.dump(2) + "\n";
}

}  // namespace

cplx parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    if (!(is >> re)) throw DomainError("cannot parse complex value '" + text + "'");
    char sep = 0;
    if (is >> sep) {
        if (sep != ',' || !(is >> im)) throw DomainError("cannot parse complex value '" + text + "'");
        std::string rest;
        if (is >> rest) throw DomainError("cannot parse complex value '" + text + "'");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("complex value must be finite");
    return {re, im};
}

void validate_grid_size(std::size_t n) {
    if (n < 16 || n > 256 || !std::has_single_bit(n)) {
        throw DomainError("--grid must be a power of two between 16 and 256");
    }
}

int cmd_verify_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(config);
        VarianceReport report;
        json extra;
        double tol = 0.0;
        bool saturating = false;
        if (!config.input.empty()) {
            FieldGrid field = io::read_field(std::filesystem::path(config.input));
            const FieldGrid field_k = field.space() == Space::Wavevector ? field : fourier_to_kspace(field);
            norm(field_k);
            const double residual = transversality_residual(field_k);
            extra["transversality_residual"] = residual;
            if (residual > kTransverseTolerance) {
                err << "error: input field is not transverse (residual " << residual << ")\n";
                return static_cast<int>(kInputError);
            }
            if (residual > kTransverseWarning) err << "warning: input field is slightly longitudinal (residual " << residual << ")\n";
            report = uncertainty_product(field);
            tol = config.tolerance.value_or(kGridTolerance);
            extra["path"] = "grid";
        } else {
            saturating = true;
            const auto spec = spec_of(config);
            const auto amps = analytic::saturating_amplitudes(spec);
            if (config.path == "analytic") {
                report = uncertainty_product(amps, [&](const Vec3& r) { return analytic::saturating_rs_field(r, 0.0, spec); },
                                             spec.a);
                tol = config.tolerance.value_or(kAnalyticTolerance);
            } else if (config.path == "grid") {
                const Grid3 rgrid = position_grid(config, kFieldExtent);
                report = uncertainty_product(synthesize_kspace(amps, rgrid.reciprocal(), 0.0));
                tol = config.tolerance.value_or(kGridTolerance);
            } else {
                throw DomainError("--path must be analytic or grid");
            }
            extra["path"] = config.path;
        }
        const bool bound_ok = report.product >= report.bound - tol;
        const bool saturated = !saturating || std::fabs(report.saturation_ratio - 1.0) <= tol;
        extra["tolerance"] = tol;
        extra["passed"] = bound_ok && saturated;
        emit(config, out, report_text(config, report, extra));
        if (report.truncation_warning) err << "warning: field does not decay at the grid boundary\n";
        return static_cast<int>(bound_ok && saturated ? kSuccess : kCheckFailed);
    });
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(config);
        const radial::RadialProblem problem{config.kappa_max, config.points};
        const radial::RadialSpectrum spectrum = radial::solve_radial(problem, config.states);
        const double tol = config.tolerance.value_or(kSpectrumTolerance);
        double worst = 0.0;
        std::vector<double> expected;
        for (std::size_t n = 0; n < spectrum.eigenvalues.size(); ++n) {
            expected.push_back(radial::analytic_eigenvalue(static_cast<unsigned>(n)));
            worst = std::max(worst, std::fabs(spectrum.eigenvalues[n] - expected.back()));
        }
        const bool passed = worst <= tol;
        if (config.format == "csv") {
            emit(config, out, radial::eigenfunctions_csv(spectrum));
        } else {
            json j = spectrum;
            j["expected"] = expected;
            j["max_error"] = worst;
            j["tolerance"] = tol;
            j["passed"] = passed;
            emit(config, out, j.dump(2) + "\n");
        }
        return static_cast<int>(passed ? kSuccess : kCheckFailed);
    });
}

int cmd_field(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (config.out.empty()) throw DomainError("field: --out PATH is required");
        const auto spec = spec_of(config);
        const Grid3 grid = position_grid(config, kFieldExtent);
        const double t = config.time * config.a;
        std::function<CVec3(const Vec3&)> fn;
        if (config.kind == "saturating") {
            fn = [&](const Vec3& r) { return analytic::saturating_rs_field(r, t, spec); };
        } else if (config.kind == "simplest") {
            if (t != 0.0) throw DomainError("field: the simplest field is defined at t = 0 only");
            fn = [&](const Vec3& r) { return analytic::simplest_field(r, config.c_plus, config.a); };
        } else if (config.kind == "photon-plus") {
            fn = [&](const Vec3& r) { return analytic::photon_wavefunctions(r, t, spec).plus; };
        } else if (config.kind == "photon-minus") {
            fn = [&](const Vec3& r) { return analytic::photon_wavefunctions(r, t, spec).minus; };
        } else {
            throw DomainError("--kind must be saturating, simplest, photon-plus or photon-minus");
        }

        const FieldGrid field = FieldGrid::sample(grid, Space::Position, fn);
        io::write_field(std::filesystem::path(config.out), field);

        if (!config.profile.empty()) {
            std::ofstream f(config.profile);
            if (!f) throw FormatError("cannot open " + config.profile + " for writing");
            f << "z,re_fx,im_fx,re_fy,im_fy,re_fz,im_fz\n";
            const Axis& zaxis = grid.axis(2);
            for (std::size_t k = 0; k < zaxis.count; ++k) {
                const double z = zaxis.coord(k);
                const CVec3 v = fn(Vec3(0.0, 0.0, z));
                f << format_csv_row({z, v.x().real(), v.x().imag(), v.y().real(), v.y().imag(), v.z().real(),
                                     v.z().imag()});
            }
            if (!f) throw FormatError("failed writing " + config.profile);
        }

        json summary{{"out", config.out},
                     {"kind", config.kind},
                     {"counts", {config.grid, config.grid, config.grid}},
                     {"extent", grid.axis(0).spacing * static_cast<double>(config.grid)},
                     {"time", t}};
        if (norm(field) > 0.0) {
            summary["delta_r2"] = variance_position(field);
            summary["delta_k2"] = variance_kspace(fourier_to_kspace(field));
            summary["boundary_density_ratio"] = boundary_density_ratio(field);
        }
        out << summary.dump(2) << '\n';
        return static_cast<int>(kSuccess);
    });
}

int cmd_spread(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(config);
        const auto spec = spec_of(config);
        const auto amps = analytic::saturating_amplitudes(spec);
        const Grid3 rgrid = position_grid(config, kSpreadExtent);
        std::vector<double> times = config.times.empty() ? std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0} : config.times;
        for (double& t : times) {
            if (!std::isfinite(t)) throw DomainError("times must be finite");
            t *= config.a;
        }
        const Trajectory tr = spreading_trajectory(amps, rgrid.reciprocal(), times);
        const QuadraticFit fit = fit_quadratic(tr.times, tr.second_moments);
        const double tol = config.tolerance.value_or(kSpreadTolerance);

        const auto it0 = std::find(tr.times.begin(), tr.times.end(), 0.0);
        bool t0_minimal = true;
        if (it0 != tr.times.end()) {
            const double m0 = tr.second_moments[static_cast<std::size_t>(it0 - tr.times.begin())];
            for (double m : tr.second_moments) t0_minimal = t0_minimal && m >= m0;
        }
        const bool passed = std::fabs(fit.acceleration() - 2.0) <= tol && t0_minimal;

        if (config.format == "csv") {
            emit(config, out, trajectory_csv(tr));
        } else {
            json j{{"trajectory", tr}, {"fit", fit}, {"t0_minimal", t0_minimal},
                   {"tolerance", tol}, {"passed", passed}};
            emit(config, out, j.dump(2) + "\n");
        }
        if (tr.truncated) {
            err << "error: field reaches the grid boundary; enlarge --extent or --grid, or shorten --times\n";
            return static_cast<int>(kTruncation);
        }
        return static_cast<int>(passed ? kSuccess : kCheckFailed);
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uncertainty-relation verification for Riemann-Silberstein fields", "rsur"};
    app.set_config("--config", "", "TOML/INI file, one [command] section of flag values; flags take precedence");
    app.require_subcommand(1, 1);

    RunConfig config;
    std::string c_plus = "-1", c_minus = "1";
    std::vector<double> times;
    double tolerance = 0.0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--a", config.a, "Scale a");
        sub->add_option("--c-plus", c_plus, "Positive-helicity coefficient, re[,im]");
        sub->add_option("--c-minus", c_minus, "Negative-helicity coefficient, re[,im]");
        sub->add_option("--grid", config.grid, "Grid points per axis (power of two, 16..256)");
        sub->add_option("--extent", config.extent, "Box edge in units of a");
        sub->add_option("--tolerance", tolerance, "Acceptance tolerance");
        sub->add_option("--out", config.out, "Output path (default stdout)");
        sub->add_option("--format", config.format, "json or csv");
    };

    auto* verify = app.add_subcommand("verify-bound", "Check Delta r Delta k >= 5/2 for a field");
    common(verify);
    verify->add_option("--input", config.input, "Field-grid file (.rsf)");
    verify->add_flag("--saturating", config.saturating, "Use the built-in saturating field (default without --input)");
    verify->add_option("--path", config.path, "analytic or grid (built-in field only)");

    auto* spectrum = app.add_subcommand("spectrum", "Solve the radial eigenvalue problem");
    common(spectrum);
    spectrum->add_option("--kappa-max", config.kappa_max, "Radial cutoff");
    spectrum->add_option("--points", config.points, "Interior grid points");
    spectrum->add_option("--states", config.states, "Number of eigenstates");

    auto* field = app.add_subcommand("field", "Sample a closed-form field on a grid");
    common(field);
    field->add_option("--kind", config.kind, "saturating, simplest, photon-plus or photon-minus");
    field->add_option("--time", config.time, "Time in units of a/c");
    field->add_option("--profile", config.profile, "z-axis profile CSV");

    auto* spread = app.add_subcommand("spread", "Fit the spreading law <r^2>(t)");
    common(spread);
    spread->add_option("--times", times, "Times in units of a/c")->delimiter(',');

    try {
        // --config belongs to the top-level app; accept it anywhere on the line
        std::vector<std::string> ordered;
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) {
                ordered.push_back(args[i]);
                ordered.push_back(args[++i]);
            } else if (args[i].rfind("--config=", 0) == 0) {
                ordered.push_back(args[i]);
            } else {
                rest.push_back(args[i]);
            }
        }
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        app.parse(std::vector<std::string>(ordered.rbegin(), ordered.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    config.times = times;
    if (chosen->count("--tolerance") > 0) config.tolerance = tolerance;
    try {
        config.c_plus = parse_complex(c_plus);
        config.c_minus = parse_complex(c_minus);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (config.saturating && !config.input.empty()) {
        err << "error: --saturating and --input are mutually exclusive\n";
        return kInputError;
    }

    if (config.command == "verify-bound") return cmd_verify_bound(config, out, err);
    if (config.command == "spectrum") return cmd_spectrum(config, out, err);
    if (config.command == "field") return cmd_field(config, out, err);
    return cmd_spread(config, out, err);
}

}  // namespace rsur::cli
