#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "stripclass/logcoef.hpp"
#include "stripclass/maps.hpp"
#include "stripclass/polylog.hpp"
#include "stripclass/sampling.hpp"
#include "stripclass/verify.hpp"

namespace stripclass::cli {

namespace {

using nlohmann::ordered_json;

const std::set<std::string> class_commands = {"coeffs", "bounds", "verify-sharpness", "check-membership",
                                              "generate"};

ClassTarget target_of(const RunConfig& c) {
    if (c.delta) {
        return DorffParam(*c.delta);
    }
    return StripParams(*c.alpha, *c.beta);
}

SchwarzSpec schwarz_of(const RunConfig& c) {
    const cplx coef{c.c_re, c.c_im};
    if (c.schwarz == "scaled-rotation") {
        return SchwarzSpec::scaled_rotation(coef);
    }
    if (c.schwarz == "power") {
        return SchwarzSpec::power(coef, c.k);
    }
    if (c.schwarz == "blaschke-factor") {
        return SchwarzSpec::blaschke({c.a_re, c.a_im}, c.phi);
    }
    throw std::invalid_argument("unknown Schwarz kind '" + c.schwarz + "'");
}

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["command"] = c.command;
    if (c.alpha) {
        j["alpha"] = *c.alpha;
    }
    if (c.beta) {
        j["beta"] = *c.beta;
    }
    if (c.delta) {
        j["delta"] = *c.delta;
    }
    j["order"] = c.order;
    j["radius"] = c.radius;
    j["grid_angles"] = c.grid_angles;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["tolerance"] = c.tolerance;
    j["format"] = c.format;
    if (c.command == "polylog") {
        j["s"] = c.s;
        if (c.theta) {
            j["theta"] = *c.theta;
        } else {
            j["z_re"] = c.z_re;
            j["z_im"] = c.z_im;
        }
    }
    if (c.command == "generate") {
        j["schwarz"] = c.schwarz;
        j["c_re"] = c.c_re;
        j["c_im"] = c.c_im;
        j["k"] = c.k;
        j["a_re"] = c.a_re;
        j["a_im"] = c.a_im;
        j["phi"] = c.phi;
    }
    return j;
}

ordered_json report_json(const BoundReport& r) {
    ordered_json j;
    j["check"] = r.check;
    j["verdict"] = to_string(r.verdict);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["tail_estimate"] = r.tail_estimate;
    j["tolerance"] = r.tolerance;
    ordered_json ctx = ordered_json::object();
    for (const auto& [key, value] : r.context) {
        ctx[key] = value;
    }
    j["context"] = ctx;
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

std::string num(double x) {
    return fmt::format("{:.17g}", x);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return quoted + "\"";
}

void write_reports(const RunConfig& c, const std::vector<BoundReport>& reports, std::ostream& out) {
    if (c.format == "csv") {
        std::set<std::string> keys;
        for (const auto& r : reports) {
            for (const auto& [key, value] : r.context) {
                keys.insert(key);
            }
        }
        out << "check,verdict,lhs,rhs,tail_estimate,tolerance,note";
        for (const auto& key : keys) {
            out << ',' << key;
        }
        out << '\n';
        for (const auto& r : reports) {
            out << csv_field(r.check) << ',' << to_string(r.verdict) << ',' << num(r.lhs) << ',' << num(r.rhs)
                << ',' << num(r.tail_estimate) << ',' << num(r.tolerance) << ',' << csv_field(r.note);
            for (const auto& key : keys) {
                out << ',';
                if (auto it = r.context.find(key); it != r.context.end()) {
                    out << num(it->second);
                }
            }
            out << '\n';
        }
        return;
    }
    ordered_json doc;
    doc["command"] = c.command;
    doc["config"] = config_json(c);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
    }
    doc["reports"] = arr;
    doc["version"] = report_version;
    out << doc.dump(2) << '\n';
}

void emit(const RunConfig& c, const std::vector<BoundReport>& reports, std::ostream& out) {
    if (c.output && c.command != "generate") {
        std::ofstream file(*c.output);
        if (!file) {
            throw std::runtime_error("cannot open output file '" + *c.output + "'");
        }
        write_reports(c, reports, file);
    } else {
        write_reports(c, reports, out);
    }
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message) {
    ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
}

std::vector<BoundReport> cmd_coeffs(const RunConfig& c) {
    const ClassTarget target = target_of(c);
    const ExtremalFunction ext = std::holds_alternative<StripParams>(target)
                                     ? extremal_strip(std::get<StripParams>(target), c.order)
                                     : extremal_dorff(std::get<DorffParam>(target), c.order);
    std::vector<BoundReport> out;
    for (std::size_t n = 1; n <= ext.gammas.order(); ++n) {
        const cplx g = ext.gammas.gamma(n);
        const double bound = per_n_bound_for(target, static_cast<int>(n));
        BoundReport r = classify_upper("gamma", std::abs(g), bound, 1e-12 * bound);
        r.context["n"] = static_cast<double>(n);
        r.context["gamma_re"] = g.real();
        r.context["gamma_im"] = g.imag();
        r.context["slack"] = bound - std::abs(g);
        add_target_context(r, target);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> cmd_bounds(const RunConfig& c) {
    const ClassTarget target = target_of(c);
    const bool strip = std::holds_alternative<StripParams>(target);
    BoundReport r;
    r.check = strip ? "bound-strip" : "bound-dorff";
    r.rhs = bound_for(target);
    r.note = "bound value only";
    const auto constants = reference_constants();
    r.context["pi2_over_6"] = constants.pi2_over_6;
    r.context["roth"] = constants.roth;
    if (strip) {
        const auto& p = std::get<StripParams>(target);
        r.context["mu"] = p.mu();
        r.context["per_n_bound_1"] = per_n_bound_strip(p, 1);
    } else {
        r.context["per_n_bound_1"] = per_n_bound_dorff(1);
    }
    add_target_context(r, target);
    return {r};
}

std::vector<BoundReport> cmd_sharpness(const RunConfig& c) {
    const ClassTarget target = target_of(c);
    BoundReport r = sharpness_report(target, c.order);
    // Re-classify with the configured equality floor.
    BoundReport classified = classify_sharp(r.check, r.lhs, r.rhs, r.tail_estimate, c.tolerance);
    classified.context = r.context;
    classified.note = r.note;
    if (r.violated()) {
        classified.verdict = Verdict::violated;
    }
    return {classified};
}

std::vector<BoundReport> cmd_membership(const RunConfig& c) {
    const ClassTarget target = target_of(c);
    const std::size_t order = std::max(c.order, membership_min_order(c.radius));
    Rng rng(c.seed);
    std::vector<BoundReport> out;
    for (std::size_t i = 0; i < c.samples; ++i) {
        const SchwarzSpec w = random_schwarz(rng);
        const TruncatedSeries f = generate_member(target, w, order);
        for (auto& r : audit_member(f, target, c.radius, c.grid_angles)) {
            r.context["sample"] = static_cast<double>(i);
            r.context["schwarz_kind"] = static_cast<double>(static_cast<int>(w.kind()));
            out.push_back(std::move(r));
        }
    }
    return out;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
    const ClassTarget target = target_of(c);
    const SchwarzSpec w = schwarz_of(c);
    const TruncatedSeries f = generate_member(target, w, c.order);

    std::ostringstream table;
    table << "n,re,im\n";
    for (std::size_t n = 0; n <= f.order(); ++n) {
        table << n << ',' << num(f[n].real()) << ',' << num(f[n].imag()) << '\n';
    }
    if (!c.output) {
        out << table.str();
        return exit_ok;
    }
    std::ofstream file(*c.output);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + *c.output + "'");
    }
    file << table.str();

    std::vector<BoundReport> reports;
    if (static_cast<double>(f.order()) * std::log(1.0 / c.radius) >= 14.0) {
        reports.push_back(membership_check(f, target, c.radius, c.grid_angles));
    }
    write_reports(c, reports, out);
    for (const auto& r : reports) {
        if (r.violated()) {
            return exit_violated;
        }
    }
    return exit_ok;
}

std::vector<BoundReport> cmd_polylog(const RunConfig& c) {
    const cplx z = c.theta ? std::polar(1.0, *c.theta) : cplx{c.z_re, c.z_im};
    const PolylogResult series = polylog(c.s, z, c.tolerance);
    std::vector<BoundReport> out;

    BoundReport r = classify_upper("polylog-series", series.tail_bound, c.tolerance, 0.0);
    r.context = {{"s", static_cast<double>(c.s)},
                 {"z_re", z.real()},
                 {"z_im", z.imag()},
                 {"value_re", series.value.real()},
                 {"value_im", series.value.imag()},
                 {"terms_used", static_cast<double>(series.terms_used)}};
    out.push_back(r);

    if (c.s == 4 && z != cplx{1.0, 0.0}) {
        const cplx quad = li4_quadrature(z);
        BoundReport q = classify_upper("series-vs-quadrature", std::abs(quad - series.value), 0.0, 1e-8);
        q.tail_estimate = series.tail_bound;
        q.context = {{"quadrature_re", quad.real()}, {"quadrature_im", quad.imag()}};
        out.push_back(q);
    }
    if (c.s == 4 && c.theta) {
        const double theta = *c.theta;
        if (theta >= 0.0 && theta <= 2.0 * std::numbers::pi) {
            const double closed = li4_symmetric_circle(theta);
            BoundReport sym = classify_upper("symmetric-vs-series", std::abs(closed - 2.0 * series.value.real()),
                                             0.0, 1e-9);
            sym.tail_estimate = 2.0 * series.tail_bound;
            sym.context = {{"theta", theta}, {"symmetric", closed}};
            out.push_back(sym);
        }
    }
    return out;
}

} // namespace

void validate(const RunConfig& c) {
    static const std::set<std::string> commands = {"coeffs",   "bounds",   "verify-sharpness",
                                                   "check-membership", "generate", "polylog"};
    if (!commands.contains(c.command)) {
        throw std::invalid_argument("unknown command '" + c.command + "'");
    }
    // coeffs only lists gamma_1..gamma_order, so short listings are allowed.
    const std::size_t min_order = c.command == "coeffs" ? 1 : 8;
    if (c.order < min_order) {
        throw std::invalid_argument("order must be at least " + std::to_string(min_order));
    }
    if (!(c.radius > 0.0 && c.radius < 1.0)) {
        throw std::invalid_argument("radius must lie in (0, 1)");
    }
    if (!(c.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (c.grid_angles == 0) {
        throw std::invalid_argument("grid-angles must be positive");
    }
    if (c.format != "json" && c.format != "csv") {
        throw std::invalid_argument("format must be json or csv");
    }
    if (class_commands.contains(c.command)) {
        const bool strip = c.alpha.has_value() || c.beta.has_value();
        if (strip && c.delta) {
            throw std::invalid_argument("give either --alpha/--beta or --delta, not both");
        }
        if (!strip && !c.delta) {
            throw std::invalid_argument("command '" + c.command + "' needs --alpha and --beta, or --delta");
        }
        if (strip && !(c.alpha && c.beta)) {
            throw std::invalid_argument("--alpha and --beta must be given together");
        }
        // Parameter-domain checks live in the constructors.
        (void)target_of(c);
    }
    if (c.command == "generate") {
        (void)schwarz_of(c);
    }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
    } catch (const std::exception& e) {
        error_record(err, "config", e.what());
        return exit_config;
    }
    try {
        if (c.command == "generate") {
            return cmd_generate(c, out);
        }
        std::vector<BoundReport> reports;
        if (c.command == "coeffs") {
            reports = cmd_coeffs(c);
        } else if (c.command == "bounds") {
            reports = cmd_bounds(c);
        } else if (c.command == "verify-sharpness") {
            reports = cmd_sharpness(c);
        } else if (c.command == "check-membership") {
            reports = cmd_membership(c);
        } else {
            reports = cmd_polylog(c);
        }
        emit(c, reports, out);
        for (const auto& r : reports) {
            if (r.violated()) {
                error_record(err, "violated", r.check + (r.note.empty() ? "" : ": " + r.note));
                return exit_violated;
            }
        }
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        error_record(err, "config", e.what());
        return exit_config;
    } catch (const std::domain_error& e) {
        error_record(err, "config", e.what());
        return exit_config;
    } catch (const std::exception& e) {
        error_record(err, "runtime", e.what());
        return exit_config;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Logarithmic-coefficient toolkit for the starlike classes S(alpha, beta) and M(delta)"};
    app.add_option("command", c.command, "coeffs | bounds | verify-sharpness | check-membership | generate | polylog")
        ->required();
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double theta = 0.0;
    std::string output;
    auto* alpha_opt = app.add_option("--alpha", alpha, "Lower strip edge, alpha < 1");
    auto* beta_opt = app.add_option("--beta", beta, "Upper strip edge, beta > 1");
    auto* delta_opt = app.add_option("--delta", delta, "Dorff angle in radians, pi/2 <= delta < pi");
    app.add_option("--order", c.order, "Truncation order")->capture_default_str();
    app.add_option("--radius", c.radius, "Sampling radius in (0, 1)")->capture_default_str();
    app.add_option("--grid-angles", c.grid_angles, "Angles per sampled circle")->capture_default_str();
    app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app.add_option("--samples", c.samples, "Random members to audit")->capture_default_str();
    app.add_option("--tolerance", c.tolerance, "Equality / accuracy tolerance")->capture_default_str();
    app.add_option("--format", c.format, "json or csv")->capture_default_str();
    auto* output_opt = app.add_option("--output", output, "Write the report (or generated coefficients) here");
    app.add_option("--s", c.s, "Polylogarithm order")->capture_default_str();
    app.add_option("--z-re", c.z_re, "Real part of the polylog argument");
    app.add_option("--z-im", c.z_im, "Imaginary part of the polylog argument");
    auto* theta_opt = app.add_option("--theta", theta, "Polylog argument e^{i theta}, radians");
    app.add_option("--schwarz", c.schwarz, "scaled-rotation | power | blaschke-factor")->capture_default_str();
    app.add_option("--c-re", c.c_re, "Schwarz coefficient c, real part");
    app.add_option("--c-im", c.c_im, "Schwarz coefficient c, imaginary part");
    app.add_option("--k", c.k, "Power of the power-map Schwarz function");
    app.add_option("--a-re", c.a_re, "Blaschke zero a, real part");
    app.add_option("--a-im", c.a_im, "Blaschke zero a, imaginary part");
    app.add_option("--phi", c.phi, "Blaschke rotation angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        error_record(err, "config", e.what());
        return exit_config;
    }
    if (alpha_opt->count() > 0) {
        c.alpha = alpha;
    }
    if (beta_opt->count() > 0) {
        c.beta = beta;
    }
    if (delta_opt->count() > 0) {
        c.delta = delta;
    }
    if (theta_opt->count() > 0) {
        c.theta = theta;
    }
    if (output_opt->count() > 0) {
        c.output = output;
    }
    return run(c, out, err);
}

} // namespace stripclass::cli
