#include "rigidity/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rigidity/critical.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/geometry.hpp"
#include "rigidity/maximizer.hpp"
#include "rigidity/serialize.hpp"

namespace rigidity::cli {
namespace {

enum class Mode { Float, Exact };
enum class Format { Json, Csv, Tsv };

struct RunConfig {
    std::string command;
    Mode mode = Mode::Float;
    std::optional<int> n;
    std::string coeff = "7/12";
    std::uint64_t seed = 42;
    int starts = 100;
    double tol = kDefaultRotationalTolerance;
    Format format = Format::Json;
    std::string output_path;

    // surface / energy
    std::string family = "clifford";
    int k = 1;
    std::optional<double> theta;
    int resolution = 4;
    double r0 = 1.0;
    double h = 1e-3;
    double z_max = 0.5;
};

struct Output {
    Json json;
    std::optional<Table> table;  // used for csv/tsv; flattened json otherwise
    bool numerical_failure = false;
};

std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

void require_float(const RunConfig& cfg) {
    if (cfg.mode == Mode::Exact)
        throw InvalidArgument("command '" + cfg.command + "' is floating-point only; exact mode is not available");
}

RigidityFunctional functional_for(const RunConfig& cfg, int n) { return RigidityFunctional(n, parse_rational(cfg.coeff)); }

int dimension_or_default(const RunConfig& cfg) { return cfg.n.value_or(4); }

Json read_stdin_json(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON input: ") + e.what());
    }
}

template <class T>
T scalar_from_json(const Json& j);

template <>
double scalar_from_json<double>(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
    throw InvalidArgument("expected a number, got " + j.dump());
}

template <>
Rational scalar_from_json<Rational>(const Json& j) {
    if (j.is_number_float())
        throw InvalidArgument("exact mode takes integers or \"p/q\" strings, got " + j.dump());
    if (j.is_number_integer() || j.is_string()) return rational_from_json(j);
    throw InvalidArgument("expected a rational, got " + j.dump());
}

template <class T>
std::vector<T> vector_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a JSON array");
    std::vector<T> out;
    for (const auto& x : j) out.push_back(scalar_from_json<T>(x));
    return out;
}

template <class T>
ShapeOperator<T> matrix_from_json(const Json& j) {
    std::vector<std::vector<T>> rows;
    for (const auto& row : j) rows.push_back(vector_from_json<T>(row));
    return ShapeOperator<T>::from_rows(rows);
}

Json scalar_to_json(double x) { return x; }
Json scalar_to_json(const Rational& q) { return rational_to_json(q); }

bool is_matrix(const Json& j) { return j.is_array() && !j.empty() && j.front().is_array(); }

void check_dimension(const RunConfig& cfg, std::size_t n) {
    if (cfg.n && static_cast<std::size_t>(*cfg.n) != n)
        throw DimensionMismatch("--n " + std::to_string(*cfg.n) + " does not match input dimension " + std::to_string(n));
}

Json pattern_json(const CurvatureVector<double>& lam, double tol) {
    RotationalPattern p = is_rotational_pattern(lam, tol);
    return Json{{"rotational", p.rotational}, {"degenerate", p.degenerate}, {"signature", p.signature}};
}

template <class T>
Output eval_command(const RunConfig& cfg, const Json& input) {
    Json report{{"command", "eval"}, {"mode", mode_name(cfg.mode)}};
    if (is_matrix(input)) {
        ShapeOperator<T> a = matrix_from_json<T>(input);
        check_dimension(cfg, a.dim());
        RigidityFunctional f = functional_for(cfg, static_cast<int>(a.dim()));
        report["n"] = f.n();
        report["coeff"] = rational_to_json(f.c());
        report["input"] = "matrix";
        report["value"] = scalar_to_json(evaluate_S(a, f));
        if constexpr (std::is_same_v<T, double>) {
            CurvatureVector<double> lam = principal_curvatures(a);
            report["curvatures"] = Json(std::vector<double>(lam.entries().begin(), lam.entries().end()));
            report["trace"] = lam.trace();
            if (lam.size() == 4 && lam.is_minimal()) report["rotational_pattern"] = pattern_json(lam, cfg.tol);
        }
    } else {
        CurvatureVector<T> lam(vector_from_json<T>(input));
        check_dimension(cfg, lam.size());
        RigidityFunctional f = functional_for(cfg, static_cast<int>(lam.size()));
        report["n"] = f.n();
        report["coeff"] = rational_to_json(f.c());
        report["input"] = "vector";
        report["value"] = scalar_to_json(evaluate_s(lam, f));
        report["trace"] = scalar_to_json(lam.trace());
        if constexpr (std::is_same_v<T, double>) {
            if (lam.size() == 4 && lam.is_minimal()) report["rotational_pattern"] = pattern_json(lam, cfg.tol);
        }
    }
    return {report, std::nullopt, false};
}

template <class T>
Output grad_command(const RunConfig& cfg, const Json& input) {
    CurvatureVector<T> lam(vector_from_json<T>(input));
    check_dimension(cfg, lam.size());
    RigidityFunctional f = functional_for(cfg, static_cast<int>(lam.size()));
    Json g = Json::array();
    for (const auto& x : gradient_s(lam, f)) g.push_back(scalar_to_json(x));
    return {Json{{"command", "grad"}, {"mode", mode_name(cfg.mode)}, {"n", f.n()}, {"coeff", rational_to_json(f.c())},
                 {"gradient", g}},
            std::nullopt, false};
}

OptimizerConfig optimizer_config(const RunConfig& cfg) {
    OptimizerConfig oc;
    oc.num_starts = cfg.starts;
    oc.seed = cfg.seed;
    return oc;
}

std::vector<SurfaceSample> generate_samples(const RunConfig& cfg) {
    if (cfg.family == "clifford") {
        CliffordSpec spec = CliffordSpec::minimal(cfg.k);
        if (cfg.theta) spec.theta = *cfg.theta;
        return clifford_samples(spec, cfg.resolution);
    }
    if (cfg.family == "catenoid") {
        auto profile = catenoid_integrate(cfg.r0, cfg.z_max, cfg.h);
        return catenoid_samples(profile);
    }
    throw InvalidArgument("unknown surface family '" + cfg.family + "' (expected clifford or catenoid)");
}

Json family_params_json(const RunConfig& cfg) {
    if (cfg.family == "clifford") {
        CliffordSpec spec = CliffordSpec::minimal(cfg.k);
        if (cfg.theta) spec.theta = *cfg.theta;
        return Json{{"name", "clifford"}, {"k", spec.k}, {"theta", spec.theta}, {"resolution", cfg.resolution}};
    }
    return Json{{"name", "catenoid"}, {"r0", cfg.r0}, {"step", cfg.h}, {"z_max", cfg.z_max}};
}

Output dispatch(const RunConfig& cfg, std::istream& in) {
    const std::string& c = cfg.command;
    if (c == "eval") {
        Json input = read_stdin_json(in);
        return cfg.mode == Mode::Exact ? eval_command<Rational>(cfg, input) : eval_command<double>(cfg, input);
    }
    if (c == "grad") {
        Json input = read_stdin_json(in);
        return cfg.mode == Mode::Exact ? grad_command<Rational>(cfg, input) : grad_command<double>(cfg, input);
    }
    if (c == "critical") {
        RigidityFunctional f = functional_for(cfg, dimension_or_default(cfg));
        auto families = enumerate_critical_families(f);
        Json fams = Json::array();
        for (const auto& fam : families) fams.push_back(family_to_json(fam));
        return {Json{{"functional", functional_to_json(f)}, {"families", fams}}, families_table(families), false};
    }
    if (c == "certify") {
        CertificateReport report = certify_nonpositivity(functional_for(cfg, dimension_or_default(cfg)));
        return {certificate_to_json(report), families_table(report.families), false};
    }
    if (c == "maximize") {
        require_float(cfg);
        RigidityFunctional f = functional_for(cfg, dimension_or_default(cfg));
        MaximizeResult result = multi_start_maximize(f, optimizer_config(cfg));
        bool any_converged = false;
        for (const auto& m : result.local_maxima) any_converged = any_converged || m.converged;
        Json j = maximize_to_json(result);
        j["functional"] = functional_to_json(f);
        return {j, maxima_table(result), !any_converged};
    }
    if (c == "sharp-constant") {
        require_float(cfg);
        SharpConstantResult result = sharp_constant(dimension_or_default(cfg), optimizer_config(cfg));
        return {sharp_constant_to_json(result), std::nullopt, false};
    }
    if (c == "surface") {
        require_float(cfg);
        RigidityFunctional f = functional_for(cfg, 4);
        auto samples = generate_samples(cfg);
        return {Json{{"family", family_params_json(cfg)}, {"samples", samples_to_json(samples, f)}},
                samples_table(samples, f), false};
    }
    if (c == "energy") {
        require_float(cfg);
        RigidityFunctional f = functional_for(cfg, 4);
        auto samples = generate_samples(cfg);
        double area = 0.0;
        for (const auto& s : samples) area += s.area_weight;
        return {Json{{"family", family_params_json(cfg)},
                     {"coeff", rational_to_json(f.c())},
                     {"energy", energy_quadrature(samples, f)},
                     {"area", area},
                     {"samples", samples.size()}},
                std::nullopt, false};
    }
    throw InvalidArgument("unknown command '" + c + "'");
}

// Scalar fields become one row; arrays are space-joined.
Table flat_table(const Json& j) {
    Table t;
    std::vector<std::string> row;
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) continue;
        t.header.push_back(key);
        if (value.is_string()) {
            row.push_back(value.get<std::string>());
        } else if (value.is_array()) {
            std::string cell;
            for (const auto& x : value) {
                if (!cell.empty()) cell += ' ';
                cell += x.is_string() ? x.get<std::string>() : x.dump();
            }
            row.push_back(cell);
        } else {
            row.push_back(value.dump());
        }
    }
    t.rows.push_back(std::move(row));
    return t;
}

std::string render(const Output& o, Format format) {
    if (format == Format::Json) return o.json.dump(2) + "\n";
    Table t = o.table ? *o.table : flat_table(o.json);
    return t.render(format == Format::Csv ? ',' : '\t');
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", message}, {"kind", kind}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Rotational rigidity invariant toolkit"};
    app.set_help_flag("-h,--help");

    const std::vector<std::string> commands{"eval", "grad", "critical", "certify", "maximize",
                                            "sharp-constant", "surface", "energy"};
    std::string mode = "float", format = "json";
    int n_value = 0;
    app.add_option("command", cfg.command, "eval | grad | critical | certify | maximize | sharp-constant | surface | energy")
        ->required()
        ->check(CLI::IsMember(commands));
    app.add_option("--mode", mode, "float or exact")->check(CLI::IsMember({"float", "exact"}));
    auto* n_opt = app.add_option("--n", n_value, "dimension (number of principal curvatures)");
    app.add_option("--coeff", cfg.coeff, "coefficient c as p/q");
    app.add_option("--seed", cfg.seed, "random seed for multi-start");
    app.add_option("--starts", cfg.starts, "number of multi-start runs");
    app.add_option("--tol", cfg.tol, "relative tolerance for the rotational-pattern test");
    app.add_option("--format", format, "json, csv or tsv")->check(CLI::IsMember({"json", "csv", "tsv"}));
    app.add_option("-o,--output", cfg.output_path, "write the report to this file");
    app.add_option("--family", cfg.family, "surface family: clifford or catenoid");
    app.add_option("--k", cfg.k, "Clifford first-factor dimension (1, 2 or 3)");
    auto* theta_opt = app.add_option("--theta", "Clifford radius angle (defaults to the minimal one)");
    app.add_option("--resolution", cfg.resolution, "Clifford grid resolution per angle");
    app.add_option("--r0", cfg.r0, "catenoid neck radius");
    app.add_option("--step", cfg.h, "catenoid RK4 step h");
    app.add_option("--z-max", cfg.z_max, "catenoid axial extent");

    std::vector<std::string> argv_storage{"rigidity"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return kExitValidation;
    }

    cfg.mode = mode == "exact" ? Mode::Exact : Mode::Float;
    cfg.format = format == "csv" ? Format::Csv : format == "tsv" ? Format::Tsv : Format::Json;
    if (n_opt->count() > 0) cfg.n = n_value;
    if (theta_opt->count() > 0) cfg.theta = theta_opt->as<double>();

    try {
        Output o = dispatch(cfg, in);
        const std::string text = render(o, cfg.format);
        if (cfg.output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output_path);
            if (!file) throw InvalidArgument("cannot open output file '" + cfg.output_path + "'");
            file << text;
        }
        if (o.numerical_failure) {
            write_error(err, "convergence", "no multi-start run reached the gradient tolerance");
            return kExitNumerical;
        }
        return kExitOk;
    } catch (const NumericalError& e) {
        write_error(err, e.kind(), e.what());
        return kExitNumerical;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what());
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        write_error(err, "invalid-argument", e.what());
        return kExitValidation;
    }
}

}  // namespace rigidity::cli
